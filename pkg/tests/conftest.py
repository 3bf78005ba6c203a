import pytest
from hypothesis import HealthCheck, settings

from config.settings import get_settings
from graph.generators import clique, cycle, small_strict_improvement_witness, strict_improvement_witness
from graph.sig_format import write_sig

settings.register_profile("icx", deadline=None, max_examples=25, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("icx")


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are re-read for every test so that monkeypatched ICX_* variables apply."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def directed_c3():
    return cycle(3, directed=True)


@pytest.fixture
def k4():
    return clique(4)


@pytest.fixture
def witness():
    return strict_improvement_witness()


@pytest.fixture
def sig_file(tmp_path):
    """Write a graph to a .sig file and return its path."""
    def write(g, name="graph.sig"):
        path = tmp_path / name
        path.write_text(write_sig(g))
        return path
    return write


@pytest.fixture
def small_witness():
    return small_strict_improvement_witness()
