import pytest

from graph.generators import cycle, random_graph
from graph.sig_format import parse_sig, read_sig, write_sig
from utils.exceptions import InputException, ParseException


def test_parse_directed_one_based():
    g = parse_sig("# triangle\nn 3\ne 1 2\ne 2 3\ne 3 1\n")
    assert g.arcs() == [(0, 1), (1, 2), (2, 0)]
    assert not g.is_undirected


def test_parse_undirected_directive():
    g = parse_sig("n 5\nundirected\n" + "".join(f"e {i} {i % 5 + 1}\n" for i in range(1, 6)))
    assert g == cycle(5)


@pytest.mark.parametrize("text, line", [
    ("n 3\ne 1 4\n", 2),
    ("n 3\ne 1 x\n", 2),
    ("n 3\n\n# fine\ne 2 2\n", 4),
    ("e 1 2\nn 3\n", 1),
    ("n 3\ne 1 2\nundirected\n", 3),
    ("n 3\nq 1 2\n", 2),
    ("n 2\nn 3\n", 2),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseException) as info:
        parse_sig(text, source="bad.sig")
    assert info.value.line == line
    assert f"bad.sig:{line}" in info.value.message
    assert info.value.exit_code == 2


def test_missing_count():
    with pytest.raises(ParseException):
        parse_sig("# nothing\n")


def test_write_is_canonical(c5):
    text = write_sig(c5, comment="five cycle")
    assert text.startswith("# five cycle\nn 5\nundirected\n")
    assert text.count("\ne ") == 5
    assert parse_sig(text) == c5


def test_directed_file_round_trip(tmp_path):
    g = random_graph(7, 0.4, seed=3, directed=True)
    path = tmp_path / "g.sig"
    path.write_text(write_sig(g))
    assert read_sig(path) == g


def test_unreadable_file(tmp_path):
    with pytest.raises(InputException):
        read_sig(tmp_path / "missing.sig")
