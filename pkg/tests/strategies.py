from hypothesis import strategies as st

from graph.side_info_graph import SideInfoGraph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, directed: bool = True):
    """Random side-information graphs; undirected ones when directed is False."""
    n = draw(st.integers(min_n, max_n))
    if directed:
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    else:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SideInfoGraph.from_arcs(n, chosen, undirected=not directed)
