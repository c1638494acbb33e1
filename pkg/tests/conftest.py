import sys

from hypothesis import strategies as st

from prdom import Graph, make_path, tree_from_prufer


@st.composite
def labeled_trees(draw, min_n=1, max_n=16):
    """Uniform labeled trees via random Prufer sequences."""
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return make_path(n)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_from_prufer(seq)


@st.composite
def small_graphs(draw, min_n=1, max_n=9):
    """Arbitrary simple graphs, cycles included."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph(n, picks)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
