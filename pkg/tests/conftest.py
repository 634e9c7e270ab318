import functools
import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from klgraph.bench import all_labeled_graphs
from klgraph.graph import Graph, build_graph


@functools.lru_cache(maxsize=None)
def labeled_graphs(n: int) -> tuple[Graph, ...]:
    """Every labeled graph on n vertices, cached for the whole session."""
    return tuple(all_labeled_graphs(n))


def graphs_up_to(n: int):
    for size in range(n + 1):
        yield from labeled_graphs(size)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes())}
    return build_graph(len(index), [(index[u], index[v]) for u, v in h.edges()])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


@pytest.fixture
def c5() -> Graph:
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


# acceptance criteria report: one PASS/FAIL line per criterion in the summary

_CRITERIA: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}")
