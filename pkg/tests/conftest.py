"""Shared reference implementations and strategies.

The helpers here deliberately avoid the package's own algorithms: plain
itertools enumeration and Python sets only, so they can serve as oracles.
"""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from bowtiesat.graphs import SimpleGraph
from bowtiesat.hypercore import Hypergraph


def ref_creates_bowtie(edges, e) -> bool:
    return any(len(set(e) & set(f)) == 1 for f in edges)


def ref_bowtie_free(h: Hypergraph) -> bool:
    return all(len(set(a) & set(b)) != 1 for a, b in combinations(h.edges, 2))


def ref_unforced(h: Hypergraph):
    """Every missing k-set whose addition makes no bow tie."""
    present = set(h.edges)
    return [e for e in combinations(range(1, h.n + 1), h.k)
            if e not in present and not ref_creates_bowtie(h.edges, e)]


def ref_semi_saturated(h: Hypergraph) -> bool:
    return not ref_unforced(h)


def ref_bowtie_count(h: Hypergraph) -> int:
    return sum(1 for a, b in combinations(h.edges, 2) if len(set(a) & set(b)) == 1)


def nx_graph(g: SimpleGraph):
    import networkx as nx
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@st.composite
def hypergraphs(draw, max_n: int = 8, ks=(2, 3, 4)):
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(min_value=k, max_value=max(k, max_n)))
    universe = list(combinations(range(1, n + 1), k))
    picked = draw(st.sets(st.sampled_from(universe), max_size=min(len(universe), 12)))
    return Hypergraph(n, k, tuple(sorted(picked)))


@st.composite
def simple_graphs(draw, max_n: int = 10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return SimpleGraph.from_edges(n, sorted(chosen))


# acceptance criteria report one line each at the end of the run

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[number] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        verdict, title = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}")
