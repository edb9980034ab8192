"""Finite case checks bounding the edges a connected twin-free B4-saturated
hypergraph must place on a small core: the P3 enumeration and the constrained
J(8,4,1) searches for the P4 and S4 trees.

Each check yields one CaseReport per sub-case; `summarize` folds a stream into
a single verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .exact_search import INDEPENDENT_DOMINATING, SearchProblem, solve
from .johnson import build

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"

P3_BASE = ((1, 2, 3, 4), (3, 4, 5, 6))
P4_BASE = ((1, 2, 3, 4), (3, 4, 5, 6), (5, 6, 7, 8))
P4_CASE_EDGES = {"A": ((1, 3, 5, 7),), "B": ((1, 3, 5, 6), (3, 4, 5, 7))}
P4_TRIPLES = ((1, 3, 4), (5, 6, 7))
S4_BASE = ((1, 2, 3, 4), (1, 2, 5, 6), (1, 2, 7, 8))
S4_CASE_EDGE = (1, 3, 5, 7)
S4_TRIPLES = tuple((1, 2, x) for x in range(3, 9))
P3_THRESHOLD = 6
TREE_THRESHOLD = 8


@dataclass
class CaseReport:
    case: str
    subcase: dict
    quantities: dict
    verdict: str
    counters: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"case": self.case, "subcase": self.subcase, "quantities": self.quantities,
                "verdict": self.verdict, "counters": self.counters}


def _meet(a, b) -> int:
    return len(set(a) & set(b))


def _sets(xs) -> list[list[int]]:
    return [list(x) for x in xs]


def least_x_pairs(z: int, shift: int = 0) -> int:
    """Least x >= 0 with C(x + shift, 2) >= z."""
    x = 0
    while comb(x + shift, 2) < z:
        x += 1
    return x


def p3_triples(base_filter: bool = True) -> list[tuple[int, ...]]:
    triples = list(combinations(range(1, 7), 3))
    if base_filter:
        triples = [t for t in triples if all(_meet(t, b) != 1 for b in P3_BASE)]
    return triples


def _intersecting_families(triples: list[tuple[int, ...]]) -> Iterator[list[tuple[int, ...]]]:
    """Every subfamily with no two disjoint members, in include-last branching order."""
    def rec(i, chosen):
        if i == len(triples):
            yield list(chosen)
            return
        yield from rec(i + 1, chosen)
        t = triples[i]
        if all(set(t) & set(s) for s in chosen):
            chosen.append(t)
            yield from rec(i + 1, chosen)
            chosen.pop()
    yield from rec(0, [])


def p3_subcase(S: list[tuple[int, ...]]) -> dict:
    """y, z and the x bounds for one family S, all recomputed from scratch."""
    y = sum(1 for A in combinations(range(1, 7), 4) if all(_meet(A, s) >= 2 for s in S))
    z = sum(1 for s, t in combinations(S, 2) if _meet(s, t) == 1)
    x_min = least_x_pairs(z)
    x_alt = least_x_pairs(z, shift=1)
    return {"y": y, "z": z, "x_min": x_min, "x_alt": x_alt,
            "bound": x_min + y, "bound_alt": x_alt + y}


def p3_verify(base_filter: bool = True) -> Iterator[CaseReport]:
    case = "P3" if base_filter else "P3-unfiltered"
    for S in _intersecting_families(p3_triples(base_filter)):
        q = p3_subcase(S)
        verdict = PASS if q["bound"] >= P3_THRESHOLD else FAIL
        q["alt_verdict"] = PASS if q["bound_alt"] >= P3_THRESHOLD else FAIL
        yield CaseReport(case, {"S": _sets(S)}, q, verdict)


def _constrained_case(case: str, subcase: dict, required, Y, j) -> CaseReport:
    required = [tuple(e) for e in required]
    allowed_sets = [A for A in j.ksets if all(_meet(A, t) != 1 for t in Y)]
    bad_pairs = [(a, b) for a, b in combinations(required, 2) if _meet(a, b) == 1]
    outside = [e for e in required if any(_meet(e, t) == 1 for t in Y)]
    subcase = dict(subcase, Y=_sets(Y), required=_sets(required))
    if bad_pairs or outside:
        why = {"bowtie_in_required": _sets(sum(bad_pairs, ())),
               "required_outside_allowed": _sets(outside)}
        return CaseReport(case, subcase, why, VACUOUS, {"allowed": len(allowed_sets)})
    allowed = frozenset(j.rank(A) for A in allowed_sets)
    p = SearchProblem(j, INDEPENDENT_DOMINATING, required=frozenset(j.rank(e) for e in required),
                      allowed=allowed, witness_cap=1)
    res = solve(p)
    witness = [list(j.unrank(i)) for i in res.witnesses[0]] if res.witnesses else None
    quantities = {"optimum": res.optimum if res.feasible else None, "count": res.count,
                  "witness": witness}
    verdict = PASS if res.feasible and res.optimum >= TREE_THRESHOLD else FAIL
    return CaseReport(case, subcase, quantities, verdict,
                      {"allowed": len(allowed), "nodes": res.nodes_explored})


def compatible_triples(required: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Triples of [8] that meet no required edge in exactly one vertex."""
    required = list(required)
    return [t for t in combinations(range(1, 9), 3) if all(_meet(t, e) != 1 for e in required)]


def _subsets(items):
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def p4_verify(full_universe: bool = False) -> Iterator[CaseReport]:
    """Case edge A or B, times every subset Y of the external triples.

    With `full_universe` the triples range over every triple compatible with
    the required edges instead of the two-triple list.
    """
    j = build(8, 4)
    case = "P4-full" if full_universe else "P4"
    for label, extra in P4_CASE_EDGES.items():
        required = P4_BASE + extra
        universe = compatible_triples(required) if full_universe else list(P4_TRIPLES)
        for Y in _subsets(universe):
            yield _constrained_case(case, {"case_edges": label}, required, Y, j)


def s4_verify(full_universe: bool = False) -> Iterator[CaseReport]:
    j = build(8, 4)
    case = "S4-full" if full_universe else "S4"
    required = S4_BASE + (S4_CASE_EDGE,)
    universe = compatible_triples(required) if full_universe else list(S4_TRIPLES)
    for Y in _subsets(universe):
        yield _constrained_case(case, {}, required, Y, j)


def summarize(case: str, reports: Iterable[CaseReport]) -> CaseReport:
    counts = {PASS: 0, FAIL: 0, VACUOUS: 0}
    worst = None
    for r in reports:
        counts[r.verdict] += 1
        if r.verdict == FAIL and worst is None:
            worst = r.subcase
    verdict = PASS if counts[FAIL] == 0 and counts[PASS] > 0 else FAIL
    q = {"first_failure": worst}
    return CaseReport(case, {"summary": True}, q, verdict,
                      {"subcases": sum(counts.values()), **counts})


CASES = {"p3": p3_verify, "p4": p4_verify, "s4": s4_verify}
# the wider enumerations, reported next to (never instead of) the primary ones
DIAGNOSTICS = {
    "p3": lambda: p3_verify(base_filter=False),
    "p4": lambda: p4_verify(full_universe=True),
    "s4": lambda: s4_verify(full_universe=True),
}
