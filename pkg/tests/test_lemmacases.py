from collections import Counter
from itertools import combinations

import pytest

from bowtiesat.lemmacases import (
    FAIL, P3_BASE, P4_BASE, P4_CASE_EDGES, PASS, S4_BASE, S4_CASE_EDGE, S4_TRIPLES, VACUOUS,
    _constrained_case, compatible_triples, least_x_pairs, p3_subcase, p3_triples, p3_verify,
    p4_verify, s4_verify, summarize,
)
from bowtiesat.johnson import build


def test_least_x_pairs():
    assert [least_x_pairs(z) for z in range(8)] == [0, 2, 3, 3, 4, 4, 4, 5]
    assert least_x_pairs(0, shift=1) == 0 and least_x_pairs(1, shift=1) == 1


class TestP3:
    def test_empty_family(self):
        q = p3_subcase([])
        assert (q["z"], q["x_min"], q["y"]) == (0, 0, 15)

    def test_single_triple(self):
        q = p3_subcase([(3, 4, 5)])
        assert (q["z"], q["x_min"]) == (0, 0)
        assert q["y"] == sum(1 for A in combinations(range(1, 7), 4) if len(set(A) & {3, 4, 5}) >= 2)
        assert q["y"] == 12

    def test_admissible_triples_respect_base(self):
        for t in p3_triples():
            assert all(len(set(t) & set(b)) != 1 for b in P3_BASE)

    def test_every_admissible_family_passes(self):
        reports = list(p3_verify())
        assert len(reports) == 1296
        assert all(r.verdict == PASS for r in reports)
        assert min(r.quantities["bound"] for r in reports) == 6

    def test_families_are_pairwise_intersecting(self):
        for r in p3_verify():
            S = r.subcase["S"]
            assert all(set(a) & set(b) for a, b in combinations(S, 2))


class TestP4:
    def test_required_sets_are_independent(self):
        for extra in P4_CASE_EDGES.values():
            req = P4_BASE + extra
            assert all(len(set(a) & set(b)) != 1 for a, b in combinations(req, 2))

    def test_external_triples(self):
        assert compatible_triples(P4_BASE) == [(1, 3, 4), (2, 3, 4), (5, 6, 7), (5, 6, 8)]

    def test_case_a_unconstrained(self):
        r = _constrained_case("P4", {}, P4_BASE + P4_CASE_EDGES["A"], (), build(8, 4))
        assert r.verdict == PASS and r.quantities["optimum"] >= 8

    def test_case_a_both_triples(self):
        r = _constrained_case("P4", {}, P4_BASE + P4_CASE_EDGES["A"],
                              ((1, 3, 4), (5, 6, 7)), build(8, 4))
        assert r.verdict == PASS and r.quantities["optimum"] >= 8

    def test_all_subcases(self):
        reports = list(p4_verify())
        assert len(reports) == 8
        assert all(r.verdict == PASS and r.quantities["optimum"] >= 8 for r in reports)


class TestS4:
    def test_base_is_independent(self):
        req = S4_BASE + (S4_CASE_EDGE,)
        assert {len(set(a) & set(b)) for a, b in combinations(req, 2)} == {2}

    def test_all_triples_is_vacuous(self):
        r = _constrained_case("S4", {}, S4_BASE + (S4_CASE_EDGE,), S4_TRIPLES, build(8, 4))
        assert r.verdict == VACUOUS
        assert r.quantities["required_outside_allowed"]

    def test_no_triples(self):
        r = _constrained_case("S4", {}, S4_BASE + (S4_CASE_EDGE,), (), build(8, 4))
        assert r.verdict == PASS and r.quantities["optimum"] >= 8

    def test_all_subcases(self):
        reports = list(s4_verify())
        assert Counter(r.verdict for r in reports) == {PASS: 8, VACUOUS: 56}
        assert all(r.quantities["optimum"] >= 8 for r in reports if r.verdict == PASS)


def test_summarize():
    s = summarize("P4", p4_verify())
    assert s.verdict == PASS and s.counters["subcases"] == 8 and s.counters[PASS] == 8


def test_summarize_reports_first_failure():
    reports = list(p4_verify())
    reports[3].verdict = FAIL
    s = summarize("P4", reports)
    assert s.verdict == FAIL and s.quantities["first_failure"] == reports[3].subcase


@pytest.mark.parametrize("verify", [p4_verify, s4_verify])
def test_wider_universe_agrees(verify):
    assert all(r.verdict != FAIL for r in verify(full_universe=True))
