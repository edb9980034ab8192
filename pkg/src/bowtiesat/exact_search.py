"""Exact minimum dominating / independent dominating set search with optimum
counting, plus an exhaustive oracle that shares no pruning with the solver.

Graphs are anything exposing `rows`: a list of open-neighbourhood bitmasks.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable

DOMINATING = "dominating"
INDEPENDENT_DOMINATING = "independent_dominating"
MODES = (DOMINATING, INDEPENDENT_DOMINATING)

DEFAULT_WITNESS_CAP = 1000


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search was complete."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"node budget exhausted after {nodes} nodes; result would be incomplete")


class OracleTooLarge(ValueError):
    pass


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


@dataclass(frozen=True)
class SearchProblem:
    graph: Any
    mode: str = INDEPENDENT_DOMINATING
    required: frozenset[int] = frozenset()
    allowed: frozenset[int] | None = None  # None: every vertex
    dominate: frozenset[int] | None = None  # None: the allowed set
    upper_bound: int | None = None  # ignore solutions larger than this
    witness_cap: int = DEFAULT_WITNESS_CAP
    node_budget: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        for name in ("required", "allowed", "dominate"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, frozenset(v))
        n = self.size
        for name in ("required", "allowed", "dominate"):
            v = getattr(self, name)
            if v is not None and any(not 0 <= i < n for i in v):
                raise ValueError(f"{name} contains an index outside [0, {n})")
        if not self.required <= self.allowed_set:
            raise ValueError("required vertices must be allowed")

    @property
    def size(self) -> int:
        return len(self.graph.rows)

    @property
    def allowed_set(self) -> frozenset[int]:
        return frozenset(range(self.size)) if self.allowed is None else self.allowed

    @property
    def dominate_set(self) -> frozenset[int]:
        return self.allowed_set if self.dominate is None else self.dominate

    @property
    def independent(self) -> bool:
        return self.mode == INDEPENDENT_DOMINATING


@dataclass
class SearchResult:
    optimum: float  # an int, or math.inf when nothing qualifies
    count: int
    witnesses: list[tuple[int, ...]]
    nodes_explored: int = field(default=0, compare=False)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def feasible(self) -> bool:
        return self.count > 0

    def to_dict(self, labels=None) -> dict:
        wit = [list(w) for w in self.witnesses]
        d = {
            "optimum": self.optimum if self.feasible else None,
            "feasible": self.feasible,
            "count": self.count,
            "witnesses": wit,
            "nodes_explored": self.nodes_explored,
            "elapsed_s": round(self.elapsed, 3),
        }
        if labels is not None:
            d["witness_sets"] = [[list(labels(i)) for i in w] for w in self.witnesses]
        return d


class _Tally:
    __slots__ = ("best", "count", "witnesses", "cap", "nodes", "budget")

    def __init__(self, best: float, cap: int, budget: int | None):
        self.best = best
        self.count = 0
        self.witnesses: list[int] = []
        self.cap = cap
        self.nodes = 0
        self.budget = budget

    def record(self, size: int, chosen: int):
        if self.count == 0 or size < self.best:
            self.best, self.count, self.witnesses = size, 0, []
        self.count += 1
        if len(self.witnesses) < self.cap:
            self.witnesses.append(chosen)


def _search(closed: list[int], independent: bool, tally: _Tally,
            chosen: int, size: int, undom: int, elig: int) -> None:
    tally.nodes += 1
    if tally.budget is not None and tally.nodes > tally.budget:
        raise SearchBudgetExceeded(tally.nodes)
    if not undom:
        if size <= tally.best:
            tally.record(size, chosen)
        return
    slack = tally.best - size  # vertices still affordable
    if slack < 1:
        return
    remaining = undom.bit_count()
    best_cover = 0
    e = elig
    while e:
        low = e & -e
        c = (closed[low.bit_length() - 1] & undom).bit_count()
        if c > best_cover:
            best_cover = c
        e ^= low
    if best_cover == 0 or -(-remaining // best_cover) > slack:
        return
    # undominated vertex with fewest eligible dominators, ties to the lowest index
    pivot_dom, fewest = 0, None
    u = undom
    while u:
        low = u & -u
        doms = closed[low.bit_length() - 1] & elig
        c = doms.bit_count()
        if fewest is None or c < fewest:
            fewest, pivot_dom = c, doms
            if c <= 1:
                break
        u ^= low
    if not pivot_dom:
        return
    for d in _bits(pivot_dom):
        bit = 1 << d
        elig &= ~bit  # later branches exclude earlier dominators: each set is reached once
        child_elig = elig & ~closed[d] if independent else elig
        _search(closed, independent, tally, chosen | bit, size + 1, undom & ~closed[d], child_elig)


def _prepare(p: SearchProblem):
    rows = p.graph.rows
    closed = [r | (1 << i) for i, r in enumerate(rows)]
    required = _mask(p.required)
    allowed = _mask(p.allowed_set)
    undom = _mask(p.dominate_set)
    elig = allowed & ~required
    for i in p.required:
        undom &= ~closed[i]
        if p.independent:
            elig &= ~closed[i]
    return closed, required, undom, elig


def _required_independent(p: SearchProblem) -> bool:
    rows = p.graph.rows
    req = _mask(p.required)
    return not any(rows[i] & req for i in p.required)


def _top_branches(closed, undom, elig):
    """The pivot's dominators, each with the eligibility mask its branch starts from."""
    pivot_dom, fewest = 0, None
    for v in _bits(undom):
        doms = closed[v] & elig
        if fewest is None or doms.bit_count() < fewest:
            fewest, pivot_dom = doms.bit_count(), doms
    out = []
    for d in _bits(pivot_dom):
        elig &= ~(1 << d)
        out.append((d, elig))
    return out


def _run_branch(args):
    closed, independent, required, size0, undom, d, elig, best, cap, budget = args
    tally = _Tally(best, cap, budget)
    bit = 1 << d
    child_elig = elig & ~closed[d] if independent else elig
    _search(closed, independent, tally, required | bit, size0 + 1, undom & ~closed[d], child_elig)
    return tally.best, tally.count, tally.witnesses, tally.nodes


def _finish(p: SearchProblem, best, count, witnesses, nodes, t0) -> SearchResult:
    wit = [tuple(_bits(w)) for w in witnesses]
    return SearchResult(best if count else math.inf, count, wit, nodes, time.perf_counter() - t0)


def solve(p: SearchProblem, threads: int | None = None) -> SearchResult:
    """Exact optimum and exact number of optimal solutions.

    The search splits at the first pivot; branches are merged in branch order,
    so the result does not depend on `threads`.
    """
    t0 = time.perf_counter()
    if threads is None:
        threads = int(os.environ.get("BOWTIESAT_THREADS", "1"))
    n = p.size
    if p.independent and not _required_independent(p):
        return _finish(p, 0, 0, [], 0, t0)
    closed, required, undom, elig = _prepare(p)
    size0 = len(p.required)
    best = p.upper_bound if p.upper_bound is not None else n + 1
    if size0 > best:
        return _finish(p, 0, 0, [], 0, t0)
    if not undom:
        return _finish(p, size0, 1, [required], 1, t0)

    branches = _top_branches(closed, undom, elig)
    jobs = [(closed, p.independent, required, size0, undom, d, e, best, p.witness_cap, p.node_budget)
            for d, e in branches]
    results = []
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_branch, jobs))
    else:
        # sequential runs feed the incumbent forward; counts and witnesses are unaffected
        for job in jobs:
            r = _run_branch(job[:7] + (best,) + job[8:])
            if r[1]:
                best = min(best, r[0])
            results.append(r)
    nodes = 1 + sum(r[3] for r in results)
    if p.node_budget is not None and nodes > p.node_budget:
        raise SearchBudgetExceeded(nodes)
    found = [r for r in results if r[1]]
    if not found:
        return _finish(p, 0, 0, [], nodes, t0)
    opt = min(r[0] for r in found)
    count, witnesses = 0, []
    for b, c, w, _ in found:
        if b == opt:
            count += c
            witnesses.extend(w)
    return _finish(p, opt, count, witnesses[:p.witness_cap], nodes, t0)


ORACLE_MAX_VERTICES = 40
ORACLE_MAX_DEPTH = 6


def brute_force_oracle(p: SearchProblem) -> SearchResult:
    """Exhaustive enumeration by increasing size using plain Python sets.

    Independent mode walks every independent set that extends `required`;
    dominating mode walks all combinations. Feasible when the graph has at most
    40 vertices, or when `upper_bound` is at most 6.
    """
    t0 = time.perf_counter()
    n = p.size
    limit = p.upper_bound if p.upper_bound is not None else n
    if n > ORACLE_MAX_VERTICES and limit > ORACLE_MAX_DEPTH:
        raise OracleTooLarge(f"{n} vertices and size limit {limit}: too large to enumerate")
    adj = [set(_bits(r)) for r in p.graph.rows]
    req = sorted(p.required)
    target = set(p.dominate_set)
    pool = sorted(p.allowed_set - p.required)

    def dominated(sol):
        covered = set(sol)
        for v in sol:
            covered |= adj[v]
        return target <= covered

    def independent(sol):
        return all(b not in adj[a] for a, b in combinations(sol, 2))

    if p.independent and not independent(req):
        return SearchResult(math.inf, 0, [], 0, time.perf_counter() - t0)

    checked = 0
    for extra in range(0, limit - len(req) + 1):
        hits = []
        if p.independent:
            candidates = [v for v in pool if not adj[v] & set(req)]
            for combo in _independent_sets(candidates, adj, extra):
                checked += 1
                sol = tuple(sorted(req + list(combo)))
                if dominated(sol):
                    hits.append(sol)
        else:
            for combo in combinations(pool, extra):
                checked += 1
                sol = tuple(sorted(req + list(combo)))
                if dominated(sol):
                    hits.append(sol)
        if hits:
            hits.sort()
            return SearchResult(len(req) + extra, len(hits), hits[:p.witness_cap], checked,
                                time.perf_counter() - t0)
    return SearchResult(math.inf, 0, [], checked, time.perf_counter() - t0)


def _independent_sets(candidates: list[int], adj: list[set[int]], size: int):
    """All independent `size`-subsets of `candidates`, in lexicographic order."""
    def rec(start, picked):
        if len(picked) == size:
            yield tuple(picked)
            return
        for i in range(start, len(candidates)):
            v = candidates[i]
            if any(v in adj[w] for w in picked):
                continue
            picked.append(v)
            yield from rec(i + 1, picked)
            picked.pop()
    yield from rec(0, [])


def canonical_witnesses(result: SearchResult) -> set[tuple[int, ...]]:
    return {tuple(sorted(w)) for w in result.witnesses}
