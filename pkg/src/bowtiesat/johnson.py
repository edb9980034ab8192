"""The generalized Johnson graph J(n, k, 1): k-subsets of [n], adjacent when they
share exactly one element. Vertex i is the k-set of colex rank i."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .hypercore import Hypergraph, KSet, colex_ksets, colex_rank, kset_mask

MATERIALIZE_LIMIT = 4096
DEFAULT_MAX_VERTICES = 1_000_000


class GraphTooLarge(ValueError):
    pass


class JohnsonGraph:
    def __init__(self, n: int, k: int, max_vertices: int = DEFAULT_MAX_VERTICES):
        if not 1 <= k <= n <= 64:
            raise ValueError(f"need 1 <= k <= n <= 64, got n={n} k={k}")
        size = comb(n, k)
        if size > max_vertices:
            raise GraphTooLarge(f"J({n},{k},1) has {size} vertices, budget is {max_vertices}")
        self.n, self.k, self.size = n, k, size
        self.ksets: list[KSet] = list(colex_ksets(n, k))
        self.masks = [kset_mask(s) for s in self.ksets]
        self._rows: list[int] | None = None
        if size <= MATERIALIZE_LIMIT:
            self._rows = [self._row(i) for i in range(size)]

    def __repr__(self):
        return f"JohnsonGraph(n={self.n}, k={self.k})"

    def __len__(self):
        return self.size

    @property
    def degree(self) -> int:
        return self.k * comb(self.n - self.k, self.k - 1)

    def _row(self, i: int) -> int:
        mi = self.masks[i]
        row = 0
        for j, mj in enumerate(self.masks):
            if (mi & mj).bit_count() == 1:
                row |= 1 << j
        return row

    @property
    def rows(self) -> list[int]:
        """Open neighbourhoods as bitmasks over vertex indices."""
        if self._rows is None:
            raise GraphTooLarge(f"adjacency rows not materialized for {self.size} vertices")
        return self._rows

    def adjacent(self, i: int, j: int) -> bool:
        return (self.masks[i] & self.masks[j]).bit_count() == 1

    def neighbors(self, i: int) -> list[int]:
        if self._rows is not None:
            r, out = self._rows[i], []
            while r:
                low = r & -r
                out.append(low.bit_length() - 1)
                r ^= low
            return out
        return [j for j in range(self.size) if self.adjacent(i, j)]

    def rank(self, s: Iterable[int]) -> int:
        s = tuple(sorted(s))
        if len(s) != self.k or s[0] < 1 or s[-1] > self.n:
            raise ValueError(f"{s} is not a {self.k}-subset of [1..{self.n}]")
        return colex_rank(s)

    def unrank(self, i: int) -> KSet:
        if not 0 <= i < self.size:
            raise IndexError(i)
        return self.ksets[i]

    def edge_list_text(self) -> str:
        """Whitespace edge list (0-based vertex indices) for third-party tools."""
        m = self.size * self.degree // 2
        lines = [f"# J({self.n},{self.k},1); vertex i is the k-set of colex rank i", f"{self.size}"]
        for i in range(self.size):
            lines += [f"{i} {j}" for j in self.neighbors(i) if j > i]
        assert len(lines) == m + 2
        return "\n".join(lines) + "\n"


def build(n: int, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> JohnsonGraph:
    return JohnsonGraph(n, k, max_vertices)


def hypergraph_to_indices(h: Hypergraph, j: JohnsonGraph) -> frozenset[int]:
    if (h.n, h.k) != (j.n, j.k):
        raise ValueError(f"hypergraph is ({h.n},{h.k}), graph is ({j.n},{j.k})")
    return frozenset(colex_rank(e) for e in h.edges)


def indices_to_hypergraph(indices: Iterable[int], j: JohnsonGraph) -> Hypergraph:
    return Hypergraph(j.n, j.k, tuple(j.unrank(i) for i in sorted(indices)))


@dataclass(frozen=True)
class SetCheck:
    independent: bool
    dominating: bool

    @property
    def maximal_independent(self) -> bool:
        return self.independent and self.dominating


def check_set(j: JohnsonGraph, s: Iterable[int]) -> SetCheck:
    s = sorted(set(s))
    if any(not 0 <= i < j.size for i in s):
        raise IndexError("vertex index out of range")
    independent = not any(j.adjacent(a, b) for x, a in enumerate(s) for b in s[x + 1:])
    members = set(s)
    dominating = all(
        i in members or any(j.adjacent(i, a) for a in s) for i in range(j.size)
    )
    return SetCheck(independent, dominating)

