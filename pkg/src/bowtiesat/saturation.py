"""Bow-tie (semi-)saturation predicates and the known closed forms for sat/wsat."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb
from typing import Sequence

from .hypercore import Hypergraph, KSet, colex_ksets, find_bowtie, kset_mask


def creates_bowtie(h: Hypergraph, e: Sequence[int]) -> bool:
    e = tuple(sorted(e))
    if e in h.edge_set:
        raise ValueError(f"{e} is already an edge")
    m = kset_mask(e)
    return any((m & f).bit_count() == 1 for f in h.masks)


def find_unforced_kset(h: Hypergraph) -> KSet | None:
    """First missing k-set in colex order whose addition creates no bow tie.

    Elements are chosen largest-first, so the depth-first order is colex. A
    partial set is abandoned once some edge it meets in exactly one vertex
    can no longer be topped up from the smaller labels still available.
    """
    n, k = h.n, h.k
    masks = h.masks
    edge_set = h.edge_set
    by_vertex: list[list[int]] = [[] for _ in range(n + 1)]
    for i, e in enumerate(h.edges):
        for v in e:
            by_vertex[v].append(i)
    counts = [0] * len(masks)

    def rec(chosen: list[int], upper: int) -> KSet | None:
        slots = k - len(chosen)
        if slots == 0:
            if any(c == 1 for c in counts):
                return None
            cand = tuple(reversed(chosen))
            return None if cand in edge_set else cand
        below = (1 << upper) - 1  # labels < upper
        for i, c in enumerate(counts):
            if c == 1 and not (masks[i] & below):
                return None
        # v >= slots leaves enough smaller labels for the rest
        for v in range(slots, upper):
            for i in by_vertex[v]:
                counts[i] += 1
            chosen.append(v)
            found = rec(chosen, v)
            chosen.pop()
            for i in by_vertex[v]:
                counts[i] -= 1
            if found is not None:
                return found
        return None

    return rec([], n + 1)


def find_unforced_kset_naive(h: Hypergraph) -> KSet | None:
    """Plain colex enumeration with a membership test; reference for the pruned search."""
    masks = h.masks
    for e in colex_ksets(h.n, h.k):
        if e in h.edge_set:
            continue
        m = kset_mask(e)
        if not any((m & f).bit_count() == 1 for f in masks):
            return e
    return None


def is_semi_saturated(h: Hypergraph) -> bool:
    return find_unforced_kset(h) is None


@dataclass(frozen=True)
class SaturationReport:
    bowtie: tuple[KSet, KSet] | None
    unforced: KSet | None

    @property
    def bowtie_free(self) -> bool:
        return self.bowtie is None

    @property
    def semi_saturated(self) -> bool:
        return self.unforced is None

    @property
    def saturated(self) -> bool:
        return self.bowtie_free and self.semi_saturated

    @property
    def failure(self) -> str | None:
        if self.saturated:
            return None
        if not self.bowtie_free and not self.semi_saturated:
            return "bowtie_and_unforced"
        return "contains_bowtie" if not self.bowtie_free else "unforced_kset"

    def to_dict(self) -> dict:
        return {
            "bowtie_free": self.bowtie_free,
            "semi_saturated": self.semi_saturated,
            "saturated": self.saturated,
            "failure": self.failure,
            "bowtie": [list(e) for e in self.bowtie] if self.bowtie else None,
            "unforced": list(self.unforced) if self.unforced else None,
        }


def check(h: Hypergraph) -> SaturationReport:
    return SaturationReport(find_bowtie(h), find_unforced_kset(h))


def is_saturated(h: Hypergraph) -> bool:
    return find_bowtie(h) is None and find_unforced_kset(h) is None


@dataclass(frozen=True)
class ClosedForm:
    """A sat/wsat value: exact when lower == upper and `exact` is set."""
    n: int
    k: int
    kind: str
    lower: int
    upper: int
    exact: bool
    note: str = ""

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "kind": self.kind, "lower": self.lower,
                "upper": self.upper, "exact": self.exact, "note": self.note}


class Unsupported(ValueError):
    pass


def _wsat4_sharp_size(n: int) -> int | None:
    """Edge count of the SharpCon-blocks + K4 construction when n allows it."""
    if n % 13 != 4:
        return None
    m = (n - 4) // 13
    if not any(4 * a + 5 * b + 6 * c == m
               for a in range(m // 4 + 1) for b in range(m // 5 + 1) for c in range(m // 6 + 1)):
        return None
    return (6 * n - 11) // 13


def closed_form(n: int, k: int, kind: str = "sat") -> ClosedForm:
    if kind not in ("sat", "wsat"):
        raise Unsupported(f"unknown kind {kind!r}")
    if k not in (2, 3, 4):
        raise Unsupported(f"no closed form for k={k}")
    if n < k:
        raise Unsupported(f"n={n} < k={k}")

    def exact(v, note=""):
        return ClosedForm(n, k, kind, v, v, True, note)

    if k == 2:
        return exact(n // 2, "floor(n/2) independent edges")
    if k == 3:
        v = n // 3 + 3 * ((n - 1) % 3 == 0) + 2 * ((n - 2) % 3 == 0)
        if kind == "sat" or n % 3 == 0 or n == 4:
            return exact(v, "floor(n/3) + 3[3|n-1] + 2[3|n-2]")
        # wsat: at most two isolated vertices; three triples through one vertex
        # cover 7 vertices, which beats K4 for n = 1 mod 3
        lower = ceil((n - 2) / 3)
        upper = n // 3 + 1 if n % 3 == 1 else v
        return ClosedForm(n, k, kind, lower, upper, False, "isolated-vertex bound; not known to be sharp")
    if n <= 6:
        # any two 4-subsets of a 6-set share at least two elements
        return exact(comb(n, 4), "complete hypergraph")
    if kind == "sat":
        return exact(n if n <= 8 else n - 3)
    upper = n if n <= 8 else n - 3
    sharp = _wsat4_sharp_size(n)
    if sharp is not None:
        upper = min(upper, sharp)
    if n >= 100:
        lower = ceil((6 * n - 11) / 13)
        if sharp is not None:
            return exact(sharp, "6n/13 bound, sharp for n = 4 mod 13")
        return ClosedForm(n, k, kind, lower, upper, False, "6n/13 lower bound; not known to be sharp here")
    # at most three isolated vertices, each edge covers four vertices
    lower = ceil((n - 3) / 4)
    return ClosedForm(n, k, kind, lower, upper, False, "isolated-vertex bound only (n < 100)")
