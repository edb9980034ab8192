"""k-uniform hypergraphs on [1..n] and the structural predicates used by the
saturation checks: bow ties, twins, components and the 1/deg edge weights."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

KSet = tuple[int, ...]

HEAVY_THRESHOLD = Fraction(13, 6)


class HypergraphError(ValueError):
    pass


class ParseError(HypergraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def make_kset(elements: Iterable[int], n: int | None = None, k: int | None = None) -> KSet:
    """Canonical (sorted) KSet, validated against [1..n] and size k when given."""
    s = tuple(sorted(int(x) for x in elements))
    if len(set(s)) != len(s):
        raise HypergraphError(f"repeated element in {s}")
    if k is not None and len(s) != k:
        raise HypergraphError(f"{s} has {len(s)} elements, expected {k}")
    if n is not None and s and (s[0] < 1 or s[-1] > n):
        raise HypergraphError(f"{s} not inside [1..{n}]")
    return s


def kset_mask(a: Iterable[int]) -> int:
    m = 0
    for x in a:
        m |= 1 << x
    return m


def mask_elements(m: int) -> KSet:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return tuple(out)


def intersection_size(a: Sequence[int], b: Sequence[int]) -> int:
    return (kset_mask(a) & kset_mask(b)).bit_count()


# colex order: compare the largest elements first
def colex_rank(a: Sequence[int]) -> int:
    return sum(comb(x - 1, i + 1) for i, x in enumerate(sorted(a)))


def colex_unrank(r: int, k: int) -> KSet:
    out = []
    for i in range(k, 0, -1):
        x = i
        while comb(x, i) <= r:
            x += 1
        # x is the least value with C(x, i) > r, so the element is x
        r -= comb(x - 1, i)
        out.append(x)
    return tuple(reversed(out))


def colex_ksets(n: int, k: int) -> Iterator[KSet]:
    """All k-subsets of [1..n] in colex order."""
    if k == 0:
        yield ()
        return
    for top in range(k, n + 1):
        for rest in colex_ksets(top - 1, k - 1):
            yield rest + (top,)


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: tuple[KSet, ...] = ()

    def __post_init__(self):
        if self.k < 1:
            raise HypergraphError("uniformity must be positive")
        if self.k > self.n:
            raise HypergraphError(f"k={self.k} exceeds n={self.n}")
        canon = tuple(make_kset(e, self.n, self.k) for e in self.edges)
        if len(set(canon)) != len(canon):
            seen = set()
            dup = next(e for e in canon if e in seen or seen.add(e))
            raise HypergraphError(f"duplicate edge {dup}")
        object.__setattr__(self, "edges", canon)

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n, k, tuple(tuple(e) for e in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e) -> bool:
        return tuple(sorted(e)) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[KSet]:
        return frozenset(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(kset_mask(e) for e in self.edges)

    @cached_property
    def incidence(self) -> dict[int, frozenset[int]]:
        """vertex -> indices of the edges containing it (every vertex of [1..n] present)."""
        inc: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].add(i)
        return {v: frozenset(s) for v, s in inc.items()}

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> dict[int, int]:
        return {v: len(s) for v, s in self.incidence.items()}

    def isolated_vertices(self) -> list[int]:
        return [v for v, s in self.incidence.items() if not s]

    def with_edge(self, e: Iterable[int]) -> "Hypergraph":
        return Hypergraph(self.n, self.k, self.edges + (tuple(e),))

    def relabel(self, offset: int, n: int | None = None) -> "Hypergraph":
        return Hypergraph(n if n is not None else self.n + offset, self.k,
                          tuple(tuple(v + offset for v in e) for e in self.edges))

    def to_text(self, comment: str | None = None) -> str:
        lines = []
        if comment:
            lines += [f"# {c}" for c in comment.splitlines()]
        lines.append(f"{self.n} {self.k}")
        lines += [" ".join(map(str, e)) for e in self.edges]
        return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """Read the line format: header `n k`, then one increasing edge per line, `#` comments."""
    header = None
    edges: list[KSet] = []
    seen: dict[KSet, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2:
                raise ParseError("header must be `n k`", lineno)
            n, k = nums
            if k < 1 or n < k:
                raise ParseError(f"invalid header n={n} k={k}", lineno)
            header = (n, k)
            continue
        n, k = header
        if len(nums) != k:
            raise ParseError(f"edge has {len(nums)} vertices, expected {k}", lineno)
        if any(b <= a for a, b in zip(nums, nums[1:])):
            raise ParseError("edge vertices must be strictly increasing", lineno)
        if nums[0] < 1 or nums[-1] > n:
            raise ParseError(f"vertex outside [1..{n}]", lineno)
        e = tuple(nums)
        if e in seen:
            raise ParseError(f"duplicate edge (first on line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    if header is None:
        raise ParseError("missing `n k` header")
    return Hypergraph(header[0], header[1], tuple(edges))


def find_bowtie(h: Hypergraph) -> tuple[KSet, KSet] | None:
    """First pair of edges (in edge order) meeting in exactly one vertex."""
    masks = h.masks
    for i, j in combinations(range(len(masks)), 2):
        if (masks[i] & masks[j]).bit_count() == 1:
            return h.edges[i], h.edges[j]
    return None


def is_bowtie_free(h: Hypergraph) -> bool:
    return find_bowtie(h) is None


def twin_classes(h: Hypergraph) -> list[list[int]]:
    """Vertices grouped by identical incidence; isolated vertices form one class."""
    groups: dict[frozenset[int], list[int]] = defaultdict(list)
    for v in range(1, h.n + 1):
        groups[h.incidence[v]].append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def twin_pairs(h: Hypergraph) -> list[tuple[int, int]]:
    pairs = [p for cls in twin_classes(h) for p in combinations(cls, 2)]
    return sorted(pairs)


def components(h: Hypergraph) -> list[list[int]]:
    parent = list(range(h.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        r = find(e[0])
        for v in e[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    groups: dict[int, list[int]] = defaultdict(list)
    for v in range(1, h.n + 1):
        groups[find(v)].append(v)
    return sorted(groups.values(), key=lambda g: g[0])


def is_connected(h: Hypergraph) -> bool:
    return len(components(h)) == 1


@dataclass(frozen=True)
class EdgeWeight:
    edge: KSet
    phi: Fraction
    degrees: tuple[int, ...]  # sorted degree sequence of the edge's vertices
    heavy: bool
    special: bool

    @property
    def normal(self) -> bool:
        return not self.special


def weight_report(h: Hypergraph) -> list[EdgeWeight]:
    """phi(e) = sum of 1/deg(v) over v in e, with heavy (phi > 13/6) and
    special (contains twins of common degree 1 or 2) flags, one entry per edge."""
    deg = h.degrees()
    inc = h.incidence
    out = []
    for e in h.edges:
        phi = sum((Fraction(1, deg[v]) for v in e), Fraction(0))
        special = any(inc[a] == inc[b] and deg[a] in (1, 2) for a, b in combinations(e, 2))
        out.append(EdgeWeight(e, phi, tuple(sorted(deg[v] for v in e)), phi > HEAVY_THRESHOLD, special))
    return out


@dataclass
class WeightDiagnostics:
    """Degree-weight facts that must hold on every 4-uniform semi-saturated hypergraph."""
    special_edges: list[KSet] = field(default_factory=list)
    heavy_normal_edges: list[KSet] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def weight_diagnostics(h: Hypergraph) -> WeightDiagnostics:
    report = weight_report(h)
    by_edge = {w.edge: w for w in report}
    inc = h.incidence
    deg = h.degrees()
    diag = WeightDiagnostics()
    diag.special_edges = [w.edge for w in report if w.special]
    if len(diag.special_edges) > 3:
        diag.problems.append(f"{len(diag.special_edges)} special edges (more than 3)")
    for w in report:
        if not (w.heavy and w.normal):
            continue
        diag.heavy_normal_edges.append(w.edge)
        d = w.degrees
        if not (d[:3] == (1, 2, 2) and 2 <= d[3] <= 5):
            diag.problems.append(f"heavy normal edge {w.edge} has degrees {d}")
            continue
        e_idx = h.edges.index(w.edge)
        twos = [v for v in w.edge if deg[v] == 2]
        # with x == 2 any two of the degree-2 vertices play the roles of b, c
        for b, c in combinations(twos, 2):
            (fi,) = inc[b] - {e_idx}
            (hi,) = inc[c] - {e_idx}
            f, g = by_edge[h.edges[fi]], by_edge[h.edges[hi]]
            if fi == hi:
                diag.problems.append(f"{w.edge}: vertices {b},{c} share both edges")
            if f.special or g.special:
                diag.problems.append(f"{w.edge}: neighbouring edge through {b} or {c} is special")
            if min(f.phi, g.phi) > 2:
                diag.problems.append(f"{w.edge}: both neighbours through {b},{c} have phi > 2")
    return diag


def phi_total(h: Hypergraph) -> Fraction:
    return sum((w.phi for w in weight_report(h)), Fraction(0))
