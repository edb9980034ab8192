"""Generators for the bow-tie (semi-)saturated families."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graphs import SimpleGraph, efficient_dominating_sets, girth, load_fixture
from .hypercore import Hypergraph

FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))

# r -> fixture with a perfect code of size r
SHARPCON_FIXTURES = {4: "hog50403", 5: "hog1138", 6: "hog33766"}


class ConstructionError(ValueError):
    pass


def complete(m: int, k: int) -> Hypergraph:
    if k > m:
        raise ConstructionError(f"k={k} > m={m}")
    return Hypergraph(m, k, tuple(combinations(range(1, m + 1), k)))


def disjoint_union(*parts: Hypergraph | None) -> Hypergraph:
    """Union with vertex labels shifted so the parts occupy consecutive blocks.

    `None` stands for the empty hypergraph on zero vertices.
    """
    parts = [p for p in parts if p is not None]
    if not parts:
        raise ConstructionError("nothing to unite")
    k = parts[0].k
    if any(p.k != k for p in parts):
        raise ConstructionError("parts have different uniformity")
    edges, offset = [], 0
    for p in parts:
        edges += [tuple(v + offset for v in e) for e in p.edges]
        offset += p.n
    return Hypergraph(offset, k, tuple(edges))


def fano_complement() -> Hypergraph:
    full = set(range(1, 8))
    return Hypergraph(7, 4, tuple(tuple(sorted(full - set(line))) for line in FANO_LINES))


def _sat4_ten() -> list[tuple[int, ...]]:
    first = [e for e in combinations(range(1, 6), 4) if len(set(e) & {1, 2, 3}) == 2]
    last = [e for e in combinations(range(6, 11), 4) if len(set(e) & {8, 9, 10}) == 2]
    return first + [(4, 5, 6, 7)] + last


def sat4_construction(n: int, V: Sequence[int] | None = None, W: Sequence[int] | None = None) -> Hypergraph:
    """B4-saturated hypergraph on [n] with the minimum number of edges.

    For n >= 12 the vertices 11..n are split into V (joined to {1,2,3}) and W
    (joined to {8,9,10}); by default V is empty.
    """
    if n < 4:
        raise ConstructionError("sat4 needs n >= 4")
    if n <= 6:
        return complete(n, 4)
    if n == 7:
        return fano_complement()
    if n == 8:
        edges = [e for e in combinations(range(1, 7), 4) if len(set(e) & {1, 2, 3, 4}) in (2, 4)]
        return Hypergraph(8, 4, tuple(edges) + ((5, 6, 7, 8),))
    if n == 9:
        return disjoint_union(complete(4, 4), complete(5, 4))
    if n == 10:
        return Hypergraph(10, 4, tuple(_sat4_ten()))
    if n == 11:
        return disjoint_union(complete(4, 4), fano_complement())
    rest = set(range(11, n + 1))
    if V is None and W is None:
        V, W = [], sorted(rest)
    elif V is None:
        V = sorted(rest - set(W))
    elif W is None:
        W = sorted(rest - set(V))
    V, W = sorted(V), sorted(W)
    if set(V) | set(W) != rest or set(V) & set(W):
        raise ConstructionError(f"V and W must partition [11..{n}]")
    if len(V) == 1 or len(W) == 1:
        raise ConstructionError("|V| and |W| must differ from 1")
    edges = _sat4_ten() + [(1, 2, 3, v) for v in V] + [(8, 9, 10, w) for w in W]
    return Hypergraph(n, 4, tuple(edges))


def sat3_construction(n: int) -> Hypergraph:
    if n < 3:
        raise ConstructionError("sat3 needs n >= 3")
    q, rem = divmod(n, 3)
    triples = q if rem == 0 else q - 1
    parts = [complete(3, 3)] * triples
    if rem == 1:
        parts.append(complete(4, 3))
    elif rem == 2:
        # three triples through the pair {1, 2}
        parts.append(Hypergraph(5, 3, ((1, 2, 3), (1, 2, 4), (1, 2, 5))))
    return disjoint_union(*parts)


def sat2_construction(n: int) -> Hypergraph:
    if n < 2:
        raise ConstructionError("sat2 needs n >= 2")
    return Hypergraph(n, 2, tuple((2 * i + 1, 2 * i + 2) for i in range(n // 2)))


def _check_regular_girth(g: SimpleGraph, k: int, min_girth: int):
    for v in range(g.n):
        if g.degree(v) != k:
            raise ConstructionError(f"graph is not {k}-regular: vertex {v} has degree {g.degree(v)}")
    gg = girth(g)
    if gg < min_girth:
        raise ConstructionError(f"girth {gg} < {min_girth}")


def dual_hypergraph(g: SimpleGraph, k: int) -> Hypergraph:
    """Vertices are the edges of g (label i+1 for the i-th edge in sorted order);
    each vertex of g contributes the star of its k edges."""
    _check_regular_girth(g, k, k + 1)
    label = {e: i + 1 for i, e in enumerate(g.edges())}
    stars = []
    for v in range(g.n):
        stars.append(tuple(sorted(label[(min(u, v), max(u, v))] for u in g.adj[v])))
    return Hypergraph(len(label), k, tuple(stars))


@dataclass(frozen=True)
class SharpCon:
    hypergraph: Hypergraph
    modified_graph: SimpleGraph
    centers: tuple[int, ...]
    # modified-graph vertex ids of (v_i, w_i), per center
    split_vertices: tuple[tuple[int, int], ...]


def sharpcon(g: SimpleGraph, centers: Sequence[int] | None = None,
             pair_split: dict[int, tuple[tuple[int, int], tuple[int, int]]] | None = None) -> SharpCon:
    """Split every center of a perfect code into two adjacent degree-3 vertices
    and read off a 4-uniform hypergraph on 13r vertices with 6r edges.

    In the modified graph the non-center vertices are renumbered in increasing
    order and v_i, w_i are appended in center order. Hypergraph labels:
    1..11r are the modified graph's edges in sorted order, followed by v_1, w_1,
    v_2, w_2, ...
    """
    if g.n % 5:
        raise ConstructionError(f"order {g.n} is not a multiple of 5")
    r = g.n // 5
    _check_regular_girth(g, 4, 5)
    if centers is None:
        codes = efficient_dominating_sets(g, limit=1)
        if not codes:
            raise ConstructionError("graph has no efficient dominating set")
        centers = codes[0]
    centers = tuple(sorted(centers))
    if len(centers) != r:
        raise ConstructionError(f"need {r} centers, got {len(centers)}")
    covered = sorted(x for c in centers for x in g.closed(c))
    if covered != list(range(g.n)):
        raise ConstructionError("centers are not an efficient dominating set")
    pair_split = dict(pair_split or {})
    splits = []
    for c in centers:
        nb = sorted(g.adj[c])
        if c in pair_split:
            a, b = (tuple(sorted(p)) for p in pair_split[c])
            if sorted(a + b) != nb or len(a) != 2:
                raise ConstructionError(f"pair split at {c} does not partition its neighbours {nb}")
        else:
            a, b = (nb[0], nb[1]), (nb[2], nb[3])
        splits.append((a, b))

    keep = [v for v in range(g.n) if v not in set(centers)]
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges() if u in new_id and v in new_id]
    size = len(keep)
    split_vertices = []
    for (a, b) in splits:
        vi, wi = size, size + 1
        size += 2
        split_vertices.append((vi, wi))
        edges.append((vi, wi))
        edges += [(new_id[x], vi) for x in a] + [(new_id[x], wi) for x in b]
    gp = SimpleGraph.from_edges(size, edges)
    assert gp.n == 6 * r and gp.num_edges() == 11 * r

    label = {e: i + 1 for i, e in enumerate(gp.edges())}
    m = len(label)
    extra = {}
    for vi, wi in split_vertices:
        extra[vi] = m + len(extra) + 1
        extra[wi] = m + len(extra) + 1

    def star(x):
        return [label[(min(x, y), max(x, y))] for y in gp.adj[x]]

    hedges = []
    for x in range(gp.n):
        if gp.degree(x) == 4:
            hedges.append(tuple(sorted(star(x))))
        elif gp.degree(x) == 3:
            hedges.append(tuple(sorted(star(x) + [extra[x]])))
        else:
            raise ConstructionError(f"modified graph has a vertex of degree {gp.degree(x)}")
    h = Hypergraph(m + len(extra), 4, tuple(hedges))
    return SharpCon(h, gp, centers, tuple(split_vertices))


def _decompose(m: int) -> list[int] | None:
    """Write m as a sum of parts from {4, 5, 6}, using as many 4s (then 5s) as possible."""
    for a in range(m // 4, -1, -1):
        for b in range((m - 4 * a) // 5, -1, -1):
            rest = m - 4 * a - 5 * b
            if rest % 6 == 0:
                return [4] * a + [5] * b + [6] * (rest // 6)
    return None


def wsat4_construction(n: int) -> Hypergraph:
    """Disjoint SharpCon blocks plus one isolated edge: (6n - 11)/13 edges."""
    if n % 13 != 4:
        raise ConstructionError(f"n={n} is not 4 mod 13")
    m = (n - 4) // 13
    parts = _decompose(m) if m > 0 else None
    if not parts:
        raise ConstructionError(f"(n-4)/13 = {m} is not a sum of block sizes 4, 5, 6")
    blocks = [sharpcon(load_fixture(SHARPCON_FIXTURES[r])).hypergraph for r in parts]
    return disjoint_union(*blocks, complete(4, 4))
