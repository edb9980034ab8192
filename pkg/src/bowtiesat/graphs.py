"""Small simple graphs: graph6 / edge-list I/O, girth, squares, perfect codes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from itertools import combinations
from typing import Iterable

FIXTURES = ("hog50403", "hog1138", "hog33766", "robertson")


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, byte: int | None = None):
        self.line, self.byte = line, byte
        where = []
        if line is not None:
            where.append(f"line {line}")
        if byte is not None:
            where.append(f"byte {byte}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1."""
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"loop at {v}")
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"repeated neighbour at {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            if v in nbrs[u]:
                raise ValueError(f"repeated edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def rows(self) -> list[int]:
        out = []
        for nbrs in self.adj:
            m = 0
            for u in nbrs:
                m |= 1 << u
            out.append(m)
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def regular_degree(self) -> int | None:
        degs = {len(a) for a in self.adj}
        return degs.pop() if len(degs) == 1 else None

    def closed(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v]) | {v}


def parse_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string", byte=0)
    data = s.encode("ascii", errors="replace")
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"invalid graph6 character {chr(c)!r}", byte=i)
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise GraphFormatError("only sizes up to 258047 (one 126 prefix) are supported", byte=1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    need = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(f"expected {(need + 5) // 6} data bytes for n={n}, got {len(body)}",
                               byte=pos + min(len(body), (need + 5) // 6))
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> sh) & 1 for sh in range(5, -1, -1))
    if any(bits[need:]):
        raise GraphFormatError("nonzero padding bits", byte=len(data) - 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return SimpleGraph.from_edges(n, edges)


def to_graph6(g: SimpleGraph) -> str:
    n = g.n
    if n < 63:
        out = [n + 63]
    elif n <= 258047:
        out = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    else:
        raise ValueError("graph too large for graph6")
    bits = [1 if v in g.adj[u] else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def parse_edge_list(text: str) -> SimpleGraph:
    """First data line is the vertex count, then one `u v` pair (0-based) per line."""
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(t) for t in line.split()]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", line=lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphFormatError("first data line must be the vertex count", line=lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphFormatError("edge line must hold two vertices", line=lineno)
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range [0, {n})", line=lineno)
        if u == v:
            raise GraphFormatError(f"loop at {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"repeated edge {key}", line=lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("missing vertex count")
    return SimpleGraph.from_edges(n, edges)


def to_edge_list(g: SimpleGraph, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(str(g.n))
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(source: str, fmt: str = "auto") -> SimpleGraph:
    if fmt == "auto":
        first = next((ln.strip() for ln in source.splitlines()
                      if ln.strip() and not ln.strip().startswith("#")), "")
        fmt = "edge-list" if first.isdigit() or " " in first else "graph6"
    if fmt == "graph6":
        return parse_graph6(source)
    if fmt in ("edge-list", "edgelist", "el"):
        return parse_edge_list(source)
    raise ValueError(f"unknown graph format {fmt!r}")


def load_fixture(name: str) -> SimpleGraph:
    name = name.removesuffix(".el")
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; have {FIXTURES}")
    text = resources.files("bowtiesat").joinpath("fixtures").joinpath(f"{name}.el").read_text()
    return parse_edge_list(text)


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle, math.inf for forests."""
    best = float("inf")
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return int(best) if best != float("inf") else best


def square(g: SimpleGraph) -> SimpleGraph:
    edges = set()
    for v in range(g.n):
        reach = set(g.adj[v])
        for u in g.adj[v]:
            reach.update(g.adj[u])
        reach.discard(v)
        edges.update((min(u, v), max(u, v)) for u in reach)
    return SimpleGraph.from_edges(g.n, sorted(edges))


def efficient_dominating_sets(g: SimpleGraph, limit: int | None = None) -> list[tuple[int, ...]]:
    """Perfect codes: vertex sets whose closed neighbourhoods partition V(g).

    Exact cover by backtracking, always covering the uncovered vertex with the
    fewest usable closed neighbourhoods first.
    """
    closed = [r | (1 << v) for v, r in enumerate(g.rows)]
    full = (1 << g.n) - 1
    found: list[tuple[int, ...]] = []

    def rec(covered: int, picked: list[int]) -> bool:
        if covered == full:
            found.append(tuple(sorted(picked)))
            return limit is not None and len(found) >= limit
        best = None
        for v in range(g.n):
            if covered >> v & 1:
                continue
            opts = [c for c in range(g.n) if closed[c] >> v & 1 and not closed[c] & covered]
            if best is None or len(opts) < len(best):
                best = opts
                if len(opts) <= 1:
                    break
        for c in best:
            picked.append(c)
            if rec(covered | closed[c], picked):
                return True
            picked.pop()
        return False

    if g.n:
        rec(0, [])
    else:
        found.append(())
    found.sort()
    for code in found:
        d = g.regular_degree()
        if d is not None:
            assert len(code) * (d + 1) == g.n
    return found


def independence_number(g: SimpleGraph, max_vertices: int = 64) -> int:
    if g.n > max_vertices:
        raise ValueError(f"{g.n} vertices exceeds the exact-search guard of {max_vertices}")
    rows = g.rows
    best = 0

    def rec(cand: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            rec(cand & ~rows[v], size + 1)

    rec((1 << g.n) - 1, 0)
    return best


def is_independent(g: SimpleGraph, vs: Iterable[int]) -> bool:
    return all(u not in g.adj[v] for u, v in combinations(list(vs), 2))
