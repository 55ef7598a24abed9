"""Simple undirected graphs stored as adjacency bitset rows.

Each row is a Python ``int`` whose bit ``v`` is set when ``v`` is a neighbour,
so the word count grows with ``n`` and there is no fixed vertex cap beyond
``MAX_VERTICES``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 4096

__all__ = [
    "MAX_VERTICES",
    "Graph",
    "LinearForestSpec",
    "empty",
    "path",
    "cycle",
    "star",
    "complete",
    "from_edges",
    "join",
    "disjoint_union",
    "linear_forest",
    "fan",
    "wheel",
    "parse_graph",
    "random_outerplanar",
    "random_linear_forest",
]


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise ValueError(f"row {u} references a vertex outside the graph")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in _bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee the invariants
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loops are not allowed")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``u`` renamed to ``perm[u]``."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        adj = [0] * self.n
        for u, row in enumerate(self.adj):
            r = 0
            for v in _bits(row):
                r |= 1 << perm[v]
            adj[perm[u]] = r
        return Graph._trusted(self.n, tuple(adj))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled ``vertices[i] -> i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            r = 0
            for w in _bits(self.adj[v]):
                if w in index:
                    r |= 1 << index[w]
            adj.append(r)
        return Graph._trusted(len(vertices), tuple(adj))

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, row in enumerate(self.adj):
            nb = list(_bits(row))
            if nb:
                a[u, nb] = 1
        return a

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1


@dataclass(frozen=True)
class LinearForestSpec:
    """Path orders of a linear forest, kept sorted in descending order."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if not parts:
            raise ValueError("a linear forest needs at least one path")
        if parts[-1] < 1:
            raise ValueError("path orders must be positive")
        object.__setattr__(self, "parts", parts)

    @property
    def n_vertices(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        """Number of forest edges."""
        return sum(p - 1 for p in self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("self-loops are not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty(k: int) -> Graph:
    return Graph(k, (0,) * k)


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs k >= 1")
    return from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return from_edges(k, [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)])


def star(k: int) -> Graph:
    """K_{1,k-1} on ``k`` vertices with centre 0."""
    if k < 2:
        raise ValueError("star needs k >= 2")
    return from_edges(k, ((0, i) for i in range(1, k)))


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete graph needs k >= 1")
    full = (1 << k) - 1
    return Graph(k, tuple(full & ~(1 << i) for i in range(k)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise ValueError("union exceeds the vertex limit")
    return Graph._trusted(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """Vertices of ``g`` first, then ``h``, plus every cross pair."""
    if g.n + h.n > MAX_VERTICES:
        raise ValueError("join exceeds the vertex limit")
    hmask = ((1 << h.n) - 1) << g.n
    gmask = (1 << g.n) - 1
    adj = tuple(row | hmask for row in g.adj) + tuple((row << g.n) | gmask for row in h.adj)
    return Graph._trusted(g.n + h.n, adj)


def linear_forest(spec: LinearForestSpec | Sequence[int]) -> Graph:
    if not isinstance(spec, LinearForestSpec):
        spec = LinearForestSpec(spec)
    edges = []
    start = 0
    for p in spec.parts:
        edges.extend((start + i, start + i + 1) for i in range(p - 1))
        start += p
    return from_edges(start, edges)


def fan(n: int) -> Graph:
    """K_1 joined with P_{n-1}; the hub is vertex 0."""
    if n < 2:
        raise ValueError("fan needs n >= 2")
    return join(complete(1), path(n - 1))


def wheel(n: int) -> Graph:
    """K_1 joined with C_{n-1}; the hub is vertex 0."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    return join(complete(1), cycle(n - 1))


_NAMED = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "empty": empty,
    "fan": fan,
    "wheel": wheel,
}
_TOKEN = re.compile(r"\s*(join|union|forest|[a-z]+|\d+|[(),:\[\]])")


def parse_graph(text: str) -> Graph:
    """Build a graph from the constructor mini-language.

    Examples: ``fan:10``, ``star:10``, ``forest:[5,3,1]``,
    ``join(complete:1,forest:[4,4])``, ``union(path:3,cycle:4)``.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ValueError(f"cannot parse graph expression at {text[pos:]!r}")
        tokens.append(mt.group(1))
        pos = mt.end()
    if not tokens:
        raise ValueError("empty graph expression")
    tokens.append("")
    i = 0

    def take(expected=None):
        nonlocal i
        tok = tokens[i]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, got {tok!r} in {text!r}")
        i += 1
        return tok

    def number():
        tok = take()
        if not tok.isdigit():
            raise ValueError(f"expected an integer, got {tok!r} in {text!r}")
        return int(tok)

    def expr():
        name = take()
        if name in ("join", "union"):
            take("(")
            a = expr()
            take(",")
            b = expr()
            take(")")
            return join(a, b) if name == "join" else disjoint_union(a, b)
        take(":")
        if name == "forest":
            take("[")
            parts = [number()]
            while tokens[i] == ",":
                take(",")
                parts.append(number())
            take("]")
            return linear_forest(parts)
        if name not in _NAMED:
            raise ValueError(f"unknown graph constructor {name!r}")
        return _NAMED[name](number())

    g = expr()
    if tokens[i] != "":
        raise ValueError(f"trailing input in graph expression {text!r}")
    return g


def random_outerplanar(n: int, rng: np.random.Generator, keep: float | None = None) -> Graph:
    """Random connected outerplanar graph on ``n`` vertices.

    A random triangulation of an ``n``-gon is thinned to a random spanning tree
    plus each remaining edge with probability ``keep`` (itself random when not
    given), then the vertices are shuffled.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return empty(1)
    edges = {(i, i + 1) for i in range(n - 1)}
    if n >= 3:
        edges.add((0, n - 1))
    stack = [list(range(n))] if n > 3 else []
    while stack:
        poly = stack.pop()
        if len(poly) <= 3:
            continue
        # chord from poly[0] to a random non-adjacent corner, or an ear cut
        i = int(rng.integers(len(poly)))
        poly = poly[i:] + poly[:i]
        j = int(rng.integers(2, len(poly) - 1))
        a, b = poly[0], poly[j]
        edges.add((min(a, b), max(a, b)))
        stack.append(poly[: j + 1])
        stack.append(poly[j:] + poly[:1])
    edges = sorted(edges)
    if keep is None:
        keep = float(rng.uniform(0.0, 1.0))
    order = rng.permutation(len(edges))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for k in order:
        u, v = edges[k]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append((u, v))
        elif rng.uniform() < keep:
            chosen.append((u, v))
    perm = [int(p) for p in rng.permutation(n)]
    return from_edges(n, ((perm[u], perm[v]) for u, v in chosen))


def random_linear_forest(n_vertices: int, rng: np.random.Generator) -> LinearForestSpec:
    """Random composition of ``n_vertices`` into path orders."""
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    cuts = np.flatnonzero(rng.uniform(size=n_vertices - 1) < rng.uniform())
    bounds = [0, *(int(c) + 1 for c in cuts), n_vertices]
    return LinearForestSpec(b - a for a, b in zip(bounds, bounds[1:]))
