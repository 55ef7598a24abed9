"""Canonical labelling by partition refinement and backtracking.

Leaves of the search tree are discrete ordered partitions; the canonical
labelling is the leaf whose relabelled adjacency rows are lexicographically
largest.  Automorphisms discovered along the way prune equivalent branches.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["canonical_labeling", "canonical_form", "canonical_graph", "canonicalize"]


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        for s in range(len(cells)):
            mask = 0
            for v in cells[s]:
                mask |= 1 << v
            out = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & mask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    out.extend(groups[k] for k in sorted(groups))
            if split:
                cells = out
                break
        else:
            return cells


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.first = None
        self.best = None
        self.automorphisms: list[list[int]] = []

    def certificate(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            x = self.adj[v]
            while x:
                low = x & -x
                r |= 1 << pos[low.bit_length() - 1]
                x ^= low
            rows.append(r)
        return tuple(rows)

    def _same_orbit(self, v: int, explored: list[int], fixed: list[int]) -> bool:
        parent: dict[int, int] = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for aut in self.automorphisms:
            if any(aut[f] != f for f in fixed):
                continue
            for a, b in enumerate(aut):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        rv = find(v)
        return any(find(u) == rv for u in explored)

    def run(self, cells: list[list[int]], path: list[int]) -> int | None:
        cells = _refine(self.adj, cells)
        if len(cells) == len(self.adj):
            order = [c[0] for c in cells]
            cert = self.certificate(order)
            if self.first is None:
                self.first = self.best = (path, order, cert)
                return None
            for ref_path, ref_order, ref_cert in (self.first, self.best):
                if cert == ref_cert:
                    aut = [0] * len(order)
                    for a, b in zip(ref_order, order):
                        aut[a] = b
                    self.automorphisms.append(aut)
                    k = 0
                    while k < len(path) and k < len(ref_path) and path[k] == ref_path[k]:
                        k += 1
                    return k
            if cert > self.best[2]:
                self.best = (path, order, cert)
            return None
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        cell = cells[idx]
        explored: list[int] = []
        for v in cell:
            if explored and self._same_orbit(v, explored, path):
                continue
            explored.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            jump = self.run(child, path + [v])
            if jump is not None and jump < len(path):
                return jump
        return None


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order such that ``order[i]`` receives canonical label ``i``."""
    s = _Search(g)
    s.run([list(range(g.n))], [])
    return s.best[1]


def canonical_graph(g: Graph) -> Graph:
    return canonicalize(g)[0]


def _pack(n: int, rows: tuple[int, ...]) -> bytes:
    bits = 0
    k = 0
    for i in range(n):
        bits |= (rows[i] >> (i + 1)) << k
        k += n - i - 1
    return n.to_bytes(2, "big") + bits.to_bytes((k + 7) // 8, "little")


def canonicalize(g: Graph) -> tuple[Graph, bytes]:
    """Canonically relabelled copy of ``g`` together with its canonical form."""
    s = _Search(g)
    s.run([list(range(g.n))], [])
    rows = s.best[2]
    return Graph._trusted(g.n, rows), _pack(g.n, rows)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    return canonicalize(g)[1]
