"""K4 / K2,3 minor detection and outerplanarity certificates.

The exact decisions rest on two reductions:

* a graph has no K4 minor iff repeatedly deleting vertices of degree <= 1 and
  suppressing vertices of degree 2 empties it;
* a 2-connected graph is outerplanar iff degree-2 ears can be peeled down to a
  triangle without ever stacking two ears on the same pair, and a 2-connected
  graph with no K2,3 minor is either outerplanar or K4.

Witnesses are extracted by greedy descent: delete or contract while the exact
test still reports the minor, until only the target itself is left.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

__all__ = [
    "K4",
    "K23",
    "MinorWitness",
    "has_minor",
    "find_minor",
    "is_outerplanar",
    "biconnected_blocks",
]

K4 = "K4"
K23 = "K23"
_TARGET_SIZE = {K4: 4, K23: 5}
_TARGET_EDGES = {K4: ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
                 K23: ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))}

Adj = dict[int, set[int]]


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets certifying a K4 or K2,3 minor.

    For K2,3 the first two sets are the degree-3 side.
    """

    target: str
    branch_sets: tuple[frozenset[int], ...]

    def validate(self, g: Graph) -> None:
        """Raise ``ValueError`` unless the branch sets model the target in ``g``."""
        if self.target not in _TARGET_SIZE:
            raise ValueError(f"unknown target {self.target!r}")
        sets = self.branch_sets
        if len(sets) != _TARGET_SIZE[self.target]:
            raise ValueError("wrong number of branch sets")
        seen: set[int] = set()
        for bs in sets:
            if not bs:
                raise ValueError("empty branch set")
            if seen & bs:
                raise ValueError("branch sets overlap")
            seen |= bs
            if not all(0 <= v < g.n for v in bs):
                raise ValueError("branch set vertex out of range")
            if len(g.induced(sorted(bs)).components()) != 1:
                raise ValueError(f"branch set {sorted(bs)} is not connected")
        for i, j in _TARGET_EDGES[self.target]:
            if not any(g.adj[u] & sum(1 << v for v in sets[j]) for u in sets[i]):
                raise ValueError(f"no edge between branch sets {i} and {j}")


def _to_adj(g: Graph) -> Adj:
    return {u: set(g.neighbors(u)) for u in range(g.n)}


def biconnected_blocks(adj: Adj) -> list[set[int]]:
    """Vertex sets of the blocks (bridges included, isolated vertices not)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    estack: list[tuple[int, int]] = []
    clock = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    estack.append((v, w))
                    stack.append((w, v, iter(sorted(adj[w]))))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    estack.append((v, w))
            if descended:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    comp: set[int] = set()
                    while True:
                        e = estack.pop()
                        comp.update(e)
                        if e == (parent, v):
                            break
                    blocks.append(comp)
    return blocks


def _k4_free(adj: Adj) -> bool:
    a = {v: set(s) for v, s in adj.items()}
    queue = [v for v in a if len(a[v]) <= 2]
    while queue:
        v = queue.pop()
        if v not in a or len(a[v]) > 2:
            continue
        nb = a.pop(v)
        for u in nb:
            a[u].discard(v)
        if len(nb) == 2:
            x, y = nb
            a[x].add(y)
            a[y].add(x)
        queue.extend(u for u in nb if len(a[u]) <= 2)
    return not a


def _outerplanar_block(adj: Adj, verts: set[int]) -> bool:
    if len(verts) <= 3:
        return True
    a = {v: adj[v] & verts for v in verts}
    queue = [v for v in a if len(a[v]) == 2]
    used: set[tuple[int, int]] = set()
    while len(a) > 3:
        while queue and (queue[-1] not in a or len(a[queue[-1]]) != 2):
            queue.pop()
        if not queue:
            return False
        v = queue.pop()
        x, y = a.pop(v)
        a[x].discard(v)
        a[y].discard(v)
        key = (x, y) if x < y else (y, x)
        if key in used:
            # a second ear on the same pair, with more of the block left over
            return False
        used.add(key)
        a[x].add(y)
        a[y].add(x)
        queue.extend(u for u in (x, y) if len(a[u]) == 2)
    return True


def _k23_free(adj: Adj) -> bool:
    for block in biconnected_blocks(adj):
        if len(block) >= 5 and not _outerplanar_block(adj, block):
            return False
    return True


def _has(adj: Adj, target: str) -> bool:
    nv = sum(1 for s in adj.values() if s)
    ne = sum(len(s) for s in adj.values()) // 2
    if nv < _TARGET_SIZE[target] or ne < 6:
        return False
    if target == K4:
        return not _k4_free(adj)
    if target == K23:
        return not _k23_free(adj)
    raise ValueError(f"unknown minor target {target!r}")


def has_minor(g: Graph, target: str) -> bool:
    """Exact decision: does ``g`` contain ``target`` (``"K4"`` or ``"K23"``) as a minor."""
    if target not in _TARGET_SIZE:
        raise ValueError(f"unknown minor target {target!r}")
    return _has(_to_adj(g), target)


def _delete_vertex(adj: Adj, v: int) -> Adj:
    out = {u: s - {v} for u, s in adj.items() if u != v}
    return out


def _delete_edge(adj: Adj, u: int, v: int) -> Adj:
    out = {x: set(s) for x, s in adj.items()}
    out[u].discard(v)
    out[v].discard(u)
    return out


def _contract(adj: Adj, u: int, v: int) -> Adj:
    out = {x: set(s) for x, s in adj.items() if x != v}
    for w in adj[v]:
        if w != u:
            out[w].discard(v)
            out[w].add(u)
            out[u].add(w)
    out[u].discard(v)
    return out


def find_minor(g: Graph, target: str) -> MinorWitness | None:
    """Branch-set witness for a ``target`` minor of ``g``, or ``None``."""
    if not has_minor(g, target):
        return None
    adj = _to_adj(g)
    branch = {u: {u} for u in adj}
    size = _TARGET_SIZE[target]
    while True:
        for v in sorted(adj):
            if not adj[v] or (len(adj) > size and _has(trial := _delete_vertex(adj, v), target)):
                adj = _delete_vertex(adj, v) if not adj[v] else trial
                break
        else:
            edges = sorted((u, v) for u in adj for v in adj[u] if u < v)
            if len(edges) == 6 and len(adj) == size:
                break
            for u, v in edges:
                trial = _delete_edge(adj, u, v)
                if _has(trial, target):
                    adj = trial
                    break
                trial = _contract(adj, u, v)
                if _has(trial, target):
                    adj = trial
                    branch[u] |= branch.pop(v)
                    break
            else:  # pragma: no cover - would mean the exact test is inconsistent
                raise RuntimeError("minor descent stalled")
    reps = sorted(adj)
    if target == K23:
        reps.sort(key=lambda r: -len(adj[r]))
    witness = MinorWitness(target, tuple(frozenset(branch[r]) for r in reps))
    witness.validate(g)
    return witness


def is_outerplanar(g: Graph, witness: bool = False):
    """True iff ``g`` has neither a K4 nor a K2,3 minor.

    With ``witness=True`` returns ``(flag, MinorWitness | None)``.
    """
    ok = g.n < 2 or g.num_edges <= 2 * g.n - 3
    if ok:
        adj = _to_adj(g)
        ok = not _has(adj, K4) and not _has(adj, K23)
    if not witness:
        return ok
    if ok:
        return True, None
    return False, find_minor(g, K4) or find_minor(g, K23)
