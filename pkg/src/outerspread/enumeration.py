"""Isomorph-free generation of outerplanar graphs by canonical edge augmentation.

A child ``P + uv`` is accepted only when deleting its canonical last edge
gives back a graph isomorphic to ``P``; siblings are deduplicated by canonical
form.  Every child is tested for outerplanarity before it is expanded, which
is sound because outerplanarity is closed under taking subgraphs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .canon import canonical_form, canonicalize
from .graph import Graph, empty
from .minors import is_outerplanar

__all__ = ["MAX_ENUMERATION_N", "enumerate_outerplanar", "count_outerplanar"]

MAX_ENUMERATION_N = 11
_SPLIT_EDGES = 3


def _last_edge(g: Graph) -> tuple[int, int]:
    # in a canonically labelled graph: highest vertex with a neighbour, and its highest neighbour
    for b in range(g.n - 1, 0, -1):
        if g.adj[b]:
            return g.adj[b].bit_length() - 1, b
    raise ValueError("graph has no edges")


def _children(g: Graph, g_form: bytes) -> list[tuple[Graph, bytes]]:
    """Accepted augmentations of the canonically labelled graph ``g``."""
    if g.n >= 2 and g.num_edges + 1 > 2 * g.n - 3:
        return []
    seen: set[bytes] = set()
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            child = g.with_edge(u, v)
            if not is_outerplanar(child):
                continue
            canon, form = canonicalize(child)
            if form in seen:
                continue
            seen.add(form)
            if canonical_form(canon.without_edge(*_last_edge(canon))) != g_form:
                continue
            out.append((canon, form))
    return out


def _expand(root: tuple[Graph, bytes], connected_only: bool) -> list[tuple[bytes, Graph]]:
    out = []
    stack = [root]
    while stack:
        g, form = stack.pop()
        if not connected_only or g.is_connected():
            out.append((form, g))
        stack.extend(_children(g, form))
    return out


def _expand_star(args):
    return _expand(*args)


def _frontier(n: int, depth: int) -> tuple[list[tuple[Graph, bytes]], list[tuple[Graph, bytes]]]:
    """Nodes with fewer than ``depth`` edges, and the subtree roots at ``depth`` edges."""
    shallow, roots = [], []
    stack = [canonicalize(empty(n))]
    while stack:
        g, form = stack.pop()
        if g.num_edges < depth:
            shallow.append((g, form))
            stack.extend(_children(g, form))
        else:
            roots.append((g, form))
    return shallow, roots


def enumerate_outerplanar(n: int, connected_only: bool = True, workers: int = 1) -> Iterator[Graph]:
    """One representative per isomorphism class of outerplanar graphs on ``n`` vertices.

    Representatives are emitted in the order of their canonical forms, so the
    stream does not depend on ``workers``.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    shallow, roots = _frontier(n, _SPLIT_EDGES)
    found = [(form, g) for g, form in shallow if not connected_only or g.is_connected()]
    if workers == 1 or len(roots) < 2:
        for r in roots:
            found.extend(_expand(r, connected_only))
    else:
        with ProcessPoolExecutor(workers) as pool:
            for part in pool.map(_expand_star, [(r, connected_only) for r in roots]):
                found.extend(part)
    found.sort(key=lambda fg: fg[0])
    for i in range(1, len(found)):
        if found[i][0] == found[i - 1][0]:  # pragma: no cover - guards the augmentation rule
            raise RuntimeError("duplicate isomorphism class in enumeration")
    for _, g in found:
        yield g


def count_outerplanar(n: int, connected_only: bool = True, workers: int = 1) -> int:
    return sum(1 for _ in enumerate_outerplanar(n, connected_only, workers))
