"""Searches for spread-maximal outerplanar graphs.

Three regimes: every connected outerplanar graph for small n, every fan
K_1 v F over linear forests F (one per partition of n-1), and a hill climb
over edge toggles and hub reattachments.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import _fankernel
from .bounds import reattach, valid_reattach_targets
from .canon import canonical_form
from .codec import graph6_encode
from .enumeration import MAX_ENUMERATION_N, enumerate_outerplanar
from .graph import Graph, LinearForestSpec, complete, fan, join, linear_forest
from .minors import is_outerplanar
from .spectra import DEFAULT_TOL, TIE_TOL, extremal_pairs, fan_spread_lower_bound, spread

__all__ = [
    "SearchResult",
    "FanFamilyResult",
    "partition_count",
    "partitions",
    "fan_structure",
    "exhaustive_max_spread",
    "fan_family_max",
    "local_search",
    "conjecture_scan",
    "spectral_radius_scan",
    "CONJECTURE_COLUMNS",
    "RADIUS_COLUMNS",
    "FULL_TABLE_LIMIT",
]

FULL_TABLE_LIMIT = 5000
DEFAULT_TOP = 20
ACCEPT_TOL = 1e-9


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """Number of integer partitions of ``k``."""
    if k < 0:
        return 0
    p = [1] + [0] * k
    for part in range(1, k + 1):
        for s in range(part, k + 1):
            p[s] += p[s - part]
    return p[k]


def partitions(k: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``k`` in reverse lexicographic order, parts descending."""
    if k < 1:
        return
    a = [k]
    while True:
        yield tuple(a)
        rem = 0
        while a and a[-1] == 1:
            a.pop()
            rem += 1
        if not a:
            return
        a[-1] -= 1
        rem += 1
        cap = a[-1]
        while rem:
            p = min(cap, rem)
            a.append(p)
            rem -= p


@dataclass(frozen=True)
class SearchResult:
    best: Graph
    best_spread: float
    runner_up_gap: float
    ties: tuple[bytes, ...] = ()
    trace: tuple[float, ...] = field(default=(), repr=False)
    evaluated: int = 0


def fan_structure(g: Graph) -> LinearForestSpec | None:
    """Path orders of F if ``g`` is K_1 v F with F a linear forest, else None."""
    n = g.n
    if n < 2:
        return None
    for hub in range(n):
        if g.degree(hub) != n - 1:
            continue
        rest = [u for u in range(n) if u != hub]
        f = g.induced(rest)
        if max(f.degrees(), default=0) > 2:
            continue
        comps = f.components()
        if f.num_edges != f.n - len(comps):
            continue
        return LinearForestSpec(len(c) for c in comps)
    return None


def _spreads(graphs: list[Graph], tol: float) -> list[float]:
    return [spread(g, tol).spread for g in graphs]


def _spreads_star(args):
    return _spreads(*args)


def _map_spreads(graphs: list[Graph], tol: float, workers: int) -> list[float]:
    if workers <= 1 or len(graphs) < 64:
        return _spreads(graphs, tol)
    size = max(16, len(graphs) // (4 * workers))
    chunks = [graphs[i:i + size] for i in range(0, len(graphs), size)]
    out: list[float] = []
    with ProcessPoolExecutor(workers) as pool:
        for part in pool.map(_spreads_star, [(c, tol) for c in chunks]):
            out.extend(part)
    return out


def exhaustive_max_spread(n: int, workers: int = 1, tol: float = DEFAULT_TOL) -> SearchResult:
    """Spread maximum over all connected outerplanar graphs on ``n`` vertices.

    Graphs within ``TIE_TOL`` of the maximum are listed by canonical form;
    the first of them in canonical order is reported as ``best``.
    """
    if not 2 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"exhaustive search supports 2 <= n <= {MAX_ENUMERATION_N}, got {n}")
    graphs = list(enumerate_outerplanar(n, connected_only=True, workers=workers))
    values = _map_spreads(graphs, tol, workers)
    top = max(values)
    tied = [i for i, s in enumerate(values) if s >= top - TIE_TOL]
    forms = sorted((canonical_form(graphs[i]), i) for i in tied)
    best_i = forms[0][1]
    others = [s for s in values if s < top - TIE_TOL]
    gap = top - max(others) if others else math.inf
    return SearchResult(graphs[best_i], values[best_i], gap, tuple(f for f, _ in forms), evaluated=len(graphs))


@dataclass(frozen=True)
class FanFamilyResult:
    n: int
    best_spec: LinearForestSpec
    best_spread: float
    partition_count: int
    table: tuple[tuple[LinearForestSpec, float], ...]
    complete_table: bool
    ties: tuple[LinearForestSpec, ...] = ()

    @property
    def m_ratio(self) -> float:
        return self.best_spec.m / self.n


def _scan_task(args):
    n, largest, keep = args
    count, s, r, p, k = _fankernel.scan_largest_part(n, largest, keep)
    out = []
    for i in range(len(s)):
        if r[i] < 0:
            break
        out.append((float(s[i]), tuple(int(v) for v in p[i, :k[i]])))
    return count, out


def _fan_small(n: int, tol: float) -> list[tuple[float, tuple[int, ...]]]:
    hub = complete(1)
    return [(spread(join(hub, linear_forest(parts)), tol).spread, parts) for parts in partitions(n - 1)]


def fan_family_max(n: int, workers: int = 1, table_size: int | None = None,
                   tol: float = DEFAULT_TOL) -> FanFamilyResult:
    """Spread of K_1 v F for every linear forest F on ``n - 1`` vertices.

    Small ``n`` uses the dense eigensolver directly; from ``n = 10`` on the
    extreme eigenvalues come from the compiled secular-equation kernel.
    The table is complete when ``p(n-1) <= FULL_TABLE_LIMIT`` (or when
    ``table_size`` asks for at least that many rows); otherwise it keeps the
    top ``table_size`` (default 20) forests.  The winner's spread is always
    recomputed with the dense solver.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    total = partition_count(n - 1)
    if table_size is None:
        keep = total if total <= FULL_TABLE_LIMIT else DEFAULT_TOP
    else:
        if table_size < 1:
            raise ValueError("table_size must be positive")
        keep = min(table_size, total)
    if n < _fankernel.MIN_KERNEL_N:
        entries = _fan_small(n, tol)
        count = len(entries)
    else:
        tasks = [(n, largest, keep) for largest in range(n - 1, 0, -1)]
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                results = list(pool.map(_scan_task, tasks))
        else:
            results = [_scan_task(t) for t in tasks]
        count = sum(c for c, _ in results)
        entries = [e for _, part in results for e in part]
    if count != total:  # pragma: no cover - kernel walk guard
        raise RuntimeError(f"partition walk visited {count} of {total} partitions")
    # descending spread; among exact float ties, reverse lexicographic partition order
    entries.sort(key=lambda e: (-e[0], tuple(-v for v in e[1])))
    entries = entries[:keep]
    top_val, top_parts = entries[0]
    spec = LinearForestSpec(top_parts)
    exact = spread(join(complete(1), linear_forest(spec)), tol).spread
    if abs(exact - top_val) > 1e-8:
        raise ArithmeticError(f"fan kernel spread {top_val} disagrees with dense solver {exact} for {spec}")
    ties = tuple(LinearForestSpec(p) for s, p in entries if s >= top_val - TIE_TOL)
    table = tuple((LinearForestSpec(p), s) for s, p in entries)
    return FanFamilyResult(n, spec, exact, total, table, keep == total, ties)


def _neighbourhood(g: Graph, w: int) -> list[tuple[str, int, int]]:
    moves = [("toggle", u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    moves += [("reattach", t, w) for t in valid_reattach_targets(g, w)]
    return moves


def _apply(g: Graph, move: tuple[str, int, int]) -> Graph | None:
    kind, a, b = move
    if kind == "reattach":
        h = reattach(g, a, b)
    elif g.has_edge(a, b):
        h = g.without_edge(a, b)
    else:
        if g.num_edges + 1 > 2 * g.n - 3:
            return None
        h = g.with_edge(a, b)
    if h.num_edges < g.num_edges and not h.is_connected():
        return None
    if kind == "reattach" and not h.is_connected():
        return None
    if h.num_edges > g.num_edges and not is_outerplanar(h):
        return None
    return h


def local_search(g0: Graph, budget: int, seed: int = 0, tol: float = DEFAULT_TOL) -> SearchResult:
    """First-improvement hill climb over outerplanarity-preserving moves.

    Moves are single-edge toggles that keep the graph connected and
    outerplanar, plus reattaching a non-neighbour of w to w.  Candidates are
    scanned in a seeded random order and the first one that raises the spread
    by more than 1e-9 is taken.  ``budget`` caps the number of accepted moves.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")
    if not g0.is_connected() or not is_outerplanar(g0):
        raise ValueError("start graph must be connected and outerplanar")
    rng = np.random.default_rng(seed)
    g = g0
    cur = spread(g, tol).spread
    trace = [cur]
    evaluated = 0
    gap = math.nan
    steps = 0
    while steps < budget:
        w = extremal_pairs(g, tol).w if g.n > 1 else 0
        moves = _neighbourhood(g, w)
        order = rng.permutation(len(moves))
        best_nb = -math.inf
        improved = False
        for i in order:
            h = _apply(g, moves[int(i)])
            if h is None:
                continue
            s = spread(h, tol).spread
            evaluated += 1
            if s > cur + ACCEPT_TOL:
                g, cur = h, s
                trace.append(cur)
                improved = True
                break
            best_nb = max(best_nb, s)
        if not improved:
            gap = cur - best_nb
            break
        steps += 1
    return SearchResult(g, cur, gap, (), tuple(trace), evaluated)


CONJECTURE_COLUMNS = [
    "n", "fan_spread", "fan_lower_bound", "bound_margin",
    "family_best", "family_best_m", "family_best_spread", "family_gap", "family_best_is_path",
    "exhaustive_best", "exhaustive_best_spread", "exhaustive_has_hub", "exhaustive_forest",
    "exhaustive_is_fan", "exhaustive_ties",
]


def conjecture_scan(n_lo: int, n_hi: int, workers: int = 1, exhaustive_limit: int = 9,
                    tol: float = DEFAULT_TOL) -> list[dict]:
    """One row per n comparing K_1 v P_{n-1} with the fan-family and exhaustive winners."""
    if n_lo < 2:
        raise ValueError("n_lo must be >= 2")
    if exhaustive_limit > MAX_ENUMERATION_N:
        raise ValueError(f"exhaustive_limit must be <= {MAX_ENUMERATION_N}")
    rows = []
    for n in range(n_lo, n_hi + 1):
        fs = spread(fan(n), tol).spread
        lb = fan_spread_lower_bound(n)
        fam = fan_family_max(n, workers, table_size=1, tol=tol)
        row = {
            "n": n, "fan_spread": fs, "fan_lower_bound": lb,
            "bound_margin": fs - (2 * math.sqrt(n) - 1 / n),
            "family_best": str(fam.best_spec), "family_best_m": fam.best_spec.m,
            "family_best_spread": fam.best_spread, "family_gap": fam.best_spread - fs,
            "family_best_is_path": fam.best_spec.parts == (n - 1,),
            "exhaustive_best": None, "exhaustive_best_spread": None, "exhaustive_has_hub": None,
            "exhaustive_forest": None, "exhaustive_is_fan": None, "exhaustive_ties": None,
        }
        if n <= exhaustive_limit:
            ex = exhaustive_max_spread(n, workers, tol)
            st = fan_structure(ex.best)
            row.update({
                "exhaustive_best": graph6_encode(ex.best),
                "exhaustive_best_spread": ex.best_spread,
                "exhaustive_has_hub": max(ex.best.degrees()) == n - 1,
                "exhaustive_forest": str(st) if st else None,
                "exhaustive_is_fan": st is not None and st.parts == (n - 1,),
                "exhaustive_ties": len(ex.ties),
            })
        rows.append(row)
    return rows


RADIUS_COLUMNS = ["n", "graphs", "max_lambda1", "bound", "min_margin", "violations", "argmax"]


def _lambda1s(graphs: list[Graph], tol: float) -> list[float]:
    return [spread(g, tol).lambda1 for g in graphs]


def _lambda1s_star(args):
    return _lambda1s(*args)


def spectral_radius_scan(n_max: int, workers: int = 1, n_min: int = 1,
                         tol: float = DEFAULT_TOL) -> tuple[list[dict], list[Graph]]:
    """Check lambda_1 <= sqrt(n) + 1 on every connected outerplanar graph up to ``n_max``.

    Returns one summary row per n and the list of violating graphs.
    """
    if not 1 <= n_min <= n_max <= MAX_ENUMERATION_N:
        raise ValueError(f"need 1 <= n_min <= n_max <= {MAX_ENUMERATION_N}")
    rows, bad = [], []
    for n in range(n_min, n_max + 1):
        graphs = list(enumerate_outerplanar(n, connected_only=True, workers=workers))
        if workers > 1 and len(graphs) >= 64:
            size = max(16, len(graphs) // (4 * workers))
            chunks = [graphs[i:i + size] for i in range(0, len(graphs), size)]
            with ProcessPoolExecutor(workers) as pool:
                lams = [v for part in pool.map(_lambda1s_star, [(c, tol) for c in chunks]) for v in part]
        else:
            lams = _lambda1s(graphs, tol)
        bound = math.sqrt(n) + 1
        i = int(np.argmax(lams))
        viol = [g for g, lam in zip(graphs, lams) if lam > bound + 1e-9]
        bad.extend(viol)
        rows.append({
            "n": n, "graphs": len(graphs), "max_lambda1": lams[i], "bound": bound,
            "min_margin": bound - lams[i], "violations": len(viol), "argmax": graph6_encode(graphs[i]),
        })
    return rows, bad
