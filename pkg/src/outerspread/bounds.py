"""Eigenvalue bounds, eigenvector-entry estimates and the hub reattachment move.

Every check is reported with a signed margin (``margin >= 0`` means the bound
holds).  Checks flagged ``extremal_only`` are only claimed for a
spread-maximizing outerplanar graph; on other inputs they are diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, fan
from .minors import is_outerplanar
from .spectra import DEFAULT_TOL, TIE_TOL, extremal_pairs, spread

__all__ = [
    "LemmaCheck",
    "AlterationResult",
    "EntryResiduals",
    "DegreeSlack",
    "BSetReport",
    "bound_suite",
    "entry_estimate_residual",
    "refined_eigenvalue_prediction",
    "degree_bound_diagnostic",
    "b_set_diagnostic",
    "find_hub",
    "reattach",
    "star_reattach",
    "valid_reattach_targets",
    "residual_scan",
    "loglog_slope",
    "HOLD_TOL",
    "REATTACH_TOL",
]

HOLD_TOL = 1e-9
REATTACH_TOL = 1e-8


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    lhs: float
    rhs: float
    margin: float
    holds: bool
    extremal_only: bool = False

    @classmethod
    def upper(cls, name: str, value: float, bound: float, extremal_only: bool = False) -> "LemmaCheck":
        """Check ``value <= bound``."""
        margin = bound - value
        return cls(name, float(value), float(bound), float(margin), bool(margin >= -HOLD_TOL), extremal_only)

    @classmethod
    def lower(cls, name: str, value: float, bound: float, extremal_only: bool = False) -> "LemmaCheck":
        """Check ``value >= bound``."""
        margin = value - bound
        return cls(name, float(value), float(bound), float(margin), bool(margin >= -HOLD_TOL), extremal_only)


def _require_connected_outerplanar(g: Graph) -> None:
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if not is_outerplanar(g):
        raise ValueError("graph is not outerplanar")


def bound_suite(g: Graph, tol: float = DEFAULT_TOL) -> list[LemmaCheck]:
    """Eigenvalue window checks for a connected outerplanar graph."""
    _require_connected_outerplanar(g)
    n = g.n
    rep = spread(g, tol)
    lam1, lamn = rep.lambda1, rep.lambda_n
    r = math.sqrt(n - 1)
    return [
        LemmaCheck.upper("edges<=2n-3", g.num_edges, max(2 * n - 3, n - 1)),
        LemmaCheck.upper("lambda1<=sqrt(n)+1", lam1, math.sqrt(n) + 1),
        LemmaCheck.lower("lambda1>=|lambda_n|", lam1, abs(lamn)),
        LemmaCheck.upper("|lambda_n|<=sqrt(n-1)+2", abs(lamn), r + 2),
        LemmaCheck.lower("|lambda_n|>=sqrt(n-1)-2", abs(lamn), r - 2, extremal_only=True),
        LemmaCheck.lower("lambda1>=sqrt(n-1)-2", lam1, r - 2, extremal_only=True),
        LemmaCheck.lower("spread>=2sqrt(n-1)", rep.spread, 2 * r, extremal_only=True),
    ]


def find_hub(g: Graph) -> int | None:
    """Lowest-index vertex adjacent to all others, if any."""
    for u in range(g.n):
        if g.degree(u) == g.n - 1:
            return u
    return None


@dataclass(frozen=True)
class EntryResiduals:
    max_res_z: float
    max_res_x: float
    hub: int
    w: int
    w_prime: int
    lambda1: float
    lambda_n: float


def entry_estimate_residual(g: Graph, tol: float = DEFAULT_TOL) -> EntryResiduals:
    """Worst error of the second-order entry estimates on a graph with a hub.

    With both eigenvectors scaled to 1 at the hub, each other vertex should
    satisfy ``v_u ~ 1/lam + (d_u - 1)/lam^2`` for ``lam`` the matching
    eigenvalue.
    """
    if g.n < 10:
        raise ValueError("entry estimates need n >= 10")
    hub = find_hub(g)
    if hub is None:
        raise ValueError("graph has no vertex of degree n-1")
    p = extremal_pairs(g, tol)
    x = p.x / p.x[hub]
    z = p.z / p.z[hub]
    d = np.array(g.degrees(), dtype=float)
    others = np.arange(g.n) != hub
    est_x = 1.0 / p.lambda1 + (d - 1.0) / p.lambda1 ** 2
    est_z = 1.0 / p.lambda_n + (d - 1.0) / p.lambda_n ** 2
    res_x = float(np.max(np.abs(x - est_x)[others]))
    res_z = float(np.max(np.abs(z - est_z)[others]))
    return EntryResiduals(res_z, res_x, hub, p.w, p.w_prime, p.lambda1, p.lambda_n)


def refined_eigenvalue_prediction(n: int, m: int) -> tuple[float, float]:
    """(lambda_1, lambda_n) predicted for K_1 v F with ``m`` forest edges."""
    if n < 2:
        raise ValueError("need n >= 2")
    if not 0 <= m <= n - 2:
        raise ValueError(f"a linear forest on {n - 1} vertices has 0..{n - 2} edges, got m={m}")
    r = math.sqrt(n - 1)
    shift = m / (n - 1)
    return r + shift, -r + shift


@dataclass(frozen=True)
class DegreeSlack:
    min_slack_x: float
    min_slack_z: float
    argmin_x: int
    argmin_z: int


def degree_bound_diagnostic(g: Graph, tol: float = DEFAULT_TOL) -> DegreeSlack:
    """min over u of (d_u - v_u n)/sqrt(n) for v = x and v = |z|.  Report only."""
    _require_connected_outerplanar(g)
    p = extremal_pairs(g, tol)
    d = np.array(g.degrees(), dtype=float)
    sn = math.sqrt(g.n)
    sx = (d - p.x * g.n) / sn
    sz = (d - np.abs(p.z) * g.n) / sn
    ix, iz = int(np.argmin(sx)), int(np.argmin(sz))
    return DegreeSlack(float(sx[ix]), float(sz[iz]), ix, iz)


@dataclass(frozen=True)
class BSetReport:
    B: tuple[int, ...]
    sum_abs_z: float
    sum_x: float
    w: int
    w_prime: int

    @property
    def w_matches(self) -> bool:
        return self.w == self.w_prime


def b_set_diagnostic(g: Graph, tol: float = DEFAULT_TOL) -> BSetReport:
    """Vertices outside the closed neighbourhood of w and their eigenvector mass."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    p = extremal_pairs(g, tol)
    closed = g.adj[p.w] | (1 << p.w)
    B = tuple(u for u in range(g.n) if not closed >> u & 1)
    idx = list(B)
    return BSetReport(B, float(np.abs(p.z[idx]).sum()), float(p.x[idx].sum()), p.w, p.w_prime)


def reattach(g: Graph, t: int, w: int) -> Graph:
    """Drop every edge at ``t`` and join ``t`` to ``w`` instead."""
    adj = list(g.adj)
    bit = 1 << t
    for v in range(g.n):
        adj[v] &= ~bit
    adj[t] = 1 << w
    adj[w] |= bit
    return Graph._trusted(g.n, tuple(adj))


def valid_reattach_targets(g: Graph, w: int) -> list[int]:
    closed = g.adj[w] | (1 << w)
    return [u for u in range(g.n) if not closed >> u & 1]


@dataclass(frozen=True)
class AlterationResult:
    g_star: Graph
    t: int
    w: int
    predicted_delta: float
    actual_delta: float

    @property
    def certified(self) -> bool:
        return self.actual_delta >= self.predicted_delta - REATTACH_TOL


def star_reattach(g: Graph, t: int, tol: float = DEFAULT_TOL) -> AlterationResult:
    """Move ``t`` to hang off w and compare the spread change with its Rayleigh lower bound.

    Keeping x as a test vector for the new graph and z with the sign of
    ``z_t`` flipped against ``z_w`` gives

        delta >= 2 x_t (1 - sum_{v~t} x_v)/x'x + 2 |z_t| (|z_w| - |sum_{v~t} z_v|)/z'z

    with x scaled so ``x_w = 1``.  Both quotients bound eigenvalues of the new
    graph, so the inequality holds for every input.
    """
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if not 0 <= t < g.n:
        raise ValueError(f"vertex {t} out of range")
    p = extremal_pairs(g, tol)
    w = p.w
    if t == w:
        raise ValueError("t must differ from w")
    if g.has_edge(t, w):
        raise ValueError(f"t={t} is adjacent to w={w}; the move is undefined")
    nb = g.neighbors(t)
    x, z = p.x, p.z
    dx = 2.0 * x[t] / float(x @ x) * (1.0 - float(x[nb].sum()))
    dz = 2.0 * abs(z[t]) / float(z @ z) * (abs(z[w]) - abs(float(z[nb].sum())))
    g_star = reattach(g, t, w)
    before = p.lambda1 - p.lambda_n
    actual = spread(g_star, tol).spread - before
    return AlterationResult(g_star, t, w, float(dx + dz), float(actual))


def loglog_slope(ns: Sequence[float], values: Sequence[float]) -> float:
    """Least-squares slope of log(values) against log(ns)."""
    lx = np.log(np.asarray(ns, dtype=float))
    ly = np.log(np.asarray(values, dtype=float))
    return float(np.polyfit(lx, ly, 1)[0])


RESIDUAL_COLUMNS = ["n", "m", "max_res_z", "max_res_x", "lambda1_res", "lambda_n_res",
                    "c_z", "c_x", "c_lambda1", "c_lambda_n"]


def residual_scan(ns: Sequence[int], tol: float = DEFAULT_TOL) -> tuple[list[dict], dict]:
    """Entry and eigenvalue residuals on K_1 v P_{n-1} for each n.

    Returns per-n rows plus a summary with fitted log-log slopes and the
    calibrated constants (largest residual * n^1.5, divided by m for the
    eigenvalue residuals).
    """
    rows = []
    for n in ns:
        g = fan(n)
        er = entry_estimate_residual(g, tol)
        m = n - 2
        p1, pn = refined_eigenvalue_prediction(n, m)
        r1 = abs(er.lambda1 - p1)
        rn = abs(er.lambda_n - pn)
        s = n ** 1.5
        rows.append({
            "n": n, "m": m, "max_res_z": er.max_res_z, "max_res_x": er.max_res_x,
            "lambda1_res": r1, "lambda_n_res": rn,
            "c_z": er.max_res_z * s, "c_x": er.max_res_x * s,
            "c_lambda1": r1 / m * s, "c_lambda_n": rn / m * s,
        })
    summary: dict = {}
    if len(rows) >= 2:
        col = lambda k: [r[k] for r in rows]
        ms = col("m")
        summary = {
            "slope_z": loglog_slope(ns, col("max_res_z")),
            "slope_x": loglog_slope(ns, col("max_res_x")),
            "slope_lambda1_per_m": loglog_slope(ns, [a / b for a, b in zip(col("lambda1_res"), ms)]),
            "slope_lambda_n_per_m": loglog_slope(ns, [a / b for a, b in zip(col("lambda_n_res"), ms)]),
        }
    for k in ("c_z", "c_x", "c_lambda1", "c_lambda_n"):
        if rows:
            summary[k] = max(r[k] for r in rows)
    return rows, summary
