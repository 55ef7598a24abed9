"""Cyclic Jacobi eigensolver and Rayleigh-quotient utilities."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np

from .graph import Graph, fan

__all__ = [
    "ConvergenceError",
    "Spectrum",
    "ExtremalPairs",
    "SpreadReport",
    "eig_symmetric",
    "extremal_pairs",
    "spread",
    "rayleigh",
    "fan_spread_lower_bound",
    "DEFAULT_TOL",
    "TIE_TOL",
]

DEFAULT_TOL = 1e-10
TIE_TOL = 1e-9
MAX_SWEEPS = 50


class ConvergenceError(RuntimeError):
    pass


@numba.njit(cache=True)
def _jacobi(a, tol, want_vectors, max_sweeps):
    n = a.shape[0]
    vt = np.eye(n) if want_vectors else np.empty((0, 0))
    skip = tol / (2.0 * n)
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        off = math.sqrt(2.0 * off)
        if off < tol:
            return vt, off, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                for k in range(n):
                    akp = a[p, k]
                    akq = a[q, k]
                    a[p, k] = c * akp - s * akq
                    a[q, k] = s * akp + c * akq
                for k in range(n):
                    a[k, p] = a[p, k]
                    a[k, q] = a[q, k]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                if want_vectors:
                    for k in range(n):
                        vp = vt[p, k]
                        vq = vt[q, k]
                        vt[p, k] = c * vp - s * vq
                        vt[q, k] = s * vp + c * vq
    return vt, off, -1


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order; ``vectors[:, i]`` belongs to ``values[i]``."""

    values: np.ndarray
    tol: float
    sweeps: int
    vectors: np.ndarray | None = None


def eig_symmetric(matrix, tol: float = DEFAULT_TOL, vectors: bool = False,
                  max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Diagonalise a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps continue until the off-diagonal Frobenius norm drops below ``tol``.
    Raises ``ConvergenceError`` after ``max_sweeps`` sweeps.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a.size and np.max(np.abs(a - a.T)) > 1e-12:
        raise ValueError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    vt, off, sweeps = _jacobi(a, float(tol), bool(vectors), int(max_sweeps))
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not reach tol={tol:g} in {max_sweeps} sweeps (off={off:.3e})")
    diag = np.diag(a).copy()
    order = np.argsort(-diag, kind="stable")
    vecs = vt[order].T.copy() if vectors else None
    return Spectrum(diag[order], float(off), int(sweeps), vecs)


@dataclass(frozen=True)
class ExtremalPairs:
    """Top and bottom eigenpairs, normalised to max entry 1.

    ``x`` is the Perron vector with ``x[w] = 1``; ``z`` has ``max |z| = 1`` and
    is signed so that ``z[w] > 0`` when ``w`` also attains ``max |z|``,
    otherwise so that ``z[w_prime] = 1``.
    """

    lambda1: float
    x: np.ndarray
    w: int
    lambda_n: float
    z: np.ndarray
    w_prime: int

    def residuals(self, g: Graph) -> tuple[float, float]:
        a = g.adjacency_matrix()
        rx = np.max(np.abs(a @ self.x - self.lambda1 * self.x))
        rz = np.max(np.abs(a @ self.z - self.lambda_n * self.z))
        return float(rx), float(rz)


def extremal_pairs(g: Graph, tol: float = DEFAULT_TOL) -> ExtremalPairs:
    if not g.is_connected():
        raise ValueError("extremal_pairs needs a connected graph")
    if g.n == 1:
        one = np.ones(1)
        return ExtremalPairs(0.0, one, 0, 0.0, one.copy(), 0)
    spec = eig_symmetric(g.adjacency_matrix(), tol, vectors=True)
    x = spec.vectors[:, 0].copy()
    if x.sum() < 0:
        x = -x
    x /= x.max()
    w = int(np.flatnonzero(x >= 1.0 - TIE_TOL)[0])
    z = spec.vectors[:, -1].copy()
    z /= np.max(np.abs(z))
    w_prime = int(np.flatnonzero(np.abs(z) >= 1.0 - TIE_TOL)[0])
    anchor = w if abs(z[w]) >= 1.0 - TIE_TOL else w_prime
    if z[anchor] < 0:
        z = -z
    return ExtremalPairs(float(spec.values[0]), x, w, float(spec.values[-1]), z, w_prime)


@dataclass(frozen=True)
class SpreadReport:
    lambda1: float
    lambda_n: float
    spread: float


def spread(g: Graph, tol: float = DEFAULT_TOL) -> SpreadReport:
    """lambda_1 - lambda_n of the adjacency matrix."""
    vals = eig_symmetric(g.adjacency_matrix(), tol).values
    return SpreadReport(float(vals[0]), float(vals[-1]), float(vals[0] - vals[-1]))


def rayleigh(matrix, v) -> float:
    v = np.asarray(v, dtype=np.float64)
    vv = float(v @ v)
    if vv == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return float(v @ (np.asarray(matrix, dtype=np.float64) @ v)) / vv


def fan_spread_lower_bound(n: int) -> float:
    """Rayleigh-quotient lower bound on the spread of the fan K_1 v P_{n-1}.

    Uses the test vectors (-1 + sqrt(n), 1, ..., 1) and (-1 - sqrt(n), 1, ..., 1)
    with the hub first.  For ``n >= 6`` the result is checked against
    ``2 sqrt(n) - 1/n``.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    a = fan(n).adjacency_matrix()
    r = math.sqrt(n)
    v1 = np.ones(n)
    v1[0] = r - 1.0
    v2 = np.ones(n)
    v2[0] = -r - 1.0
    value = rayleigh(a, v1) - rayleigh(a, v2)
    if n >= 6 and value < 2.0 * r - 1.0 / n - 1e-12:
        raise ArithmeticError(f"fan bound {value} fell below 2 sqrt(n) - 1/n at n={n}")
    return value
