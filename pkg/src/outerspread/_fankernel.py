"""Compiled spread evaluation for fans K_1 v F over all linear forests F.

With the hub entry fixed to 1, an eigenvector of K_1 v F satisfies
``(lambda - A_F) u = 1`` on the forest, so every eigenvalue outside the
spectrum of ``A_F`` (which lies in (-2, 2)) solves

    lambda = sum over paths P_k of  1^T (lambda - A_{P_k})^{-1} 1.

For a path on ``k`` vertices and ``|lambda| > 2`` the right-hand term has the
closed form ``(k - 2 (1 - S^k) / ((1 + S^(k+1)) (T - 1))) / (lambda - 2)`` with
``T + 1/T = lambda``, ``|T| > 1`` and ``S = 1/T``.  ``lambda - rhs`` is
increasing on both sides of [-2, 2], so the extreme eigenvalues are the unique
roots inside the Rayleigh brackets

    lambda_1 in [sqrt(n-1) + m/(n-1), sqrt(n) + 1]
    lambda_n in [-sqrt(n) - 1, -sqrt(n-1) + m/(n-1)]

which stay outside [-2, 2] once ``n >= 10``.
"""

from __future__ import annotations

import math

import numba
import numpy as np

MIN_KERNEL_N = 10


@numba.njit(cache=True)
def _phi(lam, parts, mult, nd):
    r = math.sqrt(lam * lam - 4.0)
    if lam > 0.0:
        t = 0.5 * (lam + r)
    else:
        t = 0.5 * (lam - r)
    s = 1.0 / t
    tot = 0.0
    for i in range(nd):
        k = parts[i]
        if k == 1:
            fk = 1.0 / lam
        else:
            sk = s ** k
            fk = (k - 2.0 * (1.0 - sk) / ((1.0 + sk * s) * (t - 1.0))) / (lam - 2.0)
        tot += mult[i] * fk
    return lam - tot


@numba.njit(cache=True)
def _root(lo, hi, parts, mult, nd):
    # Illinois variant of regula falsi on an increasing function
    flo = _phi(lo, parts, mult, nd)
    if flo >= 0.0:
        return lo
    fhi = _phi(hi, parts, mult, nd)
    if fhi <= 0.0:
        return hi
    side = 0
    c = lo
    for _ in range(200):
        c = (lo * fhi - hi * flo) / (fhi - flo)
        fc = _phi(c, parts, mult, nd)
        if fc == 0.0:
            return c
        if fc > 0.0:
            hi = c
            fhi = fc
            if side == -1:
                flo *= 0.5
            side = -1
        else:
            lo = c
            flo = fc
            if side == 1:
                fhi *= 0.5
            side = 1
        if hi - lo <= 4e-16 * abs(c):
            break
    return c


@numba.njit(cache=True)
def fan_extremes(n, parts_desc, k):
    """(lambda_1, lambda_n) of K_1 v F for the forest with path orders parts_desc[:k]."""
    nmax = k if k > 0 else 1
    parts = np.empty(nmax, np.int64)
    mult = np.empty(nmax, np.int64)
    nd = 0
    m = 0
    prev = -1
    for i in range(k):
        v = parts_desc[i]
        m += v - 1
        if v == prev:
            mult[nd - 1] += 1
        else:
            parts[nd] = v
            mult[nd] = 1
            nd += 1
            prev = v
    big = n - 1.0
    sq = math.sqrt(big)
    up = math.sqrt(n) + 1.0
    l1 = _root(sq + m / big, up, parts, mult, nd)
    ln = _root(-up, -sq + m / big, parts, mult, nd)
    return l1, ln


@numba.njit(cache=True)
def scan_largest_part(n, largest, keep):
    """Walk partitions of n-1 with first part ``largest`` in reverse lexicographic order.

    Returns the partition count and the ``keep`` highest-spread partitions
    (ties keep the earlier partition), as (spreads, ranks, parts, lengths).
    """
    big = n - 1
    a = np.zeros(big, np.int64)
    a[0] = largest
    k = 1
    rem = big - largest
    while rem > 0:
        p = min(largest, rem)
        a[k] = p
        k += 1
        rem -= p
    top_s = np.full(keep, -np.inf)
    top_r = np.full(keep, -1, np.int64)
    top_p = np.zeros((keep, big), np.int64)
    top_k = np.zeros(keep, np.int64)
    count = 0
    while True:
        l1, ln = fan_extremes(n, a, k)
        s = l1 - ln
        if keep > 0 and s > top_s[keep - 1]:
            j = keep - 1
            while j > 0 and top_s[j - 1] < s:
                top_s[j] = top_s[j - 1]
                top_r[j] = top_r[j - 1]
                top_k[j] = top_k[j - 1]
                top_p[j, :] = top_p[j - 1, :]
                j -= 1
            top_s[j] = s
            top_r[j] = count
            top_k[j] = k
            top_p[j, :] = 0
            top_p[j, :k] = a[:k]
        count += 1
        i = k - 1
        while i >= 1 and a[i] == 1:
            i -= 1
        if i < 1:
            break
        ones = k - 1 - i
        a[i] -= 1
        rem = ones + 1
        cap = a[i]
        k = i + 1
        while rem > 0:
            p = min(cap, rem)
            a[k] = p
            k += 1
            rem -= p
    return count, top_s, top_r, top_p, top_k
