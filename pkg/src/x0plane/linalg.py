"""Exact kernels of integer matrices.

Two independent routes:

* :func:`bareiss_kernel` -- fraction-free Gauss-Jordan elimination over Z.
  Slow on big inputs but needs nothing beyond Python integers.
* :func:`kernel_mod_p` plus :func:`crt_combine` / :func:`rational_reconstruction`
  -- elimination modulo word-size primes (compiled with numba) whose results
  are lifted back to Z by the caller.
"""

from __future__ import annotations

from functools import reduce
from math import gcd, isqrt

import gmpy2
import numba
import numpy as np

__all__ = [
    "bareiss_kernel",
    "kernel_mod_p",
    "rank_mod_p",
    "reduce_mod_primes",
    "crt_combine",
    "rational_reconstruction",
    "primes_below",
]

#: Primes stay below 2**30 so products of residues fit in int64.
PRIME_BOUND = 1 << 30


def primes_below(bound=PRIME_BOUND, skip=0):
    """Yield primes below ``bound`` in decreasing order, skipping the first ``skip``."""
    p = bound
    n = 0
    while p > 2:
        p -= 1
        if gmpy2.is_prime(p):
            if n >= skip:
                yield p
            n += 1


# -- fraction-free elimination over Z ---------------------------------------


def bareiss_kernel(rows):
    """Basis of the integer right kernel of ``rows`` (a list of integer lists).

    Runs fraction-free Gauss-Jordan elimination: after each pivot step every
    entry is a minor of the input, so the divisions by the previous pivot are
    exact.  At the end each pivot row reads ``D x_c + sum_free a_f x_f = 0``
    with a common ``D``, giving one primitive kernel vector per free column.
    """
    A = [list(map(int, r)) for r in rows]
    if not A:
        return []
    m, n = len(A), len(A[0])
    prev = 1
    pivots = []  # (row, col)
    r = 0
    for c in range(n):
        if r == m:
            break
        i = next((i for i in range(r, m) if A[i][c]), None)
        if i is None:
            continue
        A[r], A[i] = A[i], A[r]
        piv = A[r][c]
        prow = A[r]
        for k in range(m):
            if k == r:
                continue
            row = A[k]
            f = row[c]
            if f:
                A[k] = [(piv * x - f * y) // prev for x, y in zip(row, prow)]
            elif prev != piv:
                A[k] = [(piv * x) // prev for x in row]
        pivots.append((r, c))
        prev = piv
        r += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        v = [0] * n
        v[free] = prev
        for pr, pc in pivots:
            v[pc] = -A[pr][free]
        g = reduce(gcd, v)
        basis.append([x // g for x in v])
    return basis


# -- elimination modulo a prime -------------------------------------------


@numba.njit(cache=True)
def _echelon_mod_p(A, p):
    """In-place reduced row echelon form mod p; returns the pivot columns."""
    m, n = A.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        i = r
        while i < m and A[i, c] == 0:
            i += 1
        if i == m:
            continue
        if i != r:
            for j in range(c, n):
                t = A[r, j]
                A[r, j] = A[i, j]
                A[i, j] = t
        a = A[r, c]
        e = p - 2
        inv = 1
        while e:
            if e & 1:
                inv = inv * a % p
            a = a * a % p
            e >>= 1
        for j in range(c, n):
            A[r, j] = A[r, j] * inv % p
        for k in range(r + 1, m):
            f = A[k, c]
            if f == 0:
                continue
            f = p - f
            for j in range(c, n):
                A[k, j] = (A[k, j] + f * A[r, j]) % p
        pivots[r] = c
        r += 1
    # Back substitution on the pivot rows only (rows below r are zero).
    for s in range(r - 1, -1, -1):
        c = pivots[s]
        for k in range(s):
            f = A[k, c]
            if f == 0:
                continue
            f = p - f
            for j in range(c, n):
                A[k, j] = (A[k, j] + f * A[s, j]) % p
    return pivots[:r]


def _echelon(A, p):
    A = np.asarray(A)
    if A.dtype == object:
        A = (A % p).astype(np.int64)
    else:
        A = A.astype(np.int64) % p
    pivots = _echelon_mod_p(A, np.int64(p))
    return A, pivots


def rank_mod_p(A, p):
    """Rank of the integer matrix ``A`` reduced modulo the prime ``p``."""
    return len(_echelon(A, p)[1])


def kernel_mod_p(A, p):
    """Basis of the right kernel of ``A`` mod ``p`` as rows of an int64 array."""
    R, pivots = _echelon(A, p)
    n = R.shape[1]
    is_pivot = np.zeros(n, dtype=bool)
    is_pivot[pivots] = True
    free = np.flatnonzero(~is_pivot)
    K = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        K[t, pivots] = (-R[: len(pivots), f]) % p
    return K


def reduce_mod_primes(M, primes):
    """Reduce an object array of Python ints modulo each prime.

    The entries are first reduced modulo the product of all primes so each
    big integer is touched once.
    """
    modulus = reduce(lambda x, y: x * y, primes, 1)
    small = M % modulus
    return [(small % p).astype(np.int64) for p in primes]


# -- lifting --------------------------------------------------------------


def crt_combine(r1, m1, r2, m2):
    """Combine ``x = r1 mod m1`` and ``x = r2 mod m2`` for coprime moduli."""
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * t, m1 * m2


def rational_reconstruction(a, m, bound=None):
    """Find ``n/d`` with ``n = a d mod m``, ``|n| <= bound``, ``0 < d <= bound``.

    ``bound`` defaults to ``isqrt(m // 2)``, which makes the answer unique.
    Returns ``None`` if no such fraction exists.
    """
    if bound is None:
        bound = isqrt(m // 2)
    a %= m
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if gcd(r1, s1) != 1:
        return None
    return r1, s1
