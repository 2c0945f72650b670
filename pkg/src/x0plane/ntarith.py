"""Elementary multiplicative number theory: factorization, divisors, sigma_3, phi, psi."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

__all__ = ["Factorization", "factor", "divisors", "sigma3", "euler_phi", "dedekind_psi"]

#: Prime factorization as ``((p1, e1), (p2, e2), ...)`` with increasing primes.
Factorization = tuple


def _check(n):
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=None)
def factor(n: int) -> Factorization:
    """Prime factorization of ``n >= 1`` by trial division."""
    _check(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    fac = factor(n)
    divs = [1]
    for p, e in fac:
        divs = [d * p**k for d, k in product(divs, range(e + 1))]
    return sorted(divs)


def sigma3(n: int) -> int:
    """Sum of the cubes of the divisors of ``n``."""
    out = 1
    for p, e in factor(n):
        out *= (p ** (3 * (e + 1)) - 1) // (p**3 - 1)
    return out


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factor(n):
        out = out // p * (p - 1)
    return out


def dedekind_psi(n: int) -> int:
    """Index of Gamma_0(n) in SL_2(Z): ``n * prod_{p | n} (1 + 1/p)``."""
    out = n
    for p, _ in factor(n):
        out = out // p * (p + 1)
    return out
