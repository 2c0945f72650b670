"""Standard invariants of X_0(N) and the degree identity of the plane model.

The genus and ``dim M_12(Gamma_0(N))`` come from the usual formulas in the
index, the elliptic point counts and the number of cusps.  They do not use
``psi(N)`` as a shortcut, so ``dim_M12 + genus - 1 == psi(N)`` is a genuine
check.  The correction term of the degree formula for the triple
``(Delta, E4^3, Delta(N z))`` vanishes because the zeros of E4^3 lie at
elliptic points of order 3 while both Delta's vanish only at cusps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ntarith import dedekind_psi, divisors, euler_phi, factor

__all__ = [
    "CurveInvariants",
    "IdentityViolation",
    "nu2",
    "nu3",
    "nu_inf",
    "genus",
    "dim_modular_forms",
    "curve_invariants",
    "degree_formula_check",
]

#: Sum of min(c'_f, c'_g, c'_h) over X_0(N) for (Delta, E4^3, Delta(N z)).
BASE_LOCUS_CORRECTION = 0


class IdentityViolation(AssertionError):
    """``dim M_12 + g - 1 != psi(N)``: one of the standard formulas is wrong."""


def _chi_minus4(p):
    if p == 2:
        return 0
    return 1 if p % 4 == 1 else -1


def _chi_minus3(p):
    if p == 3:
        return 0
    return 1 if p % 3 == 1 else -1


def nu2(N: int) -> int:
    """Number of elliptic points of order 2 on X_0(N)."""
    if N % 4 == 0:
        return 0
    out = 1
    for p, _ in factor(N):
        out *= 1 + _chi_minus4(p)
    return out


def nu3(N: int) -> int:
    """Number of elliptic points of order 3 on X_0(N)."""
    if N % 9 == 0:
        return 0
    out = 1
    for p, _ in factor(N):
        out *= 1 + _chi_minus3(p)
    return out


def nu_inf(N: int) -> int:
    return sum(euler_phi(gcd(d, N // d)) for d in divisors(N))


def genus(N: int) -> int:
    g = 1 + Fraction(dedekind_psi(N), 12) - Fraction(nu2(N), 4) - Fraction(nu3(N), 3) - Fraction(nu_inf(N), 2)
    if g.denominator != 1 or g < 0:
        raise IdentityViolation(f"genus formula gave {g} for N={N}")
    return int(g)


def dim_modular_forms(N: int, k: int) -> int:
    """Dimension of M_k(Gamma_0(N)) for even ``k >= 2``."""
    if k < 2 or k % 2:
        raise ValueError("weight must be even and at least 2")
    g, e2, e3, c = genus(N), nu2(N), nu3(N), nu_inf(N)
    if k == 2:
        return g + c - 1
    return (k - 1) * (g - 1) + (k // 4) * e2 + (k // 3) * e3 + (k // 2) * c


@dataclass(frozen=True)
class CurveInvariants:
    N: int
    psi: int
    nu2: int
    nu3: int
    nu_inf: int
    genus: int
    dim_M12: int
    deg_CN: int


def curve_invariants(N: int) -> CurveInvariants:
    """All invariants of X_0(N); asserts that the plane model has degree psi(N)."""
    if N < 2:
        raise ValueError(f"level must be at least 2, got {N}")
    g = genus(N)
    dim12 = dim_modular_forms(N, 12)
    deg = dim12 + g - 1 - BASE_LOCUS_CORRECTION
    psi = dedekind_psi(N)
    if deg != psi:
        raise IdentityViolation(f"N={N}: dim M_12 + g - 1 = {deg} but psi = {psi}")
    return CurveInvariants(N, psi, nu2(N), nu3(N), nu_inf(N), g, dim12, deg)


def degree_formula_check(N: int, P) -> bool:
    """True iff ``P`` has total degree and y-degree equal to psi(N)."""
    psi = dedekind_psi(N)
    return P.total_degree == psi and P.degree_y == psi
