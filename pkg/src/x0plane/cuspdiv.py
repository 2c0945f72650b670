"""Cusps of Gamma_0(N), divisors of Delta and Delta(N z), pole degrees.

Cusps are grouped by denominator: for each divisor ``d`` of ``N`` there are
``phi(gcd(d, N/d))`` inequivalent cusps ``c/d``, and both Delta-orders are
the same on all of them, so a class is ``(d, multiplicity, orders)``.

The birationality certificate uses the two functions ``f1 = j`` and
``f2 = j^(N-2) + f^(N-1)`` with ``f = Delta(N z)/Delta``; coprime pole
degrees force the map ``z -> (Delta : E4^3 : Delta(N z))`` to have degree 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ntarith import dedekind_psi, divisors, euler_phi

__all__ = [
    "CuspClass",
    "DegreeReport",
    "InternalInconsistency",
    "cusp_classes",
    "div_inf_f",
    "degree_f",
    "degree_f1",
    "degree_f2",
    "degree_f2_maxsum",
    "birational_certificate",
]


class InternalInconsistency(AssertionError):
    """Two routes to the same quantity disagree; this is a bug, not bad input."""


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise InternalInconsistency(f"expected an integral order, got {x}")
    return x.numerator


@dataclass(frozen=True)
class CuspClass:
    """The cusps ``c/d`` of Gamma_0(N) with a fixed denominator ``d``."""

    N: int
    d: int
    multiplicity: int
    ord_delta: Fraction
    ord_deltaN: Fraction

    @property
    def width(self):
        return _as_int(self.ord_delta)

    @property
    def ord_f(self) -> Fraction:
        """Order of Delta(N z)/Delta at these cusps (negative means a pole)."""
        return self.ord_deltaN - self.ord_delta


@dataclass(frozen=True)
class DegreeReport:
    N: int
    d_f1: int
    d_f2: int
    gcd_value: int
    birational: bool

    def __str__(self):
        return f"d(f1)={self.d_f1} d(f2)={self.d_f2} gcd={self.gcd_value} birational={str(self.birational).lower()}"


def _check_level(N):
    if N < 2:
        raise ValueError(f"level must be at least 2, got {N}")


def cusp_classes(N: int) -> list[CuspClass]:
    """One class per divisor ``d`` of ``N``, with the orders of Delta and Delta(N z)."""
    _check_level(N)
    out = []
    for d in divisors(N):
        g = gcd(d, N // d)
        out.append(
            CuspClass(
                N=N,
                d=d,
                multiplicity=euler_phi(g),
                ord_delta=Fraction(N // d, g),
                ord_deltaN=Fraction(d, g),
            )
        )
    return out


def div_inf_f(N: int) -> list[tuple[CuspClass, int]]:
    """Pole divisor of ``Delta(N z)/Delta``: order ``(N/d - d)/gcd(d, N/d)`` for ``d^2 < N``."""
    out = []
    for c in cusp_classes(N):
        if c.d * c.d < N:
            order = _as_int(Fraction(N // c.d - c.d, gcd(c.d, N // c.d)))
            if order != -c.ord_f:
                raise InternalInconsistency(f"pole order mismatch at d={c.d}")
            out.append((c, order))
    return out


def degree_f(N: int) -> int:
    """``[C(X_0(N)) : C(f)]``, the degree of the pole divisor of f counted with multiplicity."""
    return sum(c.multiplicity * order for c, order in div_inf_f(N))


def degree_f1(N: int) -> int:
    """Pole degree of j: the total order of Delta over all cusps, which must equal psi(N)."""
    total = sum(c.multiplicity * c.ord_delta for c in cusp_classes(N))
    total = _as_int(total)
    if total != dedekind_psi(N):
        raise InternalInconsistency(f"pole degree of j is {total}, psi({N}) = {dedekind_psi(N)}")
    return total


def degree_f2_maxsum(N: int) -> int:
    """Pole degree of ``j^(N-2) + f^(N-1)`` as a sum of cusp-wise maximal pole orders.

    At cusps with ``d < sqrt(N)`` both terms have poles and the larger order
    wins; elsewhere only ``j^(N-2)`` contributes.
    """
    _check_level(N)
    total = Fraction(0)
    for d in divisors(N):
        g = gcd(d, N // d)
        weight = Fraction(euler_phi(g), g)
        pole_j = Fraction(N, d) * (N - 2)
        if d * d < N:
            pole_f = (Fraction(N, d) - d) * (N - 1)
            total += weight * max(pole_j, pole_f)
        else:
            total += weight * pole_j
    return _as_int(total)


def degree_f2(N: int) -> int:
    """Pole degree of f2; the cusp-wise sum must equal ``(N - 2) psi(N) + 1``."""
    closed = (N - 2) * degree_f1(N) + 1
    summed = degree_f2_maxsum(N)
    if summed != closed:
        raise InternalInconsistency(f"N={N}: max-sum gives {summed}, closed form {closed}")
    return closed


def birational_certificate(N: int) -> DegreeReport:
    d1 = degree_f1(N)
    d2 = degree_f2(N)
    g = gcd(d1, d2)
    return DegreeReport(N=N, d_f1=d1, d_f2=d2, gcd_value=g, birational=g == 1)
