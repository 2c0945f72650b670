"""q-expansions of Delta, E4, E4^3, Delta(N z), j and f_N = Delta(N z)/Delta.

Every constructor takes an absolute precision ``prec`` (largest exponent
whose coefficient must be exact) and returns a series valid at least that
far.  Internal sub-precisions are chosen from the validity rules of
:class:`~x0plane.qseries.QSeries`, so the declared validity is honest.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .qseries import QSeries

__all__ = [
    "FormExpansion",
    "delta",
    "e4",
    "e4_cubed",
    "delta_N",
    "j_invariant",
    "f_function",
    "clear_cache",
]


@dataclass(frozen=True)
class FormExpansion:
    """A labelled q-expansion; ``level`` is ``N`` for DeltaN and F, else 1."""

    series: QSeries
    label: str
    level: int = 1

    @property
    def valuation(self):
        return self.series.valuation

    @property
    def validity(self):
        return self.series.validity

    def __getitem__(self, e):
        return self.series.coefficient(e)


_memo: dict[tuple[str, int], QSeries] = {}
_lock = threading.Lock()


def _cached(label, level, prec, build):
    key = (label, level)
    with _lock:
        hit = _memo.get(key)
    if hit is None or hit.validity < prec:
        hit = build()
        assert hit.validity >= prec
        with _lock:
            old = _memo.get(key)
            if old is None or old.validity < hit.validity:
                _memo[key] = hit
    return FormExpansion(hit.truncate(prec), label, level)


def clear_cache():
    with _lock:
        _memo.clear()


def euler_product(prec):
    """``prod_{n>=1} (1 - q^n)`` valid to ``prec`` via pentagonal numbers."""
    coeffs = [0] * (prec + 1)
    k = 0
    while True:
        k += 1
        sign = -1 if k % 2 else 1
        g1 = k * (3 * k - 1) // 2
        if g1 > prec:
            break
        coeffs[g1] += sign
        g2 = k * (3 * k + 1) // 2
        if g2 <= prec:
            coeffs[g2] += sign
    coeffs[0] = 1
    return QSeries(coeffs, 0, prec)


def delta(prec: int) -> FormExpansion:
    """Ramanujan's Delta = q prod (1 - q^n)^24, exact through ``q**prec``."""
    if prec < 1:
        raise ValueError("prec must be at least 1")

    def build():
        return QSeries.monomial(1) * euler_product(prec - 1) ** 24

    return _cached("Delta", 1, prec, build)


def e4(prec: int) -> FormExpansion:
    """E4 = 1 + 240 sum sigma_3(n) q^n."""
    if prec < 0:
        raise ValueError("prec must be nonnegative")

    def build():
        sig = [0] * (prec + 1)
        for d in range(1, prec + 1):
            cube = d**3
            for m in range(d, prec + 1, d):
                sig[m] += cube
        return QSeries([1] + [240 * s for s in sig[1:]], 0, prec)

    return _cached("E4", 1, prec, build)


def e4_cubed(prec: int) -> FormExpansion:
    return _cached("E4Cubed", 1, prec, lambda: e4(prec).series ** 3)


def delta_N(N: int, prec: int) -> FormExpansion:
    """Delta(N z) = Delta with q replaced by q^N."""
    if N < 1:
        raise ValueError("N must be positive")

    def build():
        # substitute_qN(Delta valid to P) is valid to N*P + N - 1.
        inner = max(1, -(-(prec - N + 1) // N))
        return delta(inner).series.substitute_qN(N)

    return _cached("DeltaN", N, prec, build)


def j_invariant(prec: int) -> FormExpansion:
    """Klein's j = E4^3 / Delta = q^-1 + 744 + 196884 q + ..."""
    if prec < -1:
        raise ValueError("prec must be at least -1")

    def build():
        # Delta valid to V inverts to validity V - 2; E4^3 * that loses one more.
        return e4_cubed(prec + 1).series * delta(prec + 2).series.invert()

    return _cached("J", 1, prec, build)


def f_function(N: int, prec: int) -> FormExpansion:
    """f_N = Delta(N z) / Delta, valuation ``N - 1`` with leading coefficient 1."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if prec < N - 1:
        raise ValueError("prec must be at least N - 1")

    def build():
        return delta_N(N, prec + 1).series * delta(prec - N + 2).series.invert()

    return _cached("F", N, prec, build)
