"""Sparse bivariate integer polynomials ``P(x, y) = sum c_ab x^a y^b``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd

__all__ = ["BivariatePoly"]


def _monomial(a, b):
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts)


@dataclass(frozen=True)
class BivariatePoly:
    """Integer polynomial in ``x`` (for j) and ``y`` (for f), tagged with its level.

    ``terms`` maps ``(a, b)`` to the nonzero coefficient of ``x^a y^b``.
    ``normalization`` records how the overall sign/scale was fixed:
    ``"constant"`` (constant term +1 after removing content) or
    ``"leading_y"`` (fallback when the constant term vanishes).
    """

    N: int
    terms: dict = field(hash=False)
    normalization: str = "constant"

    def __post_init__(self):
        clean = {(int(a), int(b)): int(c) for (a, b), c in self.terms.items() if c}
        if not clean:
            raise ValueError("the zero polynomial is not a valid plane model")
        if any(a < 0 or b < 0 for a, b in clean):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_vector(cls, N, monomials, vector):
        """Normalize a kernel vector into a primitive polynomial.

        The content is divided out and the sign fixed so the constant term is
        positive.  If the constant term is zero the leading coefficient in
        ``y`` (highest ``b``, then highest ``a``) is made positive instead.
        """
        terms = {m: int(c) for m, c in zip(monomials, vector) if c}
        if not terms:
            raise ValueError("zero vector")
        content = reduce(gcd, terms.values())
        terms = {m: c // content for m, c in terms.items()}
        normalization = "constant"
        pivot = terms.get((0, 0), 0)
        if not pivot:
            normalization = "leading_y"
            pivot = terms[max(terms, key=lambda m: (m[1], m[0]))]
        if pivot < 0:
            terms = {m: -c for m, c in terms.items()}
        return cls(N, terms, normalization)

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def coefficient(self, a, b):
        return self.terms.get((a, b), 0)

    @property
    def degree_x(self):
        return max(a for a, _ in self.terms)

    @property
    def degree_y(self):
        return max(b for _, b in self.terms)

    @property
    def total_degree(self):
        return max(a + b for a, b in self.terms)

    @property
    def content(self):
        return reduce(gcd, self.terms.values())

    @property
    def constant_term(self):
        return self.terms.get((0, 0), 0)

    def max_abs_coefficient(self):
        return max(abs(c) for c in self.terms.values())

    def pure_x_terms(self):
        """Monomials ``x^a`` with ``a > 0`` and no ``y``; empty when f is integral over C[j]."""
        return sorted(m for m in self.terms if m[1] == 0 and m[0] > 0)

    def sorted_terms(self):
        """``(a, b, c)`` triples sorted by ``(b, a)`` descending."""
        return [(a, b, self.terms[a, b]) for a, b in sorted(self.terms, key=lambda m: (m[1], m[0]), reverse=True)]

    def evaluate(self, x, y):
        """``P(x, y)`` by Horner's rule in ``y`` then ``x``.

        ``x`` and ``y`` may be ints or any ring elements supporting ``+``
        and ``*`` with ints, e.g. :class:`~x0plane.qseries.QSeries`.
        """
        def horner(coeffs, t):
            acc = coeffs[-1]
            for c in reversed(coeffs[:-1]):
                acc = acc * t + c
            return acc

        rows = [[0] * (self.degree_x + 1) for _ in range(self.degree_y + 1)]
        for (a, b), c in self.terms.items():
            rows[b][a] = c
        return horner([horner(r, x) for r in rows], y)

    def __str__(self):
        order = sorted(self.terms, key=lambda m: (m[0] + m[1], m[0]), reverse=True)
        out = []
        for a, b in order:
            c = self.terms[a, b]
            mono = _monomial(a, b)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"BivariatePoly(N={self.N}, {self})"
