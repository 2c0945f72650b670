"""Truncated Laurent series in q with exact integer coefficients.

A :class:`QSeries` stores the coefficients of ``q**valuation`` up to the
last nonzero one; every exponent between that and ``validity`` is known to
be zero.  ``validity`` is the largest exponent whose coefficient is exact,
and every arithmetic operation propagates it conservatively.

    >>> q = QSeries.monomial(1, validity=10)
    >>> ((1 + q) * (1 - q)).coefficients(4)
    [1, 0, -1, 0, 0]
"""

from __future__ import annotations

import gmpy2

__all__ = [
    "QSeries",
    "PrecisionExceeded",
    "NonUnitLeading",
    "MAX_VALIDITY",
    "KRONECKER_THRESHOLD",
]

#: Validity assigned to exact (polynomial) series such as the constant 1.
MAX_VALIDITY = 1 << 62

#: Products where both operands have at least this many stored terms go
#: through Kronecker substitution on GMP integers instead of schoolbook.
KRONECKER_THRESHOLD = 24


class PrecisionExceeded(ValueError):
    """A coefficient beyond the validity bound was requested."""


class NonUnitLeading(ValueError):
    """Inversion of a series whose leading coefficient is not +1 or -1."""


def _exact(validity):
    # Anything within reach of the sentinel came from exact operands.
    return MAX_VALIDITY if validity >= MAX_VALIDITY >> 1 else validity


def _trim(coeffs, valuation, validity):
    """Strip zeros on both ends, returning ``(coeffs, valuation)``."""
    start = 0
    n = len(coeffs)
    while start < n and not coeffs[start]:
        start += 1
    if start == n:
        return (), validity + 1
    stop = n
    while not coeffs[stop - 1]:
        stop -= 1
    return tuple(coeffs[start:stop]), valuation + start


def _schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pack_signed(coeffs, width):
    pos = [gmpy2.mpz(c) if c > 0 else 0 for c in coeffs]
    neg = [gmpy2.mpz(-c) if c < 0 else 0 for c in coeffs]
    return gmpy2.pack(pos, width) - gmpy2.pack(neg, width)


def _kronecker(a, b):
    """Signed integer polynomial product through one big-integer product."""
    bound = max(abs(c) for c in a).bit_length() + max(abs(c) for c in b).bit_length()
    width = bound + min(len(a), len(b)).bit_length() + 2
    nslots = len(a) + len(b) - 1
    prod = _pack_signed(a, width) * _pack_signed(b, width)
    half = gmpy2.mpz(1) << (width - 1)
    # Adding half to every slot makes all digits nonnegative, so unpack is carry-free.
    bias = half * (((gmpy2.mpz(1) << (width * nslots)) - 1) // ((gmpy2.mpz(1) << width) - 1))
    digits = gmpy2.unpack(prod + bias, width)
    return [int(d - half) for d in digits[:nslots]]


def _poly_mul(a, b):
    if min(len(a), len(b)) < KRONECKER_THRESHOLD:
        return _schoolbook(a, b)
    return _kronecker(a, b)


class QSeries:
    """Exact truncated Laurent series ``sum c_e q**e`` with validity tracking.

    Instances are immutable.  Construct with the coefficients starting at
    ``valuation``; coefficients beyond the given sequence (up to ``validity``)
    are zero.  Leading and trailing zeros are stripped on construction.
    """

    __slots__ = ("_coeffs", "_valuation", "_validity")

    def __init__(self, coeffs=(), valuation=0, validity=None):
        coeffs = [int(c) for c in coeffs]
        if validity is None:
            validity = valuation + len(coeffs) - 1
        validity = _exact(int(validity))
        if validity < valuation - 1:
            raise ValueError("validity must be at least valuation - 1")
        coeffs = coeffs[: max(validity - valuation + 1, 0)]
        self._coeffs, self._valuation = _trim(coeffs, int(valuation), validity)
        self._validity = validity

    @classmethod
    def _raw(cls, coeffs, valuation, validity):
        obj = cls.__new__(cls)
        validity = _exact(validity)
        obj._coeffs, obj._valuation = _trim(coeffs, valuation, validity)
        obj._validity = validity
        return obj

    @classmethod
    def monomial(cls, exponent, coefficient=1, validity=MAX_VALIDITY):
        """``coefficient * q**exponent``, exact up to ``validity``."""
        return cls([coefficient], exponent, validity)

    @classmethod
    def one(cls, validity=MAX_VALIDITY):
        return cls.monomial(0, 1, validity)

    @classmethod
    def zero(cls, validity=MAX_VALIDITY):
        return cls((), validity + 1, validity)

    # -- accessors -------------------------------------------------------

    @property
    def valuation(self):
        """Lowest exponent with a nonzero coefficient (``validity + 1`` for zero)."""
        return self._valuation

    @property
    def validity(self):
        return self._validity

    @property
    def coeffs(self):
        """Stored coefficients from ``valuation`` to the last nonzero term."""
        return self._coeffs

    def is_zero(self):
        return not self._coeffs

    def leading_coefficient(self):
        return self._coeffs[0] if self._coeffs else 0

    def coefficient(self, e):
        """Exact coefficient of ``q**e``.

        Raises :class:`PrecisionExceeded` when ``e > validity``.
        """
        if e > self._validity:
            raise PrecisionExceeded(f"coefficient of q^{e} requested, series valid to q^{self._validity}")
        i = e - self._valuation
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    __getitem__ = coefficient

    def coefficients(self, stop, start=None):
        """Coefficients for exponents ``start..stop-1`` (default start: valuation)."""
        if start is None:
            start = min(self._valuation, stop)
        if stop - 1 > self._validity:
            raise PrecisionExceeded(f"coefficient of q^{stop - 1} requested, series valid to q^{self._validity}")
        out = [0] * max(stop - start, 0)
        lo = max(start, self._valuation)
        hi = min(stop, self._valuation + len(self._coeffs))
        off = self._valuation
        for e in range(lo, hi):
            out[e - start] = self._coeffs[e - off]
        return out

    def truncate(self, validity):
        """The same series with validity lowered to ``validity``."""
        if validity >= self._validity:
            return self
        n = validity - self._valuation + 1
        if n <= 0:
            return QSeries.zero(validity)
        return QSeries._raw(self._coeffs[:n], self._valuation, validity)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries.monomial(0, other)
        if not isinstance(other, QSeries):
            return NotImplemented
        validity = min(self._validity, other._validity)
        if self.is_zero():
            return other.truncate(validity) if other._validity > validity else other
        if other.is_zero():
            return self.truncate(validity)
        lo = min(self._valuation, other._valuation)
        hi = min(validity, max(self._valuation + len(self._coeffs), other._valuation + len(other._coeffs)) - 1)
        if hi < lo:
            return QSeries.zero(validity)
        out = [0] * (hi - lo + 1)
        for s in (self, other):
            off = s._valuation - lo
            for i, c in enumerate(s._coeffs[: max(hi - s._valuation + 1, 0)]):
                out[off + i] += c
        return QSeries._raw(out, lo, validity)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw([-c for c in self._coeffs], self._valuation, self._validity)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QSeries.monomial(0, other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k):
        """Multiply every coefficient by the integer ``k``."""
        return QSeries._raw([k * c for c in self._coeffs], self._valuation, self._validity)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self, other
        validity = min(a._validity + b._valuation, b._validity + a._valuation)
        if a.is_zero() or b.is_zero():
            if a.is_zero() and b.is_zero():
                validity = min(a._validity + b._validity, MAX_VALIDITY)
            elif a.is_zero():
                validity = a._validity + b._valuation
            else:
                validity = b._validity + a._valuation
            return QSeries.zero(min(validity, MAX_VALIDITY))
        validity = min(validity, MAX_VALIDITY)
        valuation = a._valuation + b._valuation
        # Terms past the validity of the product cannot influence it.
        keep = validity - valuation + 1
        prod = _poly_mul(a._coeffs[:keep], b._coeffs[:keep])
        return QSeries._raw(prod[:keep], valuation, validity)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = QSeries.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def invert(self):
        """Multiplicative inverse; the leading coefficient must be a unit.

        For ``a = q**v * u`` valid to ``V`` the inverse has valuation ``-v``
        and is valid to ``V - 2v``.
        """
        if self.is_zero() or self._coeffs[0] not in (1, -1):
            raise NonUnitLeading(f"leading coefficient {self.leading_coefficient()} is not a unit")
        v = self._valuation
        validity = self._validity - 2 * v
        n = validity + v + 1  # number of coefficients of the inverse
        if n <= 0:
            return QSeries.zero(validity)
        u = self._coeffs[:n]
        lead = u[0]
        inv = [lead]
        prec = 1
        # Newton iteration b <- b + b(1 - u b), doubling the number of known terms.
        while prec < n:
            prec = min(2 * prec, n)
            ub = _poly_mul(u[:prec], inv)[:prec]
            err = [-c for c in ub] + [0] * (prec - len(ub))
            err[0] += 1
            corr = _poly_mul(inv, err)[:prec]
            inv = inv + [0] * (prec - len(inv))
            inv = [x + c for x, c in zip(inv, corr)]
        return QSeries._raw(inv, -v, validity)

    def substitute_qN(self, N):
        """The series in ``q**N``: valuation and gaps scale by ``N``.

        The result is valid to ``N * validity + N - 1`` because the exponents
        strictly between multiples of ``N`` are known zeros.
        """
        if N < 1:
            raise ValueError("N must be positive")
        if N == 1:
            return self
        out = [0] * (N * (len(self._coeffs) - 1) + 1) if self._coeffs else []
        out[::N] = self._coeffs
        validity = min(N * self._validity + N - 1, MAX_VALIDITY)
        return QSeries._raw(out, N * self._valuation, validity)

    # -- comparison and display -------------------------------------------

    def agrees_with(self, other, upto=None):
        """True if both series agree on every exponent valid in both."""
        top = min(self._validity, other._validity)
        if upto is not None:
            top = min(top, upto)
        # Past the last stored term of both series every coefficient is zero.
        top = min(top, max(self._valuation + len(self._coeffs), other._valuation + len(other._coeffs)))
        lo = min(self._valuation, other._valuation)
        if top < lo:
            return True
        return self.coefficients(top + 1, lo) == other.coefficients(top + 1, lo)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self._validity, self._valuation, self._coeffs) == (other._validity, other._valuation, other._coeffs)

    def __hash__(self):
        return hash((self._validity, self._valuation, self._coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self._coeffs[:6]):
            terms.append(f"{c}*q^{self._valuation + i}")
        body = " + ".join(terms) if terms else "0"
        if len(self._coeffs) > 6:
            body += " + ..."
        top = "exact" if self._validity >= MAX_VALIDITY else f"O(q^{self._validity + 1})"
        return f"QSeries({body}, {top})"
