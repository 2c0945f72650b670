import pytest
from hypothesis import given
from hypothesis import strategies as st

import x0plane.qseries as qs
from x0plane.qseries import NonUnitLeading, PrecisionExceeded, QSeries

q = QSeries.monomial(1)


def series(coeffs, valuation=0, validity=None):
    return QSeries(coeffs, valuation, validity)


class TestExamples:
    def test_add_cancellation(self):
        assert (1 + q) + (1 - q) == QSeries.monomial(0, 2)

    def test_add_zero_identity(self):
        a = series([3, 0, -7, 5], -1, 6)
        assert QSeries.zero() + a == a

    def test_add_recomputes_valuation(self):
        a = series([1, 744], -1, 5)
        s = a + (-QSeries.monomial(-1))
        assert s.valuation == 0
        assert s.coefficients(3, 0) == [744, 0, 0]

    def test_mul(self):
        assert ((1 + q) * (1 - q)).coeffs == (1, 0, -1)
        assert QSeries.monomial(-1) * q == QSeries.one()

    def test_mul_validity(self):
        a = series([1, 2, 3], 0, 10)
        b = series([5, 1], 2, 10)
        # min(10 + 2, 10 + 0): the q^11 coefficient would need b's unknown q^11 term.
        assert (a * b).validity == 10
        assert (a * series([5, 1], 2, 20)).validity == 12

    def test_pow(self):
        assert ((1 + q) ** 2).coeffs == (1, 2, 1)
        assert series([4, 5], 0, 9) ** 0 == QSeries.one()
        assert (q**3).valuation == 3

    def test_invert_geometric(self):
        inv = series([1, -1], 0, 8).invert()
        assert inv.coefficients(9, 0) == [1] * 9

    def test_invert_monomial(self):
        inv = QSeries.monomial(1, validity=10).invert()
        assert inv.valuation == -1 and inv.coefficient(-1) == 1

    def test_invert_non_unit(self):
        with pytest.raises(NonUnitLeading):
            series([2, 1], 0, 5).invert()

    def test_substitute(self):
        assert (q + q**2).substitute_qN(2) == q**2 + q**4
        a = series([1, 2, 3], -2, 4)
        assert a.substitute_qN(1) == a
        s = QSeries.monomial(-1, validity=3).substitute_qN(3)
        assert s.valuation == -3 and s.validity == 3 * 3 + 2

    def test_coefficient(self):
        assert series([1, 2], 0, 5).coefficient(1) == 2
        assert (q**2).coefficient(-5) == 0
        with pytest.raises(PrecisionExceeded):
            series([1], 0, 10).coefficient(11)


# -- properties ------------------------------------------------------------

small = st.integers(-(10**6), 10**6)


@st.composite
def qseries(draw, unit=False, min_len=1):
    n = draw(st.integers(min_len, 40))
    coeffs = draw(st.lists(small, min_size=n, max_size=n))
    if unit:
        coeffs[0] = draw(st.sampled_from([1, -1]))
    elif not any(coeffs):
        coeffs[0] = 1
    val = draw(st.integers(-3, 3))
    extra = draw(st.integers(0, 10))
    return QSeries(coeffs, val, val + n - 1 + extra)


@given(qseries(), qseries())
def test_add_mul_commute(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(qseries(), qseries(), qseries())
def test_associative_distributive(a, b, c):
    assert ((a + b) + c).agrees_with(a + (b + c))
    assert ((a * b) * c).agrees_with(a * (b * c))
    left = a * (b + c)
    right = a * b + a * c
    assert left.agrees_with(right)


@given(qseries(unit=True))
def test_inverse_roundtrip(a):
    prod = a * a.invert()
    assert prod.validity >= a.validity - a.valuation
    assert prod.agrees_with(QSeries.one())


@given(qseries(), qseries(), st.integers(1, 5))
def test_substitution_is_multiplicative(a, b, N):
    assert (a * b).substitute_qN(N).agrees_with(a.substitute_qN(N) * b.substitute_qN(N))


@given(qseries(min_len=5), qseries(min_len=5), st.integers(1, 4))
def test_validity_never_optimistic(a, b, drop):
    # Lower the input precision; every coefficient still declared valid must not move.
    coarse = a.truncate(a.validity - drop) * b.truncate(b.validity - drop)
    fine = a * b
    assert coarse.validity <= fine.validity
    assert coarse.agrees_with(fine)


@given(st.lists(st.integers(-(10**300), 10**300), min_size=30, max_size=60), st.lists(small, min_size=30, max_size=60))
def test_kronecker_matches_schoolbook(x, y):
    assert qs._kronecker(x, y) == qs._schoolbook(x, y)


def test_pow_matches_repeated_product():
    a = QSeries([1, -3, 5, 0, 2], -1, 20)
    acc = QSeries.one()
    for k in range(7):
        assert (a**k).agrees_with(acc)
        assert (a**k).validity == acc.validity
        acc = acc * a
