import pytest

from oracles import delta_naive, f_naive, j_naive
from x0plane import forms
from x0plane.qseries import QSeries


def test_delta_leading_terms():
    d = forms.delta(12)
    assert d.valuation == 1 and d[1] == 1
    assert d[2] == -24 and d[3] == 252


def test_delta_matches_naive_product():
    d = forms.delta(60)
    assert [d[e] for e in range(1, 61)] == delta_naive(60)


def test_tau_is_multiplicative():
    d = forms.delta(200)
    for m, n in [(2, 3), (3, 5), (4, 7), (5, 9), (8, 25)]:
        assert d[m * n] == d[m] * d[n]
    # Hecke relation at p = 2: tau(4) = tau(2)^2 - 2^11.
    assert d[4] == d[2] ** 2 - 2**11


def test_e4():
    e = forms.e4(10)
    assert e.valuation == 0
    assert [e[0], e[1], e[2]] == [1, 240, 2160]


def test_j_invariant():
    j = forms.j_invariant(40)
    assert j.valuation == -1
    assert [j[-1], j[0], j[1]] == [1, 744, 196884]
    assert [j[e] for e in range(-1, 41)] == j_naive(42)


def test_j_times_delta_is_e4_cubed():
    prec = 80
    lhs = forms.j_invariant(prec).series * forms.delta(prec).series
    assert lhs.validity >= prec - 1
    assert lhs.agrees_with(forms.e4_cubed(prec).series)


def test_delta_inverse_roundtrip():
    d = forms.delta(50).series
    assert (d * d.invert()).agrees_with(QSeries.one())


@pytest.mark.parametrize("N", range(2, 9))
def test_f_against_triangular_solve(N):
    prec = 60
    f = forms.f_function(N, prec)
    assert f.valuation == N - 1
    assert f[N - 1] == 1
    L = prec - N + 2
    assert [f[e] for e in range(N - 1, prec + 1)] == f_naive(N, L)


@pytest.mark.parametrize("label, make", [
    ("Delta", lambda p: forms.delta(p)),
    ("J", lambda p: forms.j_invariant(p)),
    ("F3", lambda p: forms.f_function(3, p)),
    ("DeltaN", lambda p: forms.delta_N(4, p)),
])
def test_precision_stability(label, make):
    forms.clear_cache()
    low = make(30)
    forms.clear_cache()
    high = make(90)
    assert low.validity >= 30 and high.validity >= 90
    assert low.series.agrees_with(high.series)


def test_cache_never_under_delivers():
    forms.clear_cache()
    forms.j_invariant(200)
    for p in (10, 150, 300):
        assert forms.j_invariant(p).validity >= p


def test_declared_validity_is_exact():
    # Each constructor reports at least the requested validity, never far more
    # than what the naive oracle confirms.
    f = forms.f_function(5, 40)
    assert f.validity == 40
    assert [f[e] for e in range(4, 41)] == f_naive(5, 37)
