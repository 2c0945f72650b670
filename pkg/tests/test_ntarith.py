import random
from math import gcd, prod

import pytest

from oracles import brute_divisors, brute_phi, brute_sigma3, psi_by_cusp_sum
from x0plane.ntarith import dedekind_psi, divisors, euler_phi, factor, sigma3


@pytest.mark.parametrize("n, expected", [(1, ()), (12, ((2, 2), (3, 1))), (97, ((97, 1),))])
def test_factor(n, expected):
    assert factor(n) == expected


def test_factor_reconstructs():
    for n in range(1, 3000):
        fac = factor(n)
        assert prod(p**e for p, e in fac) == n
        assert [p for p, _ in fac] == sorted({p for p, _ in fac})
        assert all(e >= 1 and brute_phi(p) == p - 1 for p, e in fac)


@pytest.mark.parametrize("n, expected", [(1, [1]), (6, [1, 2, 3, 6]), (4, [1, 2, 4])])
def test_divisors(n, expected):
    assert divisors(n) == expected


def test_divisors_brute():
    assert all(divisors(n) == brute_divisors(n) for n in range(1, 500))


def test_sigma3_values():
    # 1^3 + 2^3 and 1 + 8 + 27 + 216 by direct summation.
    assert [sigma3(1), sigma3(2), sigma3(6)] == [1, 9, 252]
    assert [brute_sigma3(2), brute_sigma3(6)] == [9, 252]


def test_phi_values():
    assert [euler_phi(1), euler_phi(6), euler_phi(9)] == [1, 2, 6]
    assert [brute_phi(6), brute_phi(9)] == [2, 6]


def test_phi_brute_range():
    assert all(euler_phi(n) == brute_phi(n) for n in range(1, 2001))


def test_psi_values():
    assert dedekind_psi(2) == 3
    assert dedekind_psi(5) == 6
    assert psi_by_cusp_sum(12) == 24
    assert dedekind_psi(12) == 24


def test_psi_equals_cusp_sum():
    # Index formula against the sum over cusp denominators, n <= 10^4.
    for n in range(1, 10001):
        total = 0
        for d in divisors(n):
            g = gcd(d, n // d)
            total += (n // d) * euler_phi(g) // g
        assert dedekind_psi(n) == total, n
    assert all(psi_by_cusp_sum(n) == dedekind_psi(n) for n in range(1, 300))


def test_multiplicative():
    rng = random.Random(7)
    checked = 0
    while checked < 300:
        m, n = rng.randint(1, 1000), rng.randint(1, 1000)
        if gcd(m, n) != 1:
            continue
        checked += 1
        for fn in (sigma3, euler_phi, dedekind_psi):
            assert fn(m * n) == fn(m) * fn(n)


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        factor(0)
