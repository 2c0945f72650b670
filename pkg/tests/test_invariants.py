import pytest

from oracles import genus_zero_levels
from x0plane.bivariate import BivariatePoly
from x0plane.cuspdiv import cusp_classes
from x0plane.invariants import IdentityViolation, curve_invariants, degree_formula_check, genus
from x0plane.ntarith import dedekind_psi


def test_level2():
    inv = curve_invariants(2)
    assert (inv.psi, inv.genus, inv.dim_M12, inv.deg_CN) == (3, 0, 4, 3)
    assert (inv.nu2, inv.nu3, inv.nu_inf) == (1, 0, 2)


def test_level11():
    inv = curve_invariants(11)
    assert inv.genus == 1
    assert inv.dim_M12 == dedekind_psi(11) - 1 + 1 == 12


def test_level5_degree():
    assert curve_invariants(5).deg_CN == 6


def test_genus_zero_levels():
    assert [N for N in range(2, 26) if genus(N) == 0] == genus_zero_levels()


@pytest.mark.parametrize("N, g", [(11, 1), (22, 2), (23, 2), (37, 2), (64, 3), (100, 7)])
def test_known_genera(N, g):
    assert genus(N) == g


def test_identity_and_cusp_count_to_10000():
    for N in range(2, 10001):
        inv = curve_invariants(N)
        assert inv.dim_M12 + inv.genus - 1 == inv.psi
        if N <= 2000:
            assert inv.nu_inf == sum(c.multiplicity for c in cusp_classes(N))


def test_degree_formula_check():
    P2 = BivariatePoly(2, {(0, 3): 16777216, (1, 1): -1, (0, 2): 196608, (0, 1): 768, (0, 0): 1})
    assert degree_formula_check(2, P2)
    P3_bad = BivariatePoly(3, {(0, 3): 1, (1, 1): -1, (0, 0): 1})
    assert not degree_formula_check(3, P3_bad)


def test_identity_violation_is_an_assertion():
    assert issubclass(IdentityViolation, AssertionError)
