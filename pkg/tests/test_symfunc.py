from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from focklab.basis import ChargedPartition as CP, partitions, states
from focklab.boson import alpha
from focklab.symfunc import (
    BosonPoly, SymPoly, all_permutations_symmetric, char_poly, char_poly_to_schur, kostka, mn_character,
    power_sum, power_sum_expand, power_sum_expand_mn, power_sum_product, schur, sigma, sigma_rank,
    weyl_on_B, z_mu,
)

# frozen: s_lambda in power sums, computed by hand from the character table of S_3
FROZEN = {
    (3,): {(3,): Fr(1, 3), (2, 1): Fr(1, 2), (1, 1, 1): Fr(1, 6)},
    (2, 1): {(3,): Fr(-1, 3), (1, 1, 1): Fr(1, 3)},
    (1, 1, 1): {(3,): Fr(1, 3), (2, 1): Fr(-1, 2), (1, 1, 1): Fr(1, 6)},
}


def test_frozen_power_sum_expansions():
    for lam, want in FROZEN.items():
        assert power_sum_expand(lam) == want
        assert power_sum_expand_mn(lam) == want


@pytest.mark.parametrize("n", range(1, 8))
def test_linear_solve_matches_murnaghan_nakayama(n):
    for lam in partitions(n):
        assert power_sum_expand(lam) == power_sum_expand_mn(lam)


def test_small_invariants():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1, 1), (2, 1)) == 0
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 2), (2, 2)) == 2
    assert z_mu((2, 1)) == 2 and z_mu((1, 1, 1)) == 6 and z_mu((2, 2)) == 8


def test_schur_polynomials():
    e2 = schur((1, 1), 3)
    assert e2.terms == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    assert schur((2, 1), 3).terms[(1, 1, 1)] == 2
    assert schur((1, 1, 1, 1), 3) == SymPoly(3, {})
    assert all_permutations_symmetric(schur((3, 1), 3))


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([lam for n in range(1, 6) for lam in partitions(n)]), st.integers(1, 4))
def test_schur_equals_power_sum_combination(lam, n):
    total = SymPoly(n, {})
    for mu, c in power_sum_expand(lam).items():
        total = total + power_sum_product(mu, n) * SymPoly(n, {(0,) * n: c})
    assert total == schur(lam, n)


def test_power_sum():
    assert power_sum(2, 2).terms == {(2, 0): 1, (0, 2): 1}
    assert schur((2,), 2).drop_last_variable() == schur((2,), 1)


def test_char_poly_examples():
    assert char_poly((2,)) == BosonPoly({(0, (2,)): Fr(1, 2), (0, (0, 1)): 1})
    assert char_poly((1, 1)) == BosonPoly({(0, (2,)): Fr(1, 2), (0, (0, 1)): -1})
    assert str(char_poly((2,))) == "1/2*x1^2 + x2"
    # x_k = p_k / k turns chi back into s_lambda
    for lam in ((2, 1), (3, 1), (2, 2)):
        assert char_poly_to_schur(lam, 3) == schur(lam, 3)


def test_bosonpoly_algebra():
    x1 = BosonPoly.monomial(0, (1,))
    assert (x1 * x1 - x1 * x1) == BosonPoly()
    assert (x1 + x1).charge_part(0) == x1 * 2
    assert (x1 + x1).charge_part(1) == BosonPoly()


def test_sigma_intertwines():
    for s in states(4, range(-1, 2)):
        for k in (-3, -1, 1, 2):
            assert sigma(alpha(k)(s)) == weyl_on_B(k)(sigma(s))


def test_sigma_injective_on_degree():
    sts = states(5, range(-1, 2))
    assert sigma_rank(sts) == len(sts)


def test_sigma_on_basis():
    assert sigma(CP((2,), 1)) == BosonPoly({(1, (2,)): Fr(1, 2), (1, (0, 1)): 1})
