import pytest
from hypothesis import given, settings, strategies as st

from focklab.basis import ChargedPartition as CP, HalfInt, states
from focklab.clifford import psi, psi_star
from focklab.fockvec import FockVector
from focklab.suites import GAMMA_PANEL
from focklab.vertex import (
    RELATIONS, clear_cache, fermion_from_bosons, fermion_star_from_bosons, gamma_commutation_check,
    gamma_inverse_check, gamma_minus, gamma_minus_coeff, gamma_plus, gamma_plus_coeff, psi_series,
)

VAC = CP((), 0)


def test_gamma_minus_on_vacuum_gives_rows_and_columns():
    for n in range(5):
        row = CP((n,), 0) if n else VAC
        col = CP((1,) * n, 0) if n else VAC
        assert gamma_minus_coeff(n, VAC) == FockVector.basis(row)
        assert gamma_minus_coeff(n, VAC, inverse=True) == FockVector.basis(col, (-1) ** n)


def test_gamma_plus_removes_horizontal_strips():
    s = CP((2, 1), 0)
    assert gamma_plus_coeff(1, s) == FockVector({CP((2,), 0): 1, CP((1, 1), 0): 1})
    assert gamma_plus_coeff(2, s) == FockVector.basis(CP((1,), 0))
    assert gamma_plus_coeff(3, s) == FockVector()
    assert gamma_plus_coeff(0, s) == FockVector.basis(s)


def test_series_windows():
    g = gamma_plus(CP((2,), 0))
    assert g.coeff(-2) == FockVector.basis(VAC)
    gm = gamma_minus(VAC, 3)
    assert gm.coeff(3) == FockVector.basis(CP((3,), 0))
    with pytest.raises(Exception):
        gm.coeff(4)
    with pytest.raises(ValueError):
        gamma_minus(VAC, -1)
    ps = psi_series(VAC, "-5/2", "5/2")
    assert ps.coeff("3/2") == psi(HalfInt(3))(VAC) == FockVector.basis(CP((1,), 1))


def test_worked_example():
    assert fermion_from_bosons(HalfInt(7), CP((1,), 2)) == FockVector.basis(CP((1, 1), 3))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(states(5, range(-2, 3))), st.integers(-5, 4))
def test_fermions_from_bosons(s, m):
    m = HalfInt(2 * m + 1)
    assert fermion_from_bosons(m, s) == psi(m)(s)
    assert fermion_star_from_bosons(m, s) == psi_star(m)(s)


def test_inverses():
    for s in states(4, (0, 1)):
        assert gamma_inverse_check(s)


@pytest.mark.parametrize("relation", [2, 3, 4, 5])
def test_fermion_relations_hold(relation):
    for s in GAMMA_PANEL[:6]:
        r = gamma_commutation_check(relation, s, 5)
        assert r.ok and r.coefficients_checked > 0


def test_relation_one_as_written_fails_first_at_xy():
    r = gamma_commutation_check(1, VAC, 4)
    assert not r.ok
    a, _, lhs, rhs = r.mismatch
    assert a == 1 and lhs != rhs


def test_relation_one_with_inverse_factor_holds():
    for s in GAMMA_PANEL:
        assert gamma_commutation_check(1, s, 6, corrected=True).ok


def test_relation_table_is_complete():
    assert sorted(RELATIONS) == [1, 2, 3, 4, 5]
    with pytest.raises((KeyError, ValueError)):
        gamma_commutation_check(6, VAC, 2)


def test_cache_clear_is_harmless():
    before = gamma_minus_coeff(3, CP((1,), 0))
    clear_cache()
    assert gamma_minus_coeff(3, CP((1,), 0)) == before
