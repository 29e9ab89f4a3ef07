from hypothesis import given, strategies as st

from focklab.basis import ChargedPartition as CP, HalfInt, states
from focklab.clifford import (
    anticommutator_check, apply_word, charge_via_clifford, psi, psi_star, word_from_vacuum,
)
from focklab.fockvec import FockVector

states_st = st.builds(
    CP, st.lists(st.integers(1, 7), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True))),
    st.integers(-4, 4),
)


def test_vacuum_examples():
    vac = CP((), 0)
    assert psi(HalfInt(1))(vac) == FockVector.basis(CP((), 1))
    assert psi(HalfInt(-1))(vac) == FockVector()
    assert psi(HalfInt(3))(vac) == FockVector.basis(CP((1,), 1))
    assert psi(HalfInt(5))(vac) == FockVector.basis(CP((2,), 1))
    assert psi_star(HalfInt(-1))(vac) == FockVector.basis(CP((), -1))
    assert psi_star(HalfInt(-3))(vac) == FockVector.basis(CP((1,), -1), -1)
    assert psi_star(HalfInt(1))(vac) == FockVector()


def test_small_anticommutators():
    sts = states(4, range(-2, 3))
    for m2 in (-5, -1, 1, 3):
        for n2 in (-3, 1, 5):
            assert anticommutator_check(HalfInt(m2), HalfInt(n2), sts)[0]


@given(states_st)
def test_charge_operator(s):
    assert charge_via_clifford(s) == FockVector.basis(s, s.charge)


@given(states_st)
def test_word_reaches_target(s):
    out = apply_word(word_from_vacuum(s), FockVector.basis(CP((), 0)))
    assert [t for t, _ in out] == [s] and abs(out[s]) == 1


@given(states_st, st.integers(-6, 6))
def test_psi_squares_vanish(s, m):
    m = HalfInt(2 * m + 1)
    assert psi(m)(psi(m)(s)) == FockVector()
    assert psi_star(m)(psi_star(m)(s)) == FockVector()
