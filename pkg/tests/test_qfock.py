import pytest

from focklab.basis import ChargedPartition as CP, states
from focklab.fockvec import FockVector, LaurentQ, commutator, operators_equal_on, zero_op
from focklab.qfock import (
    ORIENTATIONS, Eq, Fq, Kq, Kq_exponent, QCounts, diagonal_identity_holds, n_counts,
    quantum_integer_ratio, specialize_q1,
)

q = LaurentQ.q()
STATES = states(5, range(-1, 3))


def test_frozen_examples():
    assert Fq(1, 2)(CP((1,), 0)) == FockVector({CP((1, 1), 0): q, CP((2,), 0): 1})
    assert Eq(1, 2)(CP((2,), 0)) == FockVector.basis(CP((1,), 0), q ** -1)
    assert n_counts((1,), 0, 2, 1, (2, 1)) == QCounts(1, 0)


def test_right_orientation_swaps_sides():
    assert Fq(1, 2, "right")(CP((1,), 0)) == FockVector({CP((1, 1), 0): 1, CP((2,), 0): q})
    with pytest.raises(ValueError):
        Fq(1, 2, "up")


def test_quantum_integers():
    assert quantum_integer_ratio(2) == q + q ** -1
    assert quantum_integer_ratio(3) == q ** 2 + 1 + q ** -2
    assert quantum_integer_ratio(0) == LaurentQ()


def test_K_is_diagonal():
    s = CP((2, 1), 0)
    e = Kq_exponent(0, 2, s)
    assert Kq(0, 2)(s) == FockVector.basis(s, q ** e)
    assert Kq(0, 2, -1)(Kq(0, 2)(s)) == FockVector.basis(s)


@pytest.mark.parametrize("orientation", ORIENTATIONS)
@pytest.mark.parametrize("level", [2, 3])
def test_both_orientations_satisfy_the_relations(orientation, level):
    for i in range(level):
        for s in STATES:
            assert diagonal_identity_holds(i, level, s, orientation)
            assert specialize_q1(Fq(i, level, orientation)(s)) == specialize_q1(Fq(i, level)(s))
        for j in range(level):
            if i != j:
                br = commutator(Eq(i, level, orientation), Fq(j, level, orientation))
                assert operators_equal_on(br, zero_op(), STATES)[0]


@pytest.mark.parametrize("orientation", ORIENTATIONS)
def test_quantum_serre_for_F(orientation):
    for level in (2, 3):
        for i in range(level):
            j = (i + 1) % level
            fi, fj = Fq(i, level, orientation), Fq(j, level, orientation)
            if level == 2:
                c3 = quantum_integer_ratio(3)
                rel = fi * fi * fi * fj - c3 * (fi * fi * fj * fi) + c3 * (fi * fj * fi * fi) - fj * fi * fi * fi
            else:
                rel = fi * fi * fj - quantum_integer_ratio(2) * (fi * fj * fi) + fj * fi * fi
            assert operators_equal_on(rel, zero_op(), states(3, range(0, level)))[0]


def test_orientations_differ_by_bar_and_a_K_factor():
    # F_right = q^(k-1) bar(F_left), E_right = q^(-k-1) bar(E_left), k the K_i exponent on the input
    bar = lambda v: v.map_coeffs(lambda c: LaurentQ({-e: a for e, a in LaurentQ.lift(c).terms.items()}))
    for level in (2, 3):
        for s in states(4, range(level)):
            for i in range(level):
                k = Kq_exponent(i, level, s)
                assert Fq(i, level, "right")(s) == bar(Fq(i, level, "left")(s)) * q ** (k - 1)
                assert Eq(i, level, "right")(s) == bar(Eq(i, level, "left")(s)) * q ** (-k - 1)
