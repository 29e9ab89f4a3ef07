from hypothesis import given, settings, strategies as st

from focklab.basis import ChargedPartition as CP, states
from focklab.boson import alpha, alpha0, alpha_via_clifford, shift
from focklab.fockvec import FockVector, commutator, operators_equal_on, scalar_op, zero_op

states_st = st.builds(
    CP, st.lists(st.integers(1, 6), max_size=5).map(lambda xs: tuple(sorted(xs, reverse=True))),
    st.integers(-3, 3),
)


def test_vacuum():
    vac = CP((), 0)
    for k in range(1, 5):
        assert alpha(k)(vac) == FockVector()
    # alpha_{-k} on the vacuum gives the hook sum with signs (-1)^leg
    assert alpha(-3)(vac) == FockVector({CP((3,), 0): 1, CP((2, 1), 0): -1, CP((1, 1, 1), 0): 1})


def test_alpha0_and_shift():
    s = CP((2, 1), -2)
    assert alpha0()(s) == FockVector.basis(s, -2)
    assert shift()(s) == FockVector.basis(CP((2, 1), -1))
    assert shift(-2)(s) == FockVector.basis(CP((2, 1), -4))


@settings(max_examples=40)
@given(states_st, st.integers(-5, 5).filter(bool))
def test_bead_moves_equal_bilinear_sum(s, k):
    assert alpha(k)(s) == alpha_via_clifford(k)(s)


def test_heisenberg_small():
    sts = states(5, range(-1, 2))
    for j in (-3, -1, 1, 2):
        for k in (-2, -1, 1, 3):
            rhs = scalar_op(j) if j == -k else zero_op()
            assert operators_equal_on(commutator(alpha(j), alpha(k)), rhs, sts)[0]
