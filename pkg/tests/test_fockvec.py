from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from focklab.basis import ChargedPartition as CP
from focklab.fockvec import FockVector, LaurentQ, LinOp, commutator, compose, identity, inner, scalar_op

q = LaurentQ.q()
laurent_st = st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=4).map(LaurentQ)


def test_zero_terms_are_dropped():
    v = FockVector.basis(CP((1,), 0), 2)
    v.add_term(CP((1,), 0), -2)
    assert not v and v == FockVector() and len(v) == 0


def test_arithmetic_and_inner():
    a, b = CP((2,), 0), CP((1, 1), 0)
    v = FockVector({a: 1, b: Fraction(1, 2)})
    w = FockVector({a: 3})
    assert v + w == FockVector({a: 4, b: Fraction(1, 2)})
    assert v - v == FockVector()
    assert v * 2 == FockVector({a: 2, b: 1})
    assert inner(v, w) == 3
    assert v[CP((3,), 0)] == 0


def test_json_roundtrip_with_q():
    v = FockVector({CP((2, 1), -1): q + 1, CP((), 0): Fraction(-3, 4)})
    assert FockVector.from_json(v.to_json()) == v


def test_repr_order_is_deterministic():
    v = FockVector({CP((1, 1), 0): 1, CP((2,), 0): 1})
    assert repr(v) == repr(FockVector({CP((2,), 0): 1, CP((1, 1), 0): 1}))


@given(laurent_st, laurent_st, laurent_st)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    if b:
        assert (a * b).divexact(b) == a


def test_laurent_basics():
    assert q * q ** -1 == LaurentQ.lift(1)
    assert (q + q ** -1).at_one() == 2
    with pytest.raises(ValueError):
        (q + 1) ** -1
    with pytest.raises(ValueError):
        (q ** 2 + 1).divexact(q + 1)
    with pytest.raises(ZeroDivisionError):
        q.divexact(LaurentQ())


def test_linop_algebra():
    double = scalar_op(2)
    assert double(CP((1,), 0)) == FockVector.basis(CP((1,), 0), 2)
    shift = LinOp(lambda s: FockVector.basis(CP(s.lam, s.charge + 1)), "s")
    s0 = CP((), 0)
    assert compose(shift, shift)(s0) == FockVector.basis(CP((), 2))
    assert (shift * shift)(s0) == compose(shift, shift)(s0)
    assert commutator(shift, identity())(s0) == FockVector()
    assert (shift - shift)(s0) == FockVector()
    assert (3 * shift)(s0) == FockVector.basis(CP((), 1), 3)
