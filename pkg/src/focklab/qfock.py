"""The Misra-Miwa action of U_q(affine sl_l) on F_q = F (x) Q[q, q^-1].

A box n is "to the left" of a box b when its content c - r is larger.
``orientation="right"`` flips this, which exists only so the choice can
be tested.
"""
from __future__ import annotations

from typing import NamedTuple

from .basis import (
    ChargedPartition, add_box, addable_boxes, content, remove_box, removable_boxes,
)
from .fockvec import FockVector, LaurentQ, LinOp

ORIENTATIONS = ("left", "right")


class QCounts(NamedTuple):
    Na: int
    Nr: int


def _check(i: int, level: int, orientation: str):
    if level < 2:
        raise ValueError("level must be >= 2")
    if not 0 <= i < level:
        raise ValueError(f"color {i} outside 0..{level - 1}")
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")


def n_counts(lam, h: int, level: int, i: int, box, orientation: str = "left") -> QCounts:
    """(N^a, N^r) for an addable or removable i-colored ``box`` of lam.

    N^a = #addable - #removable i-boxes left of ``box``; N^r the same to the right.
    """
    _check(i, level, orientation)
    state = ChargedPartition(tuple(lam), h)
    adds = addable_boxes(state, i, level)
    rems = removable_boxes(state, i, level)
    if box not in adds and box not in rems:
        raise ValueError(f"box {box} is not an addable or removable {i}-box")
    c0 = content(box)
    sgn = 1 if orientation == "left" else -1

    def count(side):
        a = sum(1 for n in adds if side * (content(n) - c0) > 0)
        r = sum(1 for n in rems if side * (content(n) - c0) > 0)
        return a - r

    return QCounts(count(sgn), count(-sgn))


def Fq_apply(i: int, level: int, state: ChargedPartition, orientation: str = "left") -> FockVector:
    out = FockVector()
    for box in addable_boxes(state, i, level):
        na = n_counts(state.lam, state.charge, level, i, box, orientation).Na
        out.add_term(ChargedPartition(add_box(state.lam, box), state.charge), LaurentQ.q(na))
    return out


def Eq_apply(i: int, level: int, state: ChargedPartition, orientation: str = "left") -> FockVector:
    out = FockVector()
    for box in removable_boxes(state, i, level):
        nr = n_counts(state.lam, state.charge, level, i, box, orientation).Nr
        out.add_term(ChargedPartition(remove_box(state.lam, box), state.charge), LaurentQ.q(-nr))
    return out


def Kq_exponent(i: int, level: int, state: ChargedPartition) -> int:
    return len(addable_boxes(state, i, level)) - len(removable_boxes(state, i, level))


def Fq(i: int, level: int, orientation: str = "left") -> LinOp:
    """F_i: add an i-box, weighted by q^(N^a)."""
    _check(i, level, orientation)
    return LinOp(lambda s: Fq_apply(i, level, s, orientation), f"Fq({i})")


def Eq(i: int, level: int, orientation: str = "left") -> LinOp:
    """E_i: remove an i-box, weighted by q^(-N^r)."""
    _check(i, level, orientation)
    return LinOp(lambda s: Eq_apply(i, level, s, orientation), f"Eq({i})")


def Kq(i: int, level: int, power: int = 1) -> LinOp:
    """K_i^power = q^(power (#addable - #removable i-boxes))."""
    _check(i, level, "left")
    return LinOp(lambda s: FockVector.basis(s, LaurentQ.q(power * Kq_exponent(i, level, s))),
                 f"K({i})" if power == 1 else f"K({i})^{power}")


def specialize_q1(v: FockVector) -> FockVector:
    """Evaluate every coefficient at q = 1."""
    out = FockVector()
    for b, c in v.terms.items():
        out.add_term(b, c.at_one() if isinstance(c, LaurentQ) else c)
    return out


def quantum_integer_ratio(n: int) -> LaurentQ:
    """(q^n - q^-n) / (q - q^-1), by exact division."""
    num = LaurentQ({n: 1}) - LaurentQ({-n: 1})
    return num.divexact(LaurentQ({1: 1, -1: -1}))


def diagonal_identity_holds(i: int, level: int, state: ChargedPartition, orientation: str = "left") -> bool:
    """(E_i F_i - F_i E_i) v == (K_i - K_i^-1)/(q - q^-1) v on a basis state."""
    e, f = Eq(i, level, orientation), Fq(i, level, orientation)
    lhs = e(f.on_basis(state)) - f(e.on_basis(state))
    rhs = FockVector.basis(state, quantum_integer_ratio(Kq_exponent(i, level, state)))
    return lhs == rhs
