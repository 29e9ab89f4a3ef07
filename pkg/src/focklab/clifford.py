"""Clifford generators psi_m, psi*_m acting on semi-infinite wedges."""
from __future__ import annotations

from typing import Iterable

from . import kernels
from .basis import ChargedPartition, HalfInt, to_twice
from .fockvec import FockVector, LinOp, anticommutator, compose, identity, operators_equal_on, zero_op


def psi_apply(m2: int, state: ChargedPartition) -> FockVector:
    r = kernels.psi(state.lam, state.charge, m2)
    if r is None:
        return FockVector()
    return FockVector.basis(ChargedPartition(r[1], state.charge + 1), r[0])


def psi_star_apply(m2: int, state: ChargedPartition) -> FockVector:
    r = kernels.psi_star(state.lam, state.charge, m2)
    if r is None:
        return FockVector()
    return FockVector.basis(ChargedPartition(r[1], state.charge - 1), r[0])


def psi(m) -> LinOp:
    """psi_m: wedge with e_m.  Raises the charge by one."""
    m2 = to_twice(m)
    return LinOp(lambda s: psi_apply(m2, s), f"psi({HalfInt(m2)})")


def psi_star(m) -> LinOp:
    """psi*_m: remove e_m (adjoint of psi_m).  Lowers the charge by one."""
    m2 = to_twice(m)
    return LinOp(lambda s: psi_star_apply(m2, s), f"psis({HalfInt(m2)})")


def psi_psi_star_apply(m2: int, n2: int, state: ChargedPartition) -> FockVector:
    r = kernels.psi_psi_star(state.lam, state.charge, m2, n2)
    if r is None:
        return FockVector()
    return FockVector.basis(ChargedPartition(r[1], state.charge), r[0])


def bilinear_sum(pairs: Iterable, state: ChargedPartition) -> FockVector:
    """Apply sum of coeff * psi_m psi*_n to a basis state.

    ``pairs`` is a finite iterable of ``(coeff, m, n)``; the caller is
    responsible for covering every pair that acts non-trivially.
    """
    out = FockVector()
    for coeff, m, n in pairs:
        if not coeff:
            continue
        r = kernels.psi_psi_star(state.lam, state.charge, to_twice(m), to_twice(n))
        if r is not None:
            out.add_term(ChargedPartition(r[1], state.charge), coeff * r[0])
    return out


def active_range2(state: ChargedPartition, spread: int = 0) -> range:
    """Doubled positions where a bead can appear or disappear.

    Below ``lo`` everything is black and stays black for moves of at
    most ``spread`` steps; above ``hi`` everything is white.  The range
    always covers the charge-0 vacuum boundary, so normal-ordered diagonal
    sums over it are complete.
    """
    L = len(state.lam)
    top = 2 * (state.charge - 1 + (state.lam[0] if L else 0)) + 1
    bottom_white = 2 * (state.charge - L) - 1
    lo = min(bottom_white, -1) - 2 * abs(spread) - 2
    hi = max(top, bottom_white, 1) + 2 * abs(spread) + 2
    return range(lo, hi + 1, 2)


def charge_via_clifford(state: ChargedPartition) -> FockVector:
    """sum_{m>0} psi_m psi*_m - sum_{m<0} psi*_m psi_m, over the active range."""
    out = FockVector()
    for m2 in active_range2(state):
        if m2 > 0:
            out = out + psi_psi_star_apply(m2, m2, state)
        else:
            out = out - psi_star(HalfInt(m2))(psi_apply(m2, state))
    return out


def anticommutator_check(m, n, states: Iterable[ChargedPartition]):
    """Check the three Clifford relations for the pair (m, n) on ``states``.

    Returns ``(ok, failing_state, relation)``.
    """
    states = list(states)
    pm, pn = psi(m), psi(n)
    sm, sn = psi_star(m), psi_star(n)
    delta = identity() if to_twice(m) == to_twice(n) else zero_op()
    checks = [
        ("psi psi", anticommutator(pn, pm), zero_op()),
        ("psi* psi*", anticommutator(sn, sm), zero_op()),
        ("psi psi*", anticommutator(pn, sm), delta),
    ]
    for name, lhs, rhs in checks:
        ok, bad = operators_equal_on(lhs, rhs, states)
        if not ok:
            return False, bad, name
    return True, None, None


def word_from_vacuum(target: ChargedPartition) -> list[tuple[str, int]]:
    """A finite word in psi / psi* taking |(), 0> to +-|target>.

    The word is returned rightmost-first as ``[("psi"|"psis", m2), ...]``:
    strip the vacuum down to charge ``target.charge - n`` with psi*,
    then place the top ``n`` beads of the target with psi.
    """
    L = len(target.lam)
    h = target.charge
    word = []
    # charge after stripping: every bead of the target above h-L-1/2 is placed explicitly
    base = h - L
    cur = 0
    while cur > base:
        word.append(("psis", 2 * cur - 1))
        cur -= 1
    while cur < base:
        word.append(("psi", 2 * cur + 1))
        cur += 1
    beads = kernels.black_positions2(target.lam, h, L)
    for m2 in reversed(beads):
        word.append(("psi", m2))
    return word


def apply_word(word, v) -> FockVector:
    ops = [psi(HalfInt(m2)) if kind == "psi" else psi_star(HalfInt(m2)) for kind, m2 in word]
    out = v
    for op in ops:
        out = op(out)
    return out


__all__ = [
    "psi", "psi_star", "psi_apply", "psi_star_apply", "psi_psi_star_apply",
    "bilinear_sum", "active_range2", "charge_via_clifford", "anticommutator_check",
    "word_from_vacuum", "apply_word", "compose",
]
