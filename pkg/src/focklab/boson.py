"""Heisenberg generators on F: bead moves, alpha_0 and the shift operator."""
from __future__ import annotations

from . import kernels
from .basis import ChargedPartition
from .clifford import active_range2
from .fockvec import FockVector, LinOp


def alpha_apply(k: int, state: ChargedPartition) -> FockVector:
    out = FockVector()
    h = state.charge
    for sign, lam in kernels.bead_moves(state.lam, k):
        out.terms[ChargedPartition(lam, h)] = sign
    return out


def alpha(k: int) -> LinOp:
    """alpha_k moves one bead k places right (towards lower positions), signed by beads jumped."""
    if k == 0:
        raise ValueError("alpha_0 is the charge operator; use alpha0()")
    return LinOp(lambda s: alpha_apply(k, s), f"alpha({k})")


def alpha0() -> LinOp:
    return LinOp(lambda s: FockVector.basis(s, s.charge), "a0")


def shift(power: int = 1) -> LinOp:
    """s^power: |lam, h> -> |lam, h + power>."""
    name = "s" if power == 1 else f"s^{power}"
    return LinOp(lambda s: FockVector.basis(ChargedPartition(s.lam, s.charge + power)), name)


def alpha_via_clifford_apply(k: int, state: ChargedPartition) -> FockVector:
    out = FockVector()
    lam, h = state.lam, state.charge
    for m2 in active_range2(state, spread=k):
        r = kernels.psi_psi_star(lam, h, m2, m2 + 2 * k)
        if r is not None:
            out.add_term(ChargedPartition(r[1], h), r[0])
    return out


def alpha_via_clifford(k: int) -> LinOp:
    """sum_m psi_m psi*_{m+k}, truncated to the pairs that can act on each state."""
    if k == 0:
        raise ValueError("k must be nonzero")
    return LinOp(lambda s: alpha_via_clifford_apply(k, s), f"alphaCl({k})")
