"""Generating series psi(z), psi*(z), Gamma_+-(z) and the boson-fermion dictionary.

All series act on a fixed vector, so each coefficient is a finite
computation.  z-exponents are stored doubled; an :class:`FSeries`
carries its window, so a truncated series never passes for a full one.

Conventions::

    psi(z)      = sum_m z^m psi_m          psi*(z) = sum_m z^-m psi*_m
    Gamma_+(z)  = exp sum_k z^-k/k alpha_k
    Gamma_-(z)  = exp sum_k z^k/k alpha_-k

Writing Gamma_+(z) = sum_a z^-a P_a and Gamma_-(z) = sum_b z^b G_b, the
coefficients obey a P_a = sum_k alpha_k P_{a-k} and b G_b = sum_k
alpha_-k G_{b-k}; the inverses use -alpha.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .basis import ChargedPartition, HalfInt, to_twice
from .boson import alpha_apply
from .clifford import psi_apply, psi_star_apply
from .fockvec import FockVector, as_vector

# --------------------------------------------------------------------------
# FSeries


@dataclass
class FSeries:
    """Formal series in one variable with Fock-vector coefficients.

    ``coeffs`` maps a doubled exponent to a vector; every exponent in
    ``[lo2, hi2]`` not present has coefficient zero.
    """

    lo2: int
    hi2: int
    coeffs: dict = field(default_factory=dict)
    exact: bool = False

    def coeff(self, e) -> FockVector:
        """Coefficient of z^e; ``e`` is the exponent itself, e.g. ``-2`` or ``"7/2"``."""
        e2 = _exp2(e)
        if not self.lo2 <= e2 <= self.hi2:
            raise KeyError(f"exponent {Fraction(e2, 2)} lies outside the window "
                           f"[{Fraction(self.lo2, 2)}, {Fraction(self.hi2, 2)}]")
        return self.coeffs.get(e2, FockVector())

    def __eq__(self, other):
        return (isinstance(other, FSeries) and (self.lo2, self.hi2) == (other.lo2, other.hi2)
                and {e: v for e, v in self.coeffs.items() if v} == {e: v for e, v in other.coeffs.items() if v})

    def items(self):
        return sorted((e, v) for e, v in self.coeffs.items() if v)

    def __repr__(self):
        body = " + ".join(f"z^{_fmt_exp(e)}*({v})" for e, v in self.items()) or "0"
        tag = "exact" if self.exact else f"window [{_fmt_exp(self.lo2)}, {_fmt_exp(self.hi2)}]"
        return f"{body}  ({tag})"


def _exp2(e) -> int:
    """Doubled exponent from an int, Fraction or half-integer literal."""
    if isinstance(e, HalfInt):
        return e.twice
    f = Fraction(e) if not isinstance(e, str) else Fraction(e.strip())
    t = 2 * f
    if t.denominator != 1:
        raise ValueError(f"exponent {e} is not in (1/2)Z")
    return t.numerator


def _fmt_exp(e2: int) -> str:
    return str(e2 // 2) if e2 % 2 == 0 else f"{e2}/2"


# --------------------------------------------------------------------------
# Gamma coefficients


_cache: dict = {}


def _alpha_on(k: int, v: FockVector) -> FockVector:
    out = FockVector()
    for b, c in v.terms.items():
        for b2, c2 in alpha_apply(k, b).terms.items():
            out.add_term(b2, c2 * c)
    return out


def _gamma_basis(state: ChargedPartition, n: int, plus: bool, sign: int) -> FockVector:
    """Coefficient of z^(-n) in Gamma_+^sign (plus) or z^n in Gamma_-^sign, on a basis state."""
    key = (state, n, plus, sign)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    if n == 0:
        out = FockVector.basis(state)
    elif plus and n > state.size:
        out = FockVector()
    else:
        out = FockVector()
        for k in range(1, n + 1):
            prev = _gamma_basis(state, n - k, plus, sign)
            if prev:
                out = out + _alpha_on(k if plus else -k, prev)
        out = out * Fraction(sign, n)
        out = out.map_coeffs(_demote)
    _cache[key] = out
    return out


def _demote(c):
    return c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c


def clear_cache() -> None:
    _cache.clear()


def gamma_plus_coeff(a: int, v, inverse: bool = False) -> FockVector:
    """[z^-a] Gamma_+(z)^{+-1} v."""
    v = as_vector(v)
    out = FockVector()
    for b, c in v.terms.items():
        out = out + _gamma_basis(b, a, True, -1 if inverse else 1) * c
    return out


def gamma_minus_coeff(b: int, v, inverse: bool = False) -> FockVector:
    """[z^b] Gamma_-(z)^{+-1} v."""
    v = as_vector(v)
    out = FockVector()
    for s, c in v.terms.items():
        out = out + _gamma_basis(s, b, False, -1 if inverse else 1) * c
    return out


def gamma_plus(v, inverse: bool = False) -> FSeries:
    """Gamma_+(z)^{+-1} v; the series stops at z^-|lam|, so this is exact."""
    v = as_vector(v)
    top = max((s.size for s in v.terms), default=0)
    coeffs = {-2 * a: gamma_plus_coeff(a, v, inverse) for a in range(top + 1)}
    return FSeries(-2 * top, 0, coeffs, exact=True)


def gamma_minus(v, degree: int, inverse: bool = False) -> FSeries:
    """Gamma_-(z)^{+-1} v truncated after z^degree."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    v = as_vector(v)
    coeffs = {2 * b: gamma_minus_coeff(b, v, inverse) for b in range(degree + 1)}
    return FSeries(0, 2 * degree, coeffs)


def psi_series(v, lo, hi) -> FSeries:
    """psi(z) v on the window lo <= exponent <= hi (half-integers)."""
    v = as_vector(v)
    lo2, hi2 = to_twice(lo), to_twice(hi)
    coeffs = {}
    for m2 in range(lo2, hi2 + 1, 2):
        coeffs[m2] = _apply_basiswise(psi_apply, m2, v)
    return FSeries(lo2, hi2, coeffs)


def psi_star_series(v, lo, hi) -> FSeries:
    """psi*(z) v on a window; the coefficient of z^e is psi*_{-e} v."""
    v = as_vector(v)
    lo2, hi2 = to_twice(lo), to_twice(hi)
    coeffs = {}
    for e2 in range(lo2, hi2 + 1, 2):
        coeffs[e2] = _apply_basiswise(psi_star_apply, -e2, v)
    return FSeries(lo2, hi2, coeffs)


def _apply_basiswise(fn, m2: int, v: FockVector) -> FockVector:
    out = FockVector()
    for b, c in v.terms.items():
        for b2, c2 in fn(m2, b).terms.items():
            out.add_term(b2, c2 * c)
    return out


# --------------------------------------------------------------------------
# boson-fermion correspondence


def fermion_from_bosons(m, v) -> FockVector:
    """[z^m] s z^(ch+1/2) Gamma_-(z) Gamma_+(z)^-1 v.

    Gamma_+^-1 terminates, and for the z^-a term only the Gamma_- degree
    b = m - h - 1/2 + a contributes, so the result is exact.
    """
    m2 = to_twice(m)
    out = FockVector()
    for state, c in as_vector(v).terms.items():
        h = state.charge
        for a in range(state.size + 1):
            w = _gamma_basis(state, a, True, -1)
            if not w:
                continue
            b = (m2 - 1) // 2 - h + a
            if b < 0:
                continue
            out = out + gamma_minus_coeff(b, w) * c
    return out.shift_charge(1)


def fermion_star_from_bosons(m, v) -> FockVector:
    """[z^-m] s^-1 z^(-ch+1/2) Gamma_-(z)^-1 Gamma_+(z) v."""
    m2 = to_twice(m)
    out = FockVector()
    for state, c in as_vector(v).terms.items():
        h = state.charge
        for a in range(state.size + 1):
            u = _gamma_basis(state, a, True, 1)
            if not u:
                continue
            b = a + h - (m2 + 1) // 2
            if b < 0:
                continue
            out = out + gamma_minus_coeff(b, u, inverse=True) * c
    return out.shift_charge(-1)


# --------------------------------------------------------------------------
# commutation relations
#
# The relations are checked with the generating series written in the
# dual frame
#
#     Gamma_+(x) = exp sum x^k/k alpha_k,   Gamma_-(x) = exp sum x^k/k alpha_-k,
#     psi(z) = sum z^-m psi_m,              psi*(z) = sum z^m psi*_m,
#
# in which every coefficient of every product is a finite sum and the
# five scalar factors below are the classical ones.  The first one is
# listed as (1 - xy); the identity that actually holds has (1 - xy)^-1,
# which ``corrected=True`` selects.

RELATIONS = {
    1: ("Gamma_+(x) Gamma_-(y) = (1 - x y) Gamma_-(y) Gamma_+(x)", "Gp", "Gm", (1, 1), +1),
    2: ("Gamma_+(x) psi(z) = (1 - x/z)^-1 psi(z) Gamma_+(x)", "Gp", "psi", (1, -1), -1),
    3: ("Gamma_-(x) psi(z) = (1 - x z)^-1 psi(z) Gamma_-(x)", "Gm", "psi", (1, 1), -1),
    4: ("Gamma_+(x) psi*(z) = (1 - x/z) psi*(z) Gamma_+(x)", "Gp", "psis", (1, -1), +1),
    5: ("Gamma_-(x) psi*(z) = (1 - x z) psi*(z) Gamma_-(x)", "Gm", "psis", (1, 1), +1),
}
RELATION_NAMES = {1: "gamma-gamma", 2: "gamma+-psi", 3: "gamma--psi", 4: "gamma+-psi*", 5: "gamma--psi*"}


def _component(kind: str, e2: int, v: FockVector) -> FockVector:
    """Coefficient of w^(e2/2) in the dual-frame series ``kind``(w) applied to v."""
    if kind == "Gp":
        return gamma_plus_coeff(e2 // 2, v) if e2 >= 0 else FockVector()
    if kind == "Gm":
        return gamma_minus_coeff(e2 // 2, v) if e2 >= 0 else FockVector()
    if kind == "psi":
        return _apply_basiswise(psi_apply, -e2, v)
    if kind == "psis":
        return _apply_basiswise(psi_star_apply, e2, v)
    raise ValueError(kind)


@dataclass
class CommutationResult:
    relation: int
    ok: bool
    coefficients_checked: int
    mismatch: tuple | None = None  # (x-exponent, doubled second exponent, lhs, rhs)

    def __bool__(self):
        return self.ok


def _second_window(kind: str, a: int, D: int) -> Iterable[int]:
    """Doubled exponents of the second variable inside total degree D."""
    if kind == "Gm":
        return range(0, 2 * (D - a) + 1, 2)
    r = 2 * (D - a) + 1
    return range(-r, r + 1, 2)


def gamma_commutation_check(relation: int, v, D: int, corrected: bool = False) -> CommutationResult:
    """Compare both sides of a relation coefficientwise, total degree <= D.

    For the Gamma/Gamma relation the window is x^a y^b with a + b <= D;
    for the fermion relations it is x^a z^b with a + |b| <= D + 1/2.
    The scalar factor is expanded as a geometric series where inverted.
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation}; choose from 1..5")
    if D < 0:
        raise ValueError("D must be >= 0")
    _, left, right, (fx, fz), power = RELATIONS[relation]
    if relation == 1 and corrected:
        power = -1
    v = as_vector(v)

    # scalar factor (1 - x^fx w^fz)^power, truncated at x-degree D
    if power == 1:
        factor = {(0, 0): 1, (fx, 2 * fz): -1}
    else:
        factor = {(n * fx, 2 * n * fz): 1 for n in range(D + 1)}

    rhs_raw_cache: dict = {}
    inner_right: dict = {}

    def rhs_raw(a: int, e2: int) -> FockVector:
        # right(w) left(x) v, coefficient x^a w^e
        key = (a, e2)
        if key not in rhs_raw_cache:
            if a not in inner_right:
                inner_right[a] = _component(left, 2 * a, v)
            rhs_raw_cache[key] = _component(right, e2, inner_right[a])
        return rhs_raw_cache[key]

    inner_left: dict = {}
    checked = 0
    for a in range(D + 1):
        for e2 in _second_window(right, a, D):
            if e2 not in inner_left:
                inner_left[e2] = _component(right, e2, v)
            lhs = _component(left, 2 * a, inner_left[e2])
            rhs = FockVector()
            for (da, de2), c in factor.items():
                if da > a:
                    continue
                if right == "Gm" and e2 - de2 < 0:
                    continue
                term = rhs_raw(a - da, e2 - de2)
                if term:
                    rhs = rhs + term * c
            checked += 1
            if lhs != rhs:
                return CommutationResult(relation, False, checked, (a, e2, lhs, rhs))
    return CommutationResult(relation, True, checked)


def gamma_inverse_check(v) -> bool:
    """Gamma_+(z)^-1 Gamma_+(z) v == v, both series being finite."""
    v = as_vector(v)
    fwd = gamma_plus(v)
    top = -fwd.lo2 // 2
    total = {}
    for e2, w in fwd.coeffs.items():
        a1 = -e2 // 2
        for a2 in range(top + 1):
            part = gamma_plus_coeff(a2, w, inverse=True)
            if part:
                total[a1 + a2] = total.get(a1 + a2, FockVector()) + part
    return all((vec == v) if a == 0 else (not vec) for a, vec in total.items()) and total.get(0, FockVector()) == v
