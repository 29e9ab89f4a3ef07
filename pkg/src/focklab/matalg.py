"""Infinite matrices over Z+1/2, a_infinity, and the affine algebras acting on F.

Matrix indices are doubled half-integers.  An a_infinity element is a
:class:`PeriodicBanded`: finitely many periodic diagonals, a finite
correction and a central coefficient, all in the basis Ebar_{m,n}
(where Ebar_{m,m} = E_{m,m} - c for m < 0).  Brackets are exact and keep
c symbolic; c acts as 1 on F.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .basis import ChargedPartition, addable_boxes, box_color, removable_boxes, add_box, remove_box, to_twice
from .clifford import active_range2
from .fockvec import FockVector, LinOp

# --------------------------------------------------------------------------
# a_infinity


def _res(x: int, level: int) -> int:
    """Representative of x mod level in 1..level."""
    return (x - 1) % level + 1


def row_residue(m2: int, level: int) -> int:
    """Residue i in 1..level with m = i - 1/2 + k*level."""
    return _res((m2 + 1) // 2, level)


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


@dataclass
class PeriodicBanded:
    """coeff * sum_k Ebar_{i-1/2+k*level, i-1/2+k*level+offset} for each ``(i, offset)``,
    plus ``finite`` entries ``{(m2, n2): coeff}`` and ``central`` times c."""

    level: int = 1
    pattern: dict = field(default_factory=dict)
    finite: dict = field(default_factory=dict)
    central: object = 0

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be >= 1")
        for (i, _), _c in self.pattern.items():
            if not 1 <= i <= self.level:
                raise ValueError(f"row residue {i} outside 1..{self.level}")
        for (m2, n2) in self.finite:
            if m2 % 2 != 1 or n2 % 2 != 1:
                raise ValueError("finite entries need doubled half-integer indices")
        self.pattern = _clean(self.pattern)
        self.finite = _clean(self.finite)

    # construction ------------------------------------------------------
    @classmethod
    def from_triples(cls, level: int, triples, central=0) -> "PeriodicBanded":
        """From ``(i, j, m, coeff)``: coeff * sum_k Ebar_{i-1/2+k l, j-1/2+k l+m l}."""
        pat: dict = {}
        for i, j, m, c in triples:
            key = (i, j - i + m * level)
            pat[key] = pat.get(key, 0) + c
        return cls(level, pat, {}, central)

    @classmethod
    def diagonal(cls, offset: int, coeff=1) -> "PeriodicBanded":
        """sum_m Ebar_{m, m+offset}."""
        return cls(1, {(1, offset): coeff})

    @classmethod
    def ebar(cls, m, n, coeff=1) -> "PeriodicBanded":
        return cls(1, {}, {(to_twice(m), to_twice(n)): coeff})

    @classmethod
    def central_element(cls, coeff=1) -> "PeriodicBanded":
        return cls(1, {}, {}, coeff)

    # structure -----------------------------------------------------------
    def refine(self, level: int) -> "PeriodicBanded":
        """Same element written with period ``level`` (a multiple of self.level)."""
        if level % self.level:
            raise ValueError(f"cannot refine level {self.level} to {level}")
        pat: dict = {}
        for (i, d), c in self.pattern.items():
            for i2 in range(i, level + 1, self.level):
                pat[(i2, d)] = pat.get((i2, d), 0) + c
        return PeriodicBanded(level, pat, dict(self.finite), self.central)

    def entry(self, m2: int, n2: int):
        v = self.pattern.get((row_residue(m2, self.level), (n2 - m2) // 2), 0)
        return v + self.finite.get((m2, n2), 0)

    def bandwidth(self) -> int:
        w = max((abs(d) for (_, d) in self.pattern), default=0)
        return max([w] + [abs(n2 - m2) // 2 for (m2, n2) in self.finite])

    def is_finite(self) -> bool:
        return not self.pattern

    def __eq__(self, other):
        if not isinstance(other, PeriodicBanded):
            return NotImplemented
        L = math.lcm(self.level, other.level)
        a, b = self.refine(L), other.refine(L)
        return a.pattern == b.pattern and a.finite == b.finite and a.central == b.central

    def __add__(self, other):
        L = math.lcm(self.level, other.level)
        a, b = self.refine(L), other.refine(L)
        pat = dict(a.pattern)
        for k, c in b.pattern.items():
            pat[k] = pat.get(k, 0) + c
        fin = dict(a.finite)
        for k, c in b.finite.items():
            fin[k] = fin.get(k, 0) + c
        return PeriodicBanded(L, pat, fin, a.central + b.central)

    def __mul__(self, scalar):
        return PeriodicBanded(self.level, {k: c * scalar for k, c in self.pattern.items()},
                              {k: c * scalar for k, c in self.finite.items()}, self.central * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        parts = []
        for (i, d), c in sorted(self.pattern.items()):
            parts.append(f"{c}*P[{i};{d}]")
        for (m2, n2), c in sorted(self.finite.items()):
            parts.append(f"{c}*Ebar({m2}/2,{n2}/2)")
        if self.central:
            parts.append(f"{self.central}*c")
        return f"PeriodicBanded(level={self.level}: " + (" + ".join(parts) or "0") + ")"


def _matrix_product(a: PeriodicBanded, b: PeriodicBanded) -> tuple[dict, dict]:
    """Plain matrix product of two elements of the same level: (pattern, finite)."""
    L = a.level
    pat: dict = {}
    for (i, d1), c1 in a.pattern.items():
        j = _res(i + d1, L)
        for (j2, d2), c2 in b.pattern.items():
            if j2 == j:
                key = (i, d1 + d2)
                pat[key] = pat.get(key, 0) + c1 * c2
    fin: dict = {}

    def bump(key, v):
        fin[key] = fin.get(key, 0) + v

    # pattern x finite
    for (s2, n2), f in b.finite.items():
        for (i, d), c in a.pattern.items():
            m2 = s2 - 2 * d
            if row_residue(m2, L) == i:
                bump((m2, n2), c * f)
    # finite x pattern
    for (m2, s2), f in a.finite.items():
        j = row_residue(s2, L)
        for (j2, d), c in b.pattern.items():
            if j2 == j:
                bump((m2, s2 + 2 * d), f * c)
    # finite x finite
    for (m2, s2), f in a.finite.items():
        for (t2, n2), g in b.finite.items():
            if s2 == t2:
                bump((m2, n2), f * g)
    return pat, fin


def _sign_changing_support(a: PeriodicBanded, negative_row: bool) -> set:
    """Index pairs (m2, n2) with a possibly nonzero entry, m < 0 < n (or m > 0 > n)."""
    out = set()
    for (i, d), _ in a.pattern.items():
        if negative_row and d > 0:
            for m2 in range(-2 * d + 1, 0, 2):
                if row_residue(m2, a.level) == i:
                    out.add((m2, m2 + 2 * d))
        if not negative_row and d < 0:
            for m2 in range(1, -2 * d, 2):
                if row_residue(m2, a.level) == i:
                    out.add((m2, m2 + 2 * d))
    for (m2, n2) in a.finite:
        if (negative_row and m2 < 0 < n2) or (not negative_row and m2 > 0 > n2):
            out.add((m2, n2))
    return out


def cocycle(a: PeriodicBanded, b: PeriodicBanded):
    """sum_{m<0<n} A_mn B_nm - sum_{m>0>n} A_mn B_nm (finite by the band condition)."""
    total = 0
    for (m2, n2) in _sign_changing_support(a, True):
        total += a.entry(m2, n2) * b.entry(n2, m2)
    for (m2, n2) in _sign_changing_support(a, False):
        total -= a.entry(m2, n2) * b.entry(n2, m2)
    return total


def bracket_ainfty(a: PeriodicBanded, b: PeriodicBanded) -> PeriodicBanded:
    """[A, B] in a_infinity: matrix commutator plus cocycle(A, B) c.

    Elements of different levels are first rewritten with the lcm period.
    """
    L = math.lcm(a.level, b.level)
    a, b = a.refine(L), b.refine(L)
    p1, f1 = _matrix_product(a, b)
    p2, f2 = _matrix_product(b, a)
    for k, c in p2.items():
        p1[k] = p1.get(k, 0) - c
    for k, c in f2.items():
        f1[k] = f1.get(k, 0) - c
    return PeriodicBanded(L, p1, f1, cocycle(a, b))


# --------------------------------------------------------------------------
# action on F


def act_Ebar_apply(m2: int, n2: int, state: ChargedPartition) -> FockVector:
    lam, h = state.lam, state.charge
    if m2 == n2 and m2 < 0:
        # -psi*_m psi_m: -1 exactly when position m is empty
        r = kernels.psi(lam, h, m2)
        if r is None:
            return FockVector()
        back = kernels.psi_star(r[1], h + 1, m2)
        return FockVector.basis(ChargedPartition(back[1], h), -r[0] * back[0])
    r = kernels.psi_psi_star(lam, h, m2, n2)
    if r is None:
        return FockVector()
    return FockVector.basis(ChargedPartition(r[1], h), r[0])


def act_Ebar(m, n) -> LinOp:
    """Ebar_{m,n} acting as psi_m psi*_n, or -psi*_m psi_m on the negative diagonal."""
    m2, n2 = to_twice(m), to_twice(n)
    return LinOp(lambda s: act_Ebar_apply(m2, n2, s), f"Ebar({m},{n})")


def act_ainfty_apply(a: PeriodicBanded, state: ChargedPartition) -> FockVector:
    out = FockVector()
    if a.central:
        out.add_term(state, a.central)
    for (i, d), c in a.pattern.items():
        for m2 in active_range2(state, spread=d):
            if row_residue(m2, a.level) != i:
                continue
            for s2, v in act_Ebar_apply(m2, m2 + 2 * d, state).terms.items():
                out.add_term(s2, c * v)
    for (m2, n2), c in a.finite.items():
        for s2, v in act_Ebar_apply(m2, n2, state).terms.items():
            out.add_term(s2, c * v)
    return out


def act_ainfty(a: PeriodicBanded) -> LinOp:
    """Action on F with c = 1."""
    return LinOp(lambda s: act_ainfty_apply(a, s), repr(a))


# --------------------------------------------------------------------------
# trivialising the finite central extension


def trivialize(a: PeriodicBanded) -> tuple[dict, object]:
    """Ebar_{m,m} -> E_{m,m} - c for m < 0; returns (E-basis entries, c coefficient)."""
    if not a.is_finite():
        raise ValueError("only finitely supported elements can be trivialized")
    central = a.central
    for (m2, n2), c in a.finite.items():
        if m2 == n2 and m2 < 0:
            central -= c
    return dict(a.finite), central


def plain_commutator(x: dict, y: dict) -> dict:
    out: dict = {}
    for (m, s), c in x.items():
        for (t, n), d in y.items():
            if s == t:
                out[(m, n)] = out.get((m, n), 0) + c * d
    for (m, s), c in y.items():
        for (t, n), d in x.items():
            if s == t:
                out[(m, n)] = out.get((m, n), 0) - c * d
    return _clean(out)


# --------------------------------------------------------------------------
# affine gl_l / sl_l


@dataclass
class AffElt:
    """sum coeff X_{i,j} (x) t^n + c_coeff c + d_coeff d in the affine sl or gl."""

    level: int
    terms: dict = field(default_factory=dict)
    c: object = 0
    d: object = 0
    variant: str = "gl"

    def __post_init__(self):
        if self.variant not in ("sl", "gl"):
            raise ValueError("variant must be 'sl' or 'gl'")
        if self.level < 1:
            raise ValueError("level must be >= 1")
        for (i, j, _n) in self.terms:
            if not (1 <= i <= self.level and 1 <= j <= self.level):
                raise ValueError(f"matrix index ({i},{j}) outside 1..{self.level}")
        self.terms = _clean(self.terms)
        if self.variant == "sl":
            for n in {k[2] for k in self.terms}:
                tr = sum(self.terms.get((i, i, n), 0) for i in range(1, self.level + 1))
                if tr:
                    raise ValueError(f"t^{n} slice has nonzero trace {tr}")

    @classmethod
    def x(cls, i: int, j: int, n: int, level: int, coeff=1, variant: str = "gl") -> "AffElt":
        return cls(level, {(i, j, n): coeff}, variant=variant)

    @classmethod
    def identity(cls, level: int, n: int = 0) -> "AffElt":
        return cls(level, {(i, i, n): 1 for i in range(1, level + 1)})

    def __eq__(self, other):
        return (isinstance(other, AffElt) and self.level == other.level and self.terms == other.terms
                and self.c == other.c and self.d == other.d)

    def _combine(self, other, sign):
        if self.level != other.level:
            raise ValueError("levels differ")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + sign * v
        variant = "sl" if self.variant == other.variant == "sl" else "gl"
        return AffElt(self.level, terms, self.c + sign * other.c, self.d + sign * other.d, variant)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, scalar):
        return AffElt(self.level, {k: v * scalar for k, v in self.terms.items()},
                      self.c * scalar, self.d * scalar, self.variant)

    __rmul__ = __mul__

    def times_t(self, power: int) -> "AffElt":
        """Multiply the loop part by t^power (c and d must vanish)."""
        if self.c or self.d:
            raise ValueError("only loop elements can be multiplied by t")
        return AffElt(self.level, {(i, j, n + power): v for (i, j, n), v in self.terms.items()},
                      variant=self.variant)

    def __repr__(self):
        parts = [f"{v}*X{i}{j}t^{n}" for (i, j, n), v in sorted(self.terms.items())]
        if self.c:
            parts.append(f"{self.c}*c")
        if self.d:
            parts.append(f"{self.d}*d")
        return " + ".join(parts) or "0"


def bracket_affine(x: AffElt, y: AffElt) -> AffElt:
    """[X t^n, Y t^m] = [X,Y] t^(n+m) + n delta_{n,-m} tr(XY) c, and [d, X t^n] = n X t^n."""
    if x.level != y.level:
        raise ValueError("levels differ")
    if x.variant != y.variant:
        raise ValueError("variants differ")
    terms: dict = {}
    central = 0

    def bump(k, v):
        terms[k] = terms.get(k, 0) + v

    for (i, j, n), a in x.terms.items():
        for (k, l, m), b in y.terms.items():
            if j == k:
                bump((i, l, n + m), a * b)
            if l == i:
                bump((k, j, n + m), -a * b)
            if n == -m and j == k and i == l:
                central += n * a * b
    for (i, j, n), b in y.terms.items():
        if x.d:
            bump((i, j, n), x.d * n * b)
    for (i, j, n), a in x.terms.items():
        if y.d:
            bump((i, j, n), -y.d * n * a)
    return AffElt(x.level, terms, central, 0, x.variant)


def embed_affine(x: AffElt) -> PeriodicBanded:
    """X_{i,j} t^m -> sum_k Ebar_{i-1/2+k l, j-1/2+k l+m l}; c -> c."""
    if x.d:
        raise ValueError("d is not in the image of a_infinity; use act_d")
    return PeriodicBanded.from_triples(x.level, [(i, j, n, v) for (i, j, n), v in x.terms.items()], x.c)


def act_affine(x: AffElt) -> LinOp:
    """Action on F: loop part and c through a_infinity, d by counting 0-colored boxes."""
    emb = embed_affine(AffElt(x.level, x.terms, x.c, 0, x.variant))
    dd = x.d

    def act(s):
        out = act_ainfty_apply(emb, s)
        if dd:
            out.add_term(s, dd * num_zero_boxes(s, x.level))
        return out

    return LinOp(act, f"aff({x})")


def chevalley_elt(kind: str, i: int, level: int) -> AffElt:
    """E_i / F_i as loop elements of the affine sl_level."""
    if not 0 <= i < level:
        raise ValueError(f"color {i} outside 0..{level - 1}")
    if kind == "E":
        key = (i, i + 1, 0) if i else (level, 1, 1)
    elif kind == "F":
        key = (i + 1, i, 0) if i else (1, level, -1)
    else:
        raise ValueError(kind)
    return AffElt(level, {key: 1}, variant="sl")


def chevalley_E_apply(i: int, level: int, state: ChargedPartition) -> FockVector:
    out = FockVector()
    for box in removable_boxes(state, i, level):
        out.add_term(ChargedPartition(remove_box(state.lam, box), state.charge), 1)
    return out


def chevalley_F_apply(i: int, level: int, state: ChargedPartition) -> FockVector:
    out = FockVector()
    for box in addable_boxes(state, i, level):
        out.add_term(ChargedPartition(add_box(state.lam, box), state.charge), 1)
    return out


def chevalley_E(i: int, level: int) -> LinOp:
    """Remove one box of color i, in every possible way."""
    if not 0 <= i < level:
        raise ValueError(f"color {i} outside 0..{level - 1}")
    return LinOp(lambda s: chevalley_E_apply(i, level, s), f"E({i})")


def chevalley_F(i: int, level: int) -> LinOp:
    """Add one box of color i, in every possible way."""
    if not 0 <= i < level:
        raise ValueError(f"color {i} outside 0..{level - 1}")
    return LinOp(lambda s: chevalley_F_apply(i, level, s), f"F({i})")


def num_zero_boxes(state: ChargedPartition, level: int) -> int:
    h = state.charge
    return sum(1 for r, row in enumerate(state.lam, start=1) for c in range(1, row + 1)
               if box_color(h, (r, c), level) == 0)


def act_d(level: int) -> LinOp:
    """d: multiply by the number of 0-colored boxes."""
    return LinOp(lambda s: FockVector.basis(s, num_zero_boxes(s, level)), "d")


def c_element(j: int, level: int) -> AffElt:
    """C_j = sum_a X_{a,a+j}, with the wrapped entries carrying a factor t."""
    if not 0 <= j < level:
        raise ValueError(f"j must lie in 0..{level - 1}")
    terms = {}
    for a in range(1, level + 1):
        if a + j <= level:
            terms[(a, a + j, 0)] = 1
        else:
            terms[(a, a + j - level, 1)] = 1
    return AffElt(level, terms)


def alpha_in_affine(k: int, level: int) -> AffElt:
    """C_{k mod l} (x) t^floor(k/l), whose action is alpha_k."""
    return c_element(k % level, level).times_t(k // level)


def alpha_pattern(k: int) -> PeriodicBanded:
    """The a_infinity element sum_m Ebar_{m, m+k} (alpha_k for k != 0)."""
    return PeriodicBanded.diagonal(k)


__all__ = [
    "PeriodicBanded", "row_residue", "cocycle", "bracket_ainfty", "act_Ebar", "act_ainfty",
    "act_ainfty_apply", "trivialize", "plain_commutator", "AffElt", "bracket_affine", "embed_affine",
    "act_affine", "chevalley_elt", "chevalley_E", "chevalley_F", "num_zero_boxes", "act_d",
    "c_element", "alpha_in_affine", "alpha_pattern",
]
