"""Exact coefficient rings, vectors in Fock space and linear operators.

Coefficients are Python ints, :class:`~fractions.Fraction` or
:class:`LaurentQ`.  Ints are kept where possible because most structure
constants are +-1; they mix freely with Fractions.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .basis import ChargedPartition


class LaurentQ:
    """Laurent polynomial in q with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[int(e)] = c

    @classmethod
    def q(cls, power: int = 1, coeff=1) -> "LaurentQ":
        return cls({power: coeff})

    @classmethod
    def lift(cls, x) -> "LaurentQ":
        if isinstance(x, LaurentQ):
            return x
        return cls({0: x})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentQ):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if not self.terms:
            return 0
        if set(self.terms) == {0}:
            return hash(self.terms[0])
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, LaurentQ):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = LaurentQ.lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        r = LaurentQ()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentQ()
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentQ()
            r = LaurentQ()
            r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        if not isinstance(other, LaurentQ):
            return NotImplemented
        out: dict[int, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentQ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible")
            (e, c), = self.terms.items()
            return LaurentQ({e * n: Fraction(1, 1) / Fraction(c) ** (-n)})
        out = LaurentQ({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def divexact(self, other) -> "LaurentQ":
        """Exact division; raises ValueError if ``other`` does not divide."""
        other = LaurentQ.lift(other)
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return LaurentQ()
        # q^k is a unit, so divide the underlying polynomials
        a_lo, b_lo = min(self.terms), min(other.terms)
        rem = {e - a_lo: Fraction(c) for e, c in self.terms.items()}
        div = {e - b_lo: Fraction(c) for e, c in other.terms.items()}
        deg = max(div)
        lead = div[deg]
        quot = {}
        while rem and max(rem) >= deg:
            e = max(rem)
            qc = rem[e] / lead
            qe = e - deg
            quot[qe] = qc
            for de, dc in div.items():
                v = rem.get(qe + de, 0) - qc * dc
                if v:
                    rem[qe + de] = v
                else:
                    rem.pop(qe + de, None)
        if rem:
            raise ValueError(f"{other} does not divide {self}")
        return LaurentQ({e + a_lo - b_lo: _demote(c) for e, c in quot.items()})

    def at_one(self):
        """Value at q = 1."""
        return sum(self.terms.values(), 0)

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                pieces.append(f"{c}")
            else:
                mono = "q" if e == 1 else f"q^{e}"
                pieces.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    __str__ = __repr__

    def to_json(self) -> dict:
        return {f"q^{e}": _coeff_str(c) for e, c in sorted(self.terms.items())}


def _demote(c):
    return c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c


def _coeff_str(c) -> str:
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}"


def _parse_coeff(text: str):
    f = Fraction(text)
    return f.numerator if f.denominator == 1 else f


def state_key(b: ChargedPartition):
    """Canonical print order: decreasing size, then partition, then charge."""
    return (-sum(b.lam), b.lam, b.charge)


class FockVector:
    """Finite linear combination of basis states |lam, h>."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ChargedPartition, object] | None = None):
        self.terms: dict[ChargedPartition, object] = {}
        if terms:
            for b, c in terms.items():
                if c:
                    self.terms[ChargedPartition(*b)] = c

    @classmethod
    def basis(cls, state: ChargedPartition, coeff=1) -> "FockVector":
        v = cls()
        if coeff:
            v.terms[state] = coeff
        return v

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __getitem__(self, state):
        return self.terms.get(state, 0)

    def __eq__(self, other):
        if isinstance(other, FockVector):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def add_term(self, state, coeff):
        """In-place accumulate; keeps the no-zero invariant."""
        v = self.terms.get(state, 0) + coeff
        if v:
            self.terms[state] = v
        else:
            self.terms.pop(state, None)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self.copy()
        if not isinstance(other, FockVector):
            return NotImplemented
        out = self.copy()
        for b, c in other.terms.items():
            out.add_term(b, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = FockVector()
        out.terms = {b: -c for b, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, FockVector):
            return NotImplemented
        out = FockVector()
        if scalar:
            for b, c in self.terms.items():
                v = c * scalar
                if v:
                    out.terms[b] = v
        return out

    __rmul__ = __mul__

    def copy(self) -> "FockVector":
        out = FockVector()
        out.terms = dict(self.terms)
        return out

    def map_coeffs(self, fn: Callable) -> "FockVector":
        return FockVector({b: fn(c) for b, c in self.terms.items()})

    def shift_charge(self, by: int) -> "FockVector":
        out = FockVector()
        out.terms = {ChargedPartition(b.lam, b.charge + by): c for b, c in self.terms.items()}
        return out

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: state_key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for b, c in self.sorted_terms():
            ket = f"|{b}>"
            if isinstance(c, LaurentQ) and len(c.terms) > 1:
                pieces.append(f"({c})*{ket}")
            elif c == 1:
                pieces.append(ket)
            elif c == -1:
                pieces.append(f"-{ket}")
            else:
                pieces.append(f"{c}*{ket}")
        return " + ".join(pieces).replace("+ -", "- ")

    __str__ = __repr__

    def to_json(self) -> list:
        out = []
        for b, c in self.sorted_terms():
            coeff = c.to_json() if isinstance(c, LaurentQ) else _coeff_str(c)
            out.append({"state": b.to_json(), "coeff": coeff})
        return out

    @classmethod
    def from_json(cls, data: list) -> "FockVector":
        v = cls()
        for item in data:
            raw = item["coeff"]
            if isinstance(raw, dict):
                coeff = LaurentQ({int(k.split("^")[1]): _parse_coeff(x) for k, x in raw.items()})
            else:
                coeff = _parse_coeff(raw)
            v.add_term(ChargedPartition.from_json(item["state"]), coeff)
        return v


def as_vector(v) -> FockVector:
    if isinstance(v, FockVector):
        return v
    if isinstance(v, tuple) and len(v) == 2:
        return FockVector.basis(ChargedPartition(*v))
    raise TypeError(f"cannot interpret {v!r} as a Fock vector")


def inner(v, w):
    """Symmetric bilinear form with the |lam, h> orthonormal."""
    v, w = as_vector(v), as_vector(w)
    if len(v) > len(w):
        v, w = w, v
    total = 0
    for b, c in v.terms.items():
        d = w.terms.get(b)
        if d is not None:
            total = total + c * d
    return total


class LinOp:
    """Linear operator on Fock space defined by its action on basis states.

    ``A(v)`` applies the operator to a vector or basis state, ``A * B``
    is composition (B first), ``A + B`` and scalar multiples behave as
    expected.
    """

    __slots__ = ("_on_basis", "name")

    def __init__(self, on_basis: Callable[[ChargedPartition], FockVector], name: str = "?"):
        self._on_basis = on_basis
        self.name = name

    def on_basis(self, state: ChargedPartition) -> FockVector:
        return self._on_basis(state)

    def __call__(self, v) -> FockVector:
        if isinstance(v, FockVector):
            if len(v.terms) == 1:
                (b, c), = v.terms.items()
                out = self._on_basis(b)
                return out if c == 1 else out * c
            out = FockVector()
            for b, c in v.terms.items():
                for b2, c2 in self._on_basis(b).terms.items():
                    out.add_term(b2, c2 * c)
            return out
        return self._on_basis(ChargedPartition(*v))

    def __mul__(self, other):
        if isinstance(other, LinOp):
            a, b = self, other
            return LinOp(lambda s: a(b.on_basis(s)), f"{a.name}*{b.name}")
        scalar = other
        a = self
        return LinOp(lambda s: a.on_basis(s) * scalar, f"{scalar}*{a.name}")

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __add__(self, other):
        a, b = self, other
        return LinOp(lambda s: a.on_basis(s) + b.on_basis(s), f"({a.name}+{b.name})")

    def __neg__(self):
        a = self
        return LinOp(lambda s: -a.on_basis(s), f"-{a.name}")

    def __sub__(self, other):
        a, b = self, other
        return LinOp(lambda s: a.on_basis(s) - b.on_basis(s), f"({a.name}-{b.name})")

    def __repr__(self):
        return f"LinOp({self.name})"


def identity() -> LinOp:
    return LinOp(FockVector.basis, "1")


def zero_op() -> LinOp:
    return LinOp(lambda s: FockVector(), "0")


def scalar_op(c) -> LinOp:
    return LinOp(lambda s: FockVector.basis(s, c), str(c))


def compose(*ops: LinOp) -> LinOp:
    """Rightmost operator acts first."""
    out = ops[-1]
    for op in reversed(ops[:-1]):
        out = op * out
    return out


def commutator(a: LinOp, b: LinOp) -> LinOp:
    def act(s):
        return a(b.on_basis(s)) - b(a.on_basis(s))

    return LinOp(act, f"[{a.name},{b.name}]")


def anticommutator(a: LinOp, b: LinOp) -> LinOp:
    def act(s):
        return a(b.on_basis(s)) + b(a.on_basis(s))

    return LinOp(act, f"{{{a.name},{b.name}}}")


def operators_equal_on(a: LinOp, b: LinOp, states: Iterable[ChargedPartition]):
    """``(True, None)`` if A and B agree on every state, else ``(False, first_bad_state)``."""
    for s in states:
        if a.on_basis(s) != b.on_basis(s):
            return False, s
    return True, None
