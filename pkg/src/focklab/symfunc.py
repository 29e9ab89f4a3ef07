"""Schur functions, character polynomials and the bosonic Fock space B.

B is modelled as polynomials in x_1, x_2, ... with a charge grade q^h.
The map ``sigma`` sends |lam, h> to q^h chi_lam, where chi_lam is the
polynomial with chi_lam(p_1, p_2/2, p_3/3, ...) = s_lam.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .basis import ChargedPartition, partitions, ribbon_removals
from .fockvec import FockVector


def _demote(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# --------------------------------------------------------------------------
# symmetric polynomials in finitely many variables


@dataclass
class SymPoly:
    """Polynomial in y_1..y_n; keys are exponent tuples of length n."""

    nvars: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {e: c for e, c in self.terms.items() if c}

    def __eq__(self, other):
        return isinstance(other, SymPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SymPoly(self.nvars, out)

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            return SymPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymPoly(self.nvars, out)

    __rmul__ = __mul__

    def permuted(self, perm) -> "SymPoly":
        """Rename y_i -> y_perm[i]."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, a in enumerate(e):
                ne[perm[i]] = a
            out[tuple(ne)] = c
        return SymPoly(self.nvars, out)

    def drop_last_variable(self) -> "SymPoly":
        """Set y_n = 0."""
        return SymPoly(self.nvars - 1, {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0})

    def is_symmetric(self) -> bool:
        n = self.nvars
        if n < 2:
            return True
        swaps = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
        return all(self.permuted(p) == self for p in swaps)


def is_column_strict(filling) -> bool:
    """Rows weakly increase, columns strictly increase, entries positive."""
    for r, row in enumerate(filling):
        if any(x < 1 for x in row) or any(a > b for a, b in zip(row, row[1:])):
            return False
        if r:
            above = filling[r - 1]
            if len(row) > len(above) or any(above[c] >= row[c] for c in range(len(row))):
                return False
    return True


def column_strict_fillings(lam, n: int) -> Iterator[list[list[int]]]:
    """Every column-strict filling of ``lam`` with entries in 1..n."""
    lam = tuple(lam)
    rows: list[list[int]] = []

    def fill_row(r):
        if r == len(lam):
            yield [list(x) for x in rows]
            return
        above = rows[r - 1] if r else None
        row: list[int] = []

        def place(c):
            if c == lam[r]:
                rows.append(list(row))
                yield from fill_row(r + 1)
                rows.pop()
                return
            lo = row[-1] if row else 1
            if above is not None:
                lo = max(lo, above[c] + 1)
            for x in range(lo, n + 1):
                row.append(x)
                yield from place(c + 1)
                row.pop()

        yield from place(0)

    yield from fill_row(0)


def schur(lam, n: int) -> SymPoly:
    """s_lam(y_1..y_n) as the generating function of column-strict fillings."""
    if n < 1:
        raise ValueError("need at least one variable")
    terms: dict = {}
    for filling in column_strict_fillings(lam, n):
        e = [0] * n
        for row in filling:
            for x in row:
                e[x - 1] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + 1
    return SymPoly(n, terms)


def power_sum(k: int, n: int) -> SymPoly:
    return SymPoly(n, {tuple(k if j == i else 0 for j in range(n)): 1 for i in range(n)})


def power_sum_product(mu, n: int) -> SymPoly:
    out = SymPoly(n, {(0,) * n: 1})
    for part in mu:
        out = out * power_sum(part, n)
    return out


# --------------------------------------------------------------------------
# power-sum expansion of s_lam


@lru_cache(maxsize=None)
def kostka(lam: tuple, content: tuple) -> int:
    """Number of column-strict fillings of ``lam`` with the given content.

    Peels off the largest entry, which occupies a horizontal strip.
    """
    if not content:
        return 1 if not lam else 0
    k = content[-1]
    rest = content[:-1]
    total = 0
    L = len(lam)

    def strips(i, left, acc):
        nonlocal total
        if i == L:
            if left == 0:
                mu = tuple(p for p in acc if p)
                total += kostka(mu, rest)
            return
        nxt = lam[i + 1] if i + 1 < L else 0
        for take in range(0, min(left, lam[i] - nxt) + 1):
            acc.append(lam[i] - take)
            strips(i + 1, left - take, acc)
            acc.pop()

    strips(0, k, [])
    return total


@lru_cache(maxsize=None)
def _monomial_count(mu: tuple, alpha: tuple) -> int:
    """Coefficient of y^alpha in p_mu: ways to send each part of mu to a variable."""
    if not mu:
        return 1 if not any(alpha) else 0
    part, rest = mu[0], mu[1:]
    total = 0
    for i, a in enumerate(alpha):
        if a >= part:
            total += _monomial_count(rest, alpha[:i] + (a - part,) + alpha[i + 1:])
    return total


@lru_cache(maxsize=None)
def _power_sum_table(n: int) -> dict:
    """{lam: {mu: c}} with s_lam = sum_mu c p_mu for every lam of n.

    Solved in the monomial basis of n variables (where p_1..p_n are
    algebraically independent), restricted to the sorted exponent
    vectors, which determine a symmetric polynomial.
    """
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    parts = partitions(n)
    if n == 0:
        return {(): {(): 1}}
    size = len(parts)
    # rows: exponent alpha (padded partition); columns: p_mu
    mat = [[QQ(_monomial_count(mu, alpha)) for mu in parts] for alpha in parts]
    rhs = [[QQ(kostka(lam, alpha)) for lam in parts] for alpha in parts]
    A = DomainMatrix(mat, (size, size), QQ)
    B = DomainMatrix(rhs, (size, size), QQ)
    if A.det() == 0:
        raise AssertionError(f"power sums singular in {n} variables")
    X = A.inv() * B
    X = X.to_Matrix()
    table = {}
    for j, lam in enumerate(parts):
        coeffs = {}
        for i, mu in enumerate(parts):
            x = X[i, j]
            if x != 0:
                coeffs[mu] = _demote(Fraction(int(x.p), int(x.q)))
        table[lam] = coeffs
    return table


def power_sum_expand(lam) -> dict:
    """{mu: c_mu} with s_lam = sum_mu c_mu p_mu."""
    lam = tuple(lam)
    return dict(_power_sum_table(sum(lam))[lam])


@lru_cache(maxsize=None)
def mn_character(lam: tuple, mu: tuple) -> int:
    """Irreducible S_n character chi^lam at cycle type mu, by rim-hook recursion."""
    if not mu:
        return 1 if not lam else 0
    total = 0
    for nu, rows in ribbon_removals(lam, mu[0]):
        total += (-1) ** (rows - 1) * mn_character(nu, mu[1:])
    return total


def z_mu(mu) -> int:
    out = 1
    for part, mult in Counter(mu).items():
        out *= part ** mult * math.factorial(mult)
    return out


def power_sum_expand_mn(lam) -> dict:
    """Independent route: c_mu = chi^lam(mu) / z_mu."""
    lam = tuple(lam)
    out = {}
    for mu in partitions(sum(lam)):
        c = Fraction(mn_character(lam, mu), z_mu(mu))
        if c:
            out[mu] = _demote(c)
    return out


# --------------------------------------------------------------------------
# bosonic Fock space


def _trim(e) -> tuple:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


class BosonPoly:
    """Element of B = C[x_1, x_2, ...; q, q^-1].

    ``terms`` maps ``(h, exps)`` to a rational, where ``exps[k-1]`` is
    the exponent of x_k (trailing zeros dropped) and h the power of q.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for (h, e), c in (terms or {}).items():
            if c:
                key = (int(h), _trim(e))
                self.terms[key] = self.terms.get(key, 0) + c
        self.terms = {k: c for k, c in self.terms.items() if c}

    @classmethod
    def monomial(cls, h=0, exps=(), coeff=1) -> "BosonPoly":
        return cls({(h, exps): coeff})

    def __eq__(self, other):
        return isinstance(other, BosonPoly) and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        r = BosonPoly()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = BosonPoly()
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BosonPoly):
            out: dict = {}
            for (h1, e1), c1 in self.terms.items():
                for (h2, e2), c2 in other.terms.items():
                    n = max(len(e1), len(e2))
                    e = tuple((e1[i] if i < len(e1) else 0) + (e2[i] if i < len(e2) else 0) for i in range(n))
                    key = (h1 + h2, e)
                    out[key] = out.get(key, 0) + c1 * c2
            return BosonPoly(out)
        r = BosonPoly()
        if other:
            r.terms = {k: c * other for k, c in self.terms.items()}
        return r

    __rmul__ = __mul__

    def charge_part(self, h: int) -> "BosonPoly":
        r = BosonPoly()
        r.terms = {k: c for k, c in self.terms.items() if k[0] == h}
        return r

    def weighted_degrees(self) -> set:
        return {sum((i + 1) * a for i, a in enumerate(e)) for (_, e) in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (h, e), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0], _mono_order(kv[0][1]))):
            factors = []
            if h:
                factors.append("q" if h == 1 else f"q^{h}")
            for i, a in enumerate(e):
                if a:
                    factors.append(f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}")
            mono = "*".join(factors)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    __str__ = __repr__


def _mono_order(e):
    # larger exponent on x1 first, then x2, ...
    return tuple(-a for a in e) + (0,)


def d_dx(k: int, p: BosonPoly) -> BosonPoly:
    out: dict = {}
    for (h, e), c in p.terms.items():
        if len(e) >= k and e[k - 1]:
            ne = list(e)
            ne[k - 1] -= 1
            key = (h, tuple(ne))
            out[key] = out.get(key, 0) + c * e[k - 1]
    return BosonPoly(out)


def times_x(k: int, p: BosonPoly) -> BosonPoly:
    out: dict = {}
    for (h, e), c in p.terms.items():
        ne = list(e) + [0] * max(0, k - len(e))
        ne[k - 1] += 1
        out[(h, tuple(ne))] = c
    return BosonPoly(out)


def weyl_on_B(k: int):
    """Action of alpha_k on B: d/dx_k for k > 0, multiplication by -k x_{-k} for k < 0."""
    if k == 0:
        raise ValueError("k must be nonzero")
    if k > 0:
        return lambda p: d_dx(k, p)
    return lambda p: times_x(-k, p) * (-k)


@lru_cache(maxsize=None)
def _char_poly_terms(lam: tuple) -> tuple:
    terms: dict = {}
    for mu, c in power_sum_expand(lam).items():
        coeff = Fraction(c)
        exps: list[int] = []
        for part in mu:
            coeff *= part
            while len(exps) < part:
                exps.append(0)
            exps[part - 1] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return tuple((e, _demote(c)) for e, c in terms.items() if c)


def char_poly(lam) -> BosonPoly:
    """chi_lam: substitute p_k -> k x_k in the power-sum expansion of s_lam."""
    return BosonPoly({(0, e): c for e, c in _char_poly_terms(tuple(lam))})


def char_poly_to_schur(lam, nvars: int | None = None) -> SymPoly:
    """Evaluate chi_lam at x_k = p_k / k in ``nvars`` variables (default |lam|)."""
    lam = tuple(lam)
    n = nvars if nvars is not None else max(sum(lam), 1)
    out = SymPoly(n, {})
    for (_, e), c in char_poly(lam).terms.items():
        term = SymPoly(n, {(0,) * n: c})
        for i, a in enumerate(e):
            for _ in range(a):
                term = term * (power_sum(i + 1, n) * Fraction(1, i + 1))
        out = out + term
    return out


def sigma(v) -> BosonPoly:
    """F -> B, |lam, h> -> q^h chi_lam, extended linearly."""
    if isinstance(v, ChargedPartition):
        v = FockVector.basis(v)
    out = BosonPoly()
    for b, c in v.terms.items():
        out = out + BosonPoly({(b.charge, e): ce * c for e, ce in _char_poly_terms(b.lam)})
    return out


def sigma_rank(states) -> int:
    """Rank of the images of ``states`` (exact Gaussian elimination)."""
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    images = [sigma(s) for s in states]
    keys = sorted({k for p in images for k in p.terms})
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for p in images:
        row = [QQ(0)] * len(keys)
        for k, c in p.terms.items():
            f = Fraction(c)
            row[index[k]] = QQ(f.numerator, f.denominator)
        rows.append(row)
    if not rows:
        return 0
    return DomainMatrix(rows, (len(rows), len(keys)), QQ).rank()


def all_permutations_symmetric(p: SymPoly) -> bool:
    return all(p.permuted(perm) == p for perm in permutations(range(p.nvars)))
