"""Operator expressions: parsing, printing and evaluation.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | scalar | atom | '[' expr ',' expr ']' | '(' expr ')'
    scalar := INT | INT '/' INT | 'q' | 'q^' SINT
    atom   := alpha(SINT) | a0 | psi(HALF) | psis(HALF) | E(INT) | F(INT)
            | Eq(INT) | Fq(INT) | K(INT) | d | s | s^SINT | Ebar(HALF, HALF)

HALF is a signed literal ``a/2`` with ``a`` odd.  Products act right to
left, so ``A*B`` applies B first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .basis import ChargedPartition, HalfInt
from .boson import alpha, alpha0, shift
from .clifford import psi, psi_star
from .fockvec import FockVector, LaurentQ, LinOp, commutator, scalar_op
from .matalg import act_d, act_Ebar, chevalley_E, chevalley_F
from .qfock import Eq, Fq, Kq


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


class EvalError(ValueError):
    pass


# --------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Scalar:
    value: Fraction = Fraction(1)
    qpow: int = 0


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Sum:
    terms: tuple
    signs: tuple


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Bracket:
    left: "Node"
    right: "Node"


Node = Union[Scalar, Atom, Neg, Sum, Prod, Bracket]

INT_ATOMS = {"alpha", "E", "F", "Eq", "Fq", "K"}
HALF_ATOMS = {"psi", "psis"}
BARE_ATOMS = {"a0", "d"}
ALL_ATOMS = INT_ATOMS | HALF_ATOMS | BARE_ATOMS | {"s", "Ebar"}


# --------------------------------------------------------------------------
# tokenizer / parser


@dataclass
class _Tok:
    kind: str  # 'num', 'id', or the symbol itself
    text: str
    pos: int  # byte offset


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i = 0
    byte = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            byte += len(ch.encode())
            i += 1
            continue
        start, start_byte = i, byte
        if ch.isdigit():
            while i < len(text) and text[i].isdigit():
                i += 1
            toks.append(_Tok("num", text[start:i], start_byte))
        elif ch.isalpha() or ch == "_":
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            toks.append(_Tok("id", text[start:i], start_byte))
        elif ch in "+-*/^()[],":
            i += 1
            toks.append(_Tok(ch, ch, start_byte))
        else:
            raise ParseError(f"unexpected character {ch!r}", start_byte)
        byte = start_byte + len(text[start:i].encode())
    toks.append(_Tok("end", "", byte))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str) -> _Tok:
        tok = self.cur
        if tok.kind != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {want}, found {got}", tok.pos)
        self.i += 1
        return tok

    def accept(self, kind: str) -> bool:
        if self.cur.kind == kind:
            self.i += 1
            return True
        return False

    def parse(self) -> Node:
        node = self.expr()
        self.take("end")
        return node

    def expr(self) -> Node:
        terms = [self.term()]
        signs = [1]
        while self.cur.kind in ("+", "-"):
            signs.append(1 if self.take(self.cur.kind).kind == "+" else -1)
            terms.append(self.term())
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms), tuple(signs))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.accept("*"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def factor(self) -> Node:
        tok = self.cur
        if self.accept("-"):
            return Neg(self.factor())
        if tok.kind == "num":
            self.i += 1
            value = Fraction(int(tok.text))
            if self.accept("/"):
                den = self.take("num")
                if int(den.text) == 0:
                    raise ParseError("division by zero in scalar literal", den.pos)
                value = Fraction(int(tok.text), int(den.text))
            return Scalar(value, 0)
        if self.accept("("):
            node = self.expr()
            self.take(")")
            return node
        if self.accept("["):
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return Bracket(left, right)
        if tok.kind == "id":
            return self.atom()
        got = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"expected an operator or scalar, found {got}", tok.pos)

    def signed_int(self) -> int:
        neg = self.accept("-")
        return -int(self.take("num").text) if neg else int(self.take("num").text)

    def half(self) -> int:
        start = self.cur.pos
        neg = self.accept("-")
        num = self.take("num")
        if self.cur.kind != "/":
            raise ParseError("half-integer must be written a/2 with a odd", start)
        self.take("/")
        den = self.take("num")
        a = int(num.text) * (-1 if neg else 1)
        if int(den.text) != 2 or a % 2 == 0:
            raise ParseError(f"malformed half-integer {'-' if neg else ''}{num.text}/{den.text}: "
                             "need a/2 with a odd", start)
        return a

    def atom(self) -> Node:
        tok = self.take("id")
        name = tok.text
        if name == "q":
            if self.accept("^"):
                return Scalar(Fraction(1), self.signed_int())
            return Scalar(Fraction(1), 1)
        if name not in ALL_ATOMS:
            raise ParseError(f"unknown operator {name!r}", tok.pos)
        if name in BARE_ATOMS:
            return Atom(name, ())
        if name == "s":
            if self.accept("^"):
                return Atom("s", (self.signed_int(),))
            return Atom("s", (1,))
        self.take("(")
        if name in INT_ATOMS:
            args = (self.signed_int(),)
        elif name in HALF_ATOMS:
            args = (self.half(),)
        else:  # Ebar
            m = self.half()
            self.take(",")
            args = (m, self.half())
        self.take(")")
        return Atom(name, args)


def parse(text: str) -> Node:
    """Parse an operator expression; :class:`ParseError` carries a byte offset."""
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# printer


def _half(a2: int) -> str:
    return f"{a2}/2"


def to_text(node: Node) -> str:
    """Canonical text; ``parse(to_text(n)) == n``."""
    if isinstance(node, Scalar):
        if node.qpow:
            return "q" if node.qpow == 1 else f"q^{node.qpow}"
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Atom):
        if node.name in BARE_ATOMS:
            return node.name
        if node.name == "s":
            return "s" if node.args[0] == 1 else f"s^{node.args[0]}"
        if node.name in HALF_ATOMS:
            return f"{node.name}({_half(node.args[0])})"
        if node.name == "Ebar":
            return f"Ebar({_half(node.args[0])},{_half(node.args[1])})"
        return f"{node.name}({node.args[0]})"
    if isinstance(node, Neg):
        inner = node.arg
        body = to_text(inner)
        return f"-({body})" if isinstance(inner, (Sum, Prod)) else f"-{body}"
    if isinstance(node, Prod):
        return "*".join(f"({to_text(f)})" if isinstance(f, (Sum, Prod)) else to_text(f) for f in node.factors)
    if isinstance(node, Sum):
        out = []
        for k, (t, s) in enumerate(zip(node.terms, node.signs)):
            body = f"({to_text(t)})" if isinstance(t, Sum) else to_text(t)
            if k == 0:
                out.append(body if s == 1 else f"-({body})")
            else:
                out.append((" + " if s == 1 else " - ") + body)
        return "".join(out)
    if isinstance(node, Bracket):
        return f"[{to_text(node.left)}, {to_text(node.right)}]"
    raise TypeError(node)


# --------------------------------------------------------------------------
# evaluation


def _lift(v: FockVector) -> FockVector:
    out = FockVector()
    out.terms = {b: (c if isinstance(c, LaurentQ) else LaurentQ.lift(c)) for b, c in v.terms.items()}
    return out


def compile_expr(node: Node, level: int | None = None, ring: str = "Q") -> LinOp:
    """Turn an AST into a :class:`LinOp`.  ``ring`` is ``"Q"`` or ``"q"``."""
    if ring not in ("Q", "q"):
        raise EvalError("ring must be 'Q' or 'q'")

    def need_level(name):
        if level is None:
            raise EvalError(f"{name} needs --level")
        if level < 2:
            raise EvalError("level must be >= 2")

    def need_q(name):
        if ring != "q":
            raise EvalError(f"{name} needs --ring q")

    def go(n: Node) -> LinOp:
        if isinstance(n, Scalar):
            if n.qpow:
                need_q("q")
                return scalar_op(LaurentQ.q(n.qpow))
            v = n.value
            return scalar_op(v.numerator if v.denominator == 1 else v)
        if isinstance(n, Neg):
            return -go(n.arg)
        if isinstance(n, Sum):
            out = go(n.terms[0]) if n.signs[0] == 1 else -go(n.terms[0])
            for t, s in zip(n.terms[1:], n.signs[1:]):
                out = out + go(t) if s == 1 else out - go(t)
            return out
        if isinstance(n, Prod):
            out = go(n.factors[-1])
            for f in reversed(n.factors[:-1]):
                out = go(f) * out
            return out
        if isinstance(n, Bracket):
            return commutator(go(n.left), go(n.right))
        name, args = n.name, n.args
        if name == "alpha":
            if args[0] == 0:
                raise EvalError("alpha(0) is the charge operator; write a0")
            return alpha(args[0])
        if name == "a0":
            return alpha0()
        if name == "s":
            return shift(args[0])
        if name == "psi":
            return psi(HalfInt(args[0]))
        if name == "psis":
            return psi_star(HalfInt(args[0]))
        if name == "Ebar":
            return act_Ebar(HalfInt(args[0]), HalfInt(args[1]))
        if name == "d":
            need_level("d")
            return act_d(level)
        need_level(f"{name}({args[0]})")
        i = args[0]
        if not 0 <= i < level:
            raise EvalError(f"color {i} outside 0..{level - 1}")
        if name == "E":
            return chevalley_E(i, level)
        if name == "F":
            return chevalley_F(i, level)
        need_q(name)
        if name == "Eq":
            return Eq(i, level)
        if name == "Fq":
            return Fq(i, level)
        if name == "K":
            return Kq(i, level)
        raise EvalError(f"unknown operator {name}")

    return go(node)


def evaluate(expr, state, level: int | None = None, ring: str = "Q") -> FockVector:
    """Apply an expression (text or AST) to a state or vector."""
    node = parse(expr) if isinstance(expr, str) else expr
    op = compile_expr(node, level, ring)
    v = state if isinstance(state, FockVector) else FockVector.basis(ChargedPartition(*state))
    out = op(v)
    return _lift(out) if ring == "q" else out
