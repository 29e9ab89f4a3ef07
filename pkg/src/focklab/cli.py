"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .basis import (
    ChargedPartition, MayaSpec, black_positions, from_wedge, maya_to_partition, parse_state,
    partition_to_maya, to_twice,
)
from .clifford import psi, psi_star
from .expr import EvalError, ParseError, evaluate
from .fockvec import _coeff_str
from .suites import SUITE_NAMES, run_suite
from .symfunc import char_poly, power_sum_expand, schur
from .vertex import fermion_from_bosons, fermion_star_from_bosons

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_partition(text: str) -> tuple:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        parts = tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"cannot read partition {text!r}") from None
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise UsageError(f"{text!r} is not a partition")
    return parts


def fmt_partition(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _state(text: str) -> ChargedPartition:
    try:
        return parse_state(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


# --------------------------------------------------------------------------
# commands


def cmd_convert(args) -> int:
    given = [x for x in (args.state, args.maya, args.wedge) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of STATE, --maya or --wedge")
    if args.state is not None:
        st = _state(args.state)
    elif args.maya is not None:
        try:
            st = maya_to_partition(MayaSpec.from_json(json.loads(args.maya)))
        except (ValueError, KeyError, TypeError, AssertionError) as e:
            raise UsageError(f"bad Maya diagram: {e}") from None
    else:
        try:
            sign, st = from_wedge(x for x in args.wedge.split(",") if x.strip())
        except ValueError as e:
            raise UsageError(str(e)) from None
        if sign == 0:
            _emit(args, "0 (repeated wedge index)", {"zero": True})
            return EXIT_OK
        if sign == -1:
            print("note: reordering the wedge gives sign -1", file=sys.stderr)
    maya = partition_to_maya(st)
    wedge = [str(x) for x in black_positions(st, len(st.lam) + 3)]
    text = "\n".join([
        f"state:  {st}",
        f"maya:   {maya.render()}",
        f"wedge:  {' ^ '.join(wedge)} ^ ...",
    ])
    _emit(args, text, {"state": st.to_json(), "maya": maya.to_json(), "wedge": wedge})
    return EXIT_OK


def cmd_act(args) -> int:
    v = evaluate(args.expr, _state(args.state), level=args.level, ring=args.ring)
    _emit(args, str(v), v.to_json())
    return EXIT_OK


def cmd_chi(args) -> int:
    lam = parse_partition(args.partition)
    p = char_poly(lam)
    terms = [{"exponents": list(e), "coeff": _coeff_str(c)} for (_, e), c in sorted(p.terms.items())]
    _emit(args, f"chi_{fmt_partition(lam)} = {p}", {"lambda": list(lam), "terms": terms})
    return EXIT_OK


def cmd_schur(args) -> int:
    lam = parse_partition(args.partition)
    exp = power_sum_expand(lam)
    pieces = [f"{c}*p{fmt_partition(mu)}" for mu, c in sorted(exp.items(), reverse=True)]
    lines = [f"s_{fmt_partition(lam)} = " + " + ".join(pieces).replace("+ -", "- ")]
    data = {"lambda": list(lam), "power_sums": [{"mu": list(mu), "coeff": _coeff_str(c)}
                                                  for mu, c in sorted(exp.items(), reverse=True)]}
    if args.nvars:
        poly = schur(lam, args.nvars)
        mono = sorted(poly.terms.items(), reverse=True)
        body = " + ".join(("" if c == 1 else f"{c}*") + f"y^{fmt_partition(e)}" for e, c in mono)
        lines.append(f"s_{fmt_partition(lam)}(y1..y{args.nvars}) = " + (body or "0"))
        data["monomials"] = [{"exponents": list(e), "coeff": _coeff_str(c)} for e, c in mono]
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_bf_check(args) -> int:
    st = _state(args.state)
    try:
        m2 = to_twice(args.m)
    except ValueError as e:
        raise UsageError(str(e)) from None
    m = Fraction(m2, 2)
    if args.star:
        lhs, rhs = psi_star(m)(st), fermion_star_from_bosons(m, st)
        names = (f"psi*_{args.m}", f"[z^-{args.m}] s^-1 z^(-ch+1/2) G_-(z)^-1 G_+(z)")
    else:
        lhs, rhs = psi(m)(st), fermion_from_bosons(m, st)
        names = (f"psi_{args.m}", f"[z^{args.m}] s z^(ch+1/2) G_-(z) G_+(z)^-1")
    ok = lhs == rhs
    text = f"{names[0]} |{st}> = {lhs}\n{names[1]} |{st}> = {rhs}\n{'agree' if ok else 'DIFFER'}"
    _emit(args, text, {"fermionic": lhs.to_json(), "bosonic": rhs.to_json(), "agree": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_mm_act(args) -> int:
    op = args.op.strip()
    kinds = {"E": "Eq", "F": "Fq", "K": "K"}
    if len(op) < 2 or op[0] not in kinds or not op[1:].isdigit():
        raise UsageError(f"--op must look like E0, F1 or K2, got {op!r}")
    v = evaluate(f"{kinds[op[0]]}({op[1:]})", _state(args.state), level=args.level, ring="q")
    _emit(args, str(v), v.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = [run_suite(n, max_size=args.max_size) for n in names]
    text = "\n".join(r.render() for r in reports)
    data = [r.to_json() for r in reports]
    _emit(args, text, data if len(data) > 1 else data[0])
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="focklab", description="Exact Fock space computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, level=False, ring=False, max_size=False):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if level:
            sp.add_argument("--level", type=int, help="level l for colored atoms")
        if ring:
            sp.add_argument("--ring", choices=("Q", "q"), default="Q", help="coefficient ring")
        if max_size:
            sp.add_argument("--max-size", type=int, help="largest |lambda| tested")

    sp = sub.add_parser("convert", help="charged partition <-> Maya diagram <-> wedge")
    sp.add_argument("state", nargs="?", help="e.g. '(4,3,3,1,1);-1'")
    sp.add_argument("--maya", help='JSON like {"window_lo": -7, "blacks": [5, 1, -1]}')
    sp.add_argument("--wedge", help="comma-separated indices, e.g. '5/2,1/2,-1/2'")
    common(sp)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("act", help="apply an operator expression to a state")
    sp.add_argument("expr")
    sp.add_argument("--state", required=True)
    common(sp, level=True, ring=True)
    sp.set_defaults(func=cmd_act)

    sp = sub.add_parser("chi", help="character polynomial chi_lambda")
    sp.add_argument("partition")
    common(sp)
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("schur", help="power-sum expansion of a Schur function")
    sp.add_argument("partition")
    sp.add_argument("--nvars", type=int, default=0, help="also expand in this many variables")
    common(sp)
    sp.set_defaults(func=cmd_schur)

    sp = sub.add_parser("bf-check", help="compare psi_m with its vertex-operator expression")
    sp.add_argument("--m", required=True, help="half-integer, e.g. 7/2")
    sp.add_argument("--state", required=True)
    sp.add_argument("--star", action="store_true", help="check psi*_m instead")
    common(sp)
    sp.set_defaults(func=cmd_bf_check)

    sp = sub.add_parser("mm-act", help="Misra-Miwa generator on a state")
    sp.add_argument("--op", required=True, help="E<i>, F<i> or K<i>")
    sp.add_argument("--state", required=True)
    sp.add_argument("--level", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_mm_act)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=SUITE_NAMES + ("all",))
    common(sp, max_size=True)
    sp.set_defaults(func=cmd_verify)
    return p


_VALUE_OPTIONS = {"--m", "--wedge", "--state", "--maya"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--m -1/2`` as ``--m=-1/2``; argparse would read the value as a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
            continue
        out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        if getattr(args, "expr", None):
            print(f"  {args.expr}\n  {' ' * _char_col(args.expr, e.offset)}^", file=sys.stderr)
        return EXIT_USAGE
    except (EvalError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def _char_col(text: str, byte_offset: int) -> int:
    return len(text.encode()[:byte_offset].decode(errors="ignore"))


if __name__ == "__main__":
    sys.exit(main())
