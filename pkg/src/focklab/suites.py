"""Verification suites behind ``focklab verify``.

Each suite splits into independent, picklable cases.  Cases may run in
a process pool (``FOCKLAB_THREADS`` workers); results are merged in case
order so reports are deterministic.
"""
from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .basis import (
    ChargedPartition, HalfInt, MayaSpec, from_wedge, maya_to_partition, partition_to_maya, states, to_wedge,
)
from .boson import alpha, alpha_via_clifford
from .clifford import anticommutator_check
from .fockvec import commutator, identity, scalar_op, zero_op
from .matalg import (
    AffElt, PeriodicBanded, act_affine, act_ainfty, act_d, alpha_in_affine, bracket_affine,
    bracket_ainfty, chevalley_E, chevalley_F, chevalley_elt, embed_affine, plain_commutator, trivialize,
)
from .qfock import Eq, Fq, diagonal_identity_holds, specialize_q1
from .vertex import fermion_from_bosons, fermion_star_from_bosons, gamma_commutation_check

SUITE_NAMES = (
    "bijection", "clifford", "heisenberg", "bf-bosons", "bf-fermions", "gamma",
    "ainfty", "affine", "gl-alpha", "d-relations", "mm", "mm-q1",
)

DEFAULT_MAX_SIZE = {
    "bijection": 30, "clifford": 8, "heisenberg": 8, "bf-bosons": 10, "bf-fermions": 6,
    "gamma": 6, "ainfty": 6, "affine": 8, "gl-alpha": 8, "d-relations": 8, "mm": 8, "mm-q1": 8,
}

GAMMA_PANEL = (
    ChargedPartition((), 0), ChargedPartition((1,), 0), ChargedPartition((2,), 1),
    ChargedPartition((1, 1), -1), ChargedPartition((2, 1), 0), ChargedPartition((3,), 2),
    ChargedPartition((1, 1, 1), 0), ChargedPartition((3, 1), -2), ChargedPartition((2, 2), 1),
    ChargedPartition((4, 3, 3, 1, 1), -1),
)


@dataclass
class SuiteReport:
    suite: str
    cases_run: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases_run": self.cases_run, "checks": self.checks,
                "ok": self.ok, "failures": self.failures}

    def render(self) -> str:
        head = (f"{self.suite}: {self.cases_run} cases, {self.checks} checks, "
                f"{len(self.failures)} failures -> {'PASS' if self.ok else 'FAIL'}")
        lines = [head]
        for f in self.failures:
            lines.append(f"  case {f['case']} state {f['state']}: expected {f['expected']}, got {f['actual']}")
        return "\n".join(lines)


def _fail(case, state, expected, actual) -> dict:
    return {"case": str(case), "state": str(state), "expected": str(expected), "actual": str(actual)}


def _compare(case, lhs, rhs, sts) -> tuple[int, list]:
    fails = []
    for s in sts:
        a, b = lhs.on_basis(s), rhs.on_basis(s)
        if a != b:
            fails.append(_fail(case, s, b, a))
    return len(sts), fails


# --------------------------------------------------------------------------
# random samples


def random_state(rng: random.Random, max_size: int, max_charge: int) -> ChargedPartition:
    n = rng.randint(0, max_size)
    parts = []
    while n:
        p = rng.randint(1, n)
        parts.append(p)
        n -= p
    return ChargedPartition(tuple(sorted(parts, reverse=True)), rng.randint(-max_charge, max_charge))


def random_banded(rng: random.Random, finite: bool = False) -> PeriodicBanded:
    level = rng.choice((1, 2, 3))
    pat = {}
    if not finite:
        for _ in range(rng.randint(1, 3)):
            pat[(rng.randint(1, level), rng.randint(-3, 3))] = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
    fin = {}
    for _ in range(rng.randint(0 if not finite else 1, 3)):
        fin[(2 * rng.randint(-3, 2) + 1, 2 * rng.randint(-3, 2) + 1)] = rng.randint(-2, 2)
    return PeriodicBanded(level, pat, fin, rng.randint(-1, 1))


def ainfty_pairs() -> list[tuple[PeriodicBanded, PeriodicBanded]]:
    """Fixed sample of pairs: named cases plus seeded random ones."""
    m, n = HalfInt(-3), HalfInt(5)
    pairs = [
        (PeriodicBanded.ebar(m, n), PeriodicBanded.ebar(n, m)),
        (PeriodicBanded.ebar(n, m), PeriodicBanded.ebar(m, n)),
        (PeriodicBanded.diagonal(1), PeriodicBanded.diagonal(-1)),
        (PeriodicBanded.diagonal(2), PeriodicBanded.diagonal(-2)),
        (PeriodicBanded.ebar(HalfInt(1), HalfInt(3)), PeriodicBanded.ebar(HalfInt(5), HalfInt(1))),
        (PeriodicBanded.from_triples(3, [(1, 2, 0, 1)]), PeriodicBanded.from_triples(2, [(2, 1, 0, 1)])),
    ]
    rng = random.Random(20240601)
    for _ in range(24):
        pairs.append((random_banded(rng), random_banded(rng)))
    return pairs


# --------------------------------------------------------------------------
# case lists and runners


def _cases(suite: str) -> list:
    if suite == "bijection":
        return list(range(20))
    if suite == "clifford":
        return list(range(-13, 14, 2))
    if suite == "heisenberg":
        return [j for j in range(-5, 6) if j]
    if suite == "bf-bosons":
        return [k for k in range(-6, 7) if k]
    if suite == "bf-fermions":
        return list(range(-9, 10, 2))
    if suite == "gamma":
        return [1, 2, 3, 4, 5]
    if suite == "ainfty":
        return list(range(len(ainfty_pairs()))) + [("trivial", i) for i in range(10)]
    if suite == "affine":
        out = [(lvl, kind, i) for lvl in (2, 3, 4) for kind in ("E", "F") for i in range(lvl)]
        out += [(lvl, "heis", k) for lvl in (2, 3) for k in (1, 2, 3)]
        out += [(lvl, "bracket", 0) for lvl in (2, 3)]
        return out
    if suite == "gl-alpha":
        return [(lvl, k) for lvl in (2, 3) for k in range(-8, 9) if k]
    if suite == "d-relations":
        return [(lvl, i) for lvl in (2, 3, 4) for i in range(lvl)]
    if suite == "mm":
        return [(lvl, i, j) for lvl in (2, 3, 4) for i in range(lvl) for j in range(lvl)]
    if suite == "mm-q1":
        return [(lvl, i) for lvl in (2, 3, 4) for i in range(lvl)]
    raise KeyError(suite)


def run_case(suite: str, key, max_size: int) -> tuple[int, list]:
    """Run one case; returns ``(checks, failures)``."""
    if suite == "bijection":
        rng = random.Random(1000 + key)
        fails = []
        for _ in range(500):
            s = random_state(rng, max_size, 10)
            maya = partition_to_maya(s)
            back = maya_to_partition(MayaSpec.from_json(json.loads(json.dumps(maya.to_json()))))
            sign, wb = from_wedge(to_wedge(s, len(s.lam) + 3))
            if back != s or (sign, wb) != (1, s):
                fails.append(_fail(key, s, s, f"maya->{back}, wedge->{wb}"))
        return 500, fails

    if suite == "clifford":
        sts = states(max_size, range(-2, 3))
        fails = []
        for n2 in range(-13, 14, 2):
            ok, bad, rel = anticommutator_check(HalfInt(key), HalfInt(n2), sts)
            if not ok:
                fails.append(_fail((key, n2, rel), bad, "anticommutator relation", "violated"))
        return 14, fails

    if suite == "heisenberg":
        sts = states(max_size, range(-2, 3))
        checks, fails = 0, []
        for k in range(-5, 6):
            if not k:
                continue
            rhs = scalar_op(key) if key == -k else zero_op()
            c, f = _compare((key, k), commutator(alpha(key), alpha(k)), rhs, sts)
            checks += c
            fails += f
        return checks, fails

    if suite == "bf-bosons":
        return _compare(key, alpha(key), alpha_via_clifford(key), states(max_size, range(-2, 3)))

    if suite == "bf-fermions":
        from .clifford import psi, psi_star
        m = HalfInt(key)
        fails = []
        sts = states(max_size, range(-2, 3))
        for s in sts:
            if fermion_from_bosons(m, s) != psi(m)(s):
                fails.append(_fail(("psi", key), s, psi(m)(s), fermion_from_bosons(m, s)))
            if fermion_star_from_bosons(m, s) != psi_star(m)(s):
                fails.append(_fail(("psi*", key), s, psi_star(m)(s), fermion_star_from_bosons(m, s)))
        return 2 * len(sts), fails

    if suite == "gamma":
        fails = []
        for s in GAMMA_PANEL:
            r = gamma_commutation_check(key, s, max_size, corrected=(key == 1))
            if not r.ok:
                a, e2, lhs, rhs = r.mismatch
                fails.append(_fail((key, f"x^{a} w^{e2}/2"), s, rhs, lhs))
        return len(GAMMA_PANEL), fails

    if suite == "ainfty":
        sts = states(max_size, range(-2, 3))
        if isinstance(key, tuple):
            rng = random.Random(77 + key[1])
            x, y = random_banded(rng, finite=True), random_banded(rng, finite=True)
            br = bracket_ainfty(x, y)
            (mat, central) = trivialize(br)
            mx, my = trivialize(x)[0], trivialize(y)[0]
            want = plain_commutator(mx, my)
            ok = mat == want and central == 0
            return 1, [] if ok else [_fail(key, "-", f"{want}, c=0", f"{mat}, c={central}")]
        a, b = ainfty_pairs()[key]
        lhs = act_ainfty(bracket_ainfty(a, b))
        rhs = commutator(act_ainfty(a), act_ainfty(b))
        return _compare(key, lhs, rhs, sts)

    if suite == "affine":
        lvl, kind, i = key
        sts = states(max_size, range(-2, 3))
        if kind in ("E", "F"):
            comb = chevalley_E(i, lvl) if kind == "E" else chevalley_F(i, lvl)
            return _compare(key, act_affine(chevalley_elt(kind, i, lvl)), comb, sts)
        if kind == "heis":
            k = i
            lhs = commutator(act_affine(AffElt.identity(lvl, k)), act_affine(AffElt.identity(lvl, -k)))
            return _compare(key, lhs, scalar_op(k * lvl), states(min(max_size, 6), range(-2, 3)))
        # bracket compatibility of the embedding on a few loop elements
        gens = [AffElt.x(1, 2, 1, lvl), AffElt.x(2, 1, -1, lvl), AffElt.x(lvl, 1, 1, lvl),
                AffElt.x(1, lvl, -1, lvl), AffElt.x(1, 1, 2, lvl), AffElt.x(1, 1, -2, lvl)]
        fails = []
        for x in gens:
            for y in gens:
                lhs = embed_affine(bracket_affine(x, y))
                rhs = bracket_ainfty(embed_affine(x), embed_affine(y))
                if lhs != rhs:
                    fails.append(_fail((key, repr(x), repr(y)), "-", rhs, lhs))
        return len(gens) ** 2, fails

    if suite == "gl-alpha":
        lvl, k = key
        return _compare(key, act_affine(alpha_in_affine(k, lvl)), alpha(k), states(max_size, range(-2, 3)))

    if suite == "d-relations":
        lvl, i = key
        sts = states(max_size, range(-2, 3))
        d = act_d(lvl)
        e, f = chevalley_E(i, lvl), chevalley_F(i, lvl)
        if i == 0:
            c1, f1 = _compare((key, "E"), e * d, (d + identity()) * e, sts)
            c2, f2 = _compare((key, "F"), f * d, (d - identity()) * f, sts)
        else:
            c1, f1 = _compare((key, "E"), commutator(d, e), zero_op(), sts)
            c2, f2 = _compare((key, "F"), commutator(d, f), zero_op(), sts)
        return c1 + c2, f1 + f2

    if suite == "mm":
        lvl, i, j = key
        sts = states(max_size, range(-2, 3))
        if i != j:
            return _compare(key, commutator(Eq(i, lvl), Fq(j, lvl)), zero_op(), sts)
        fails = [_fail(key, s, "(K - K^-1)/(q - q^-1)", "differs")
                 for s in sts if not diagonal_identity_holds(i, lvl, s)]
        return len(sts), fails

    if suite == "mm-q1":
        lvl, i = key
        sts = states(max_size, range(-2, 3))
        fails = []
        for s in sts:
            for q_op, comb in ((Eq(i, lvl), chevalley_E(i, lvl)), (Fq(i, lvl), chevalley_F(i, lvl))):
                got = specialize_q1(q_op.on_basis(s))
                want = comb.on_basis(s)
                if got != want:
                    fails.append(_fail((key, q_op.name), s, want, got))
        return 2 * len(sts), fails

    raise KeyError(suite)


def _worker(args):
    suite, key, max_size = args
    return run_case(suite, key, max_size)


def worker_count() -> int:
    env = os.environ.get("FOCKLAB_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"FOCKLAB_THREADS must be an integer, got {env!r}") from None
        return max(1, n)
    return os.cpu_count() or 1


def run_suite(suite: str, max_size: int | None = None, workers: int | None = None) -> SuiteReport:
    if suite not in SUITE_NAMES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    size = DEFAULT_MAX_SIZE[suite] if max_size is None else max_size
    keys = _cases(suite)
    workers = worker_count() if workers is None else workers
    jobs = [(suite, k, size) for k in keys]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_worker, jobs))
    else:
        results = [_worker(j) for j in jobs]
    report = SuiteReport(suite)
    for checks, fails in results:
        report.cases_run += 1
        report.checks += checks
        report.failures.extend(fails)
    return report


__all__ = ["SUITE_NAMES", "SuiteReport", "run_suite", "run_case", "ainfty_pairs", "random_state",
           "worker_count", "GAMMA_PANEL"]
