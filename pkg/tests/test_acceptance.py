"""Acceptance criteria 1-11.  All comparisons are exact equalities.

Run alone with ``pytest tests/test_acceptance.py -v``; the terminal
summary prints one PASS/FAIL line per criterion.
"""
import random
import time
from fractions import Fraction as Fr

import pytest

from focklab.basis import (
    ChargedPartition as CP, HalfInt, MayaSpec, black_positions, from_wedge, maya_to_partition,
    partition_to_maya, states, to_wedge,
)
from focklab.boson import alpha, alpha_via_clifford
from focklab.clifford import anticommutator_check, psi, psi_star
from focklab.fockvec import FockVector, commutator, identity, operators_equal_on, scalar_op, zero_op
from focklab.matalg import (
    AffElt, PeriodicBanded, act_affine, act_ainfty, act_d, alpha_in_affine, bracket_ainfty,
    chevalley_E, chevalley_F, chevalley_elt, embed_affine,
)
from focklab.qfock import Eq, Fq, diagonal_identity_holds, specialize_q1
from focklab.suites import GAMMA_PANEL, ainfty_pairs, random_state
from focklab.symfunc import BosonPoly, char_poly, power_sum_expand_mn, sigma, weyl_on_B
from focklab.vertex import (
    RELATIONS, fermion_from_bosons, fermion_star_from_bosons, gamma_commutation_check,
)

FIG1 = CP((4, 3, 3, 1, 1), -1)


def vec(*pairs):
    v = FockVector()
    for coeff, lam in pairs:
        v.add_term(CP(lam, -1), coeff)
    return v


@pytest.mark.criterion(1, "Maya diagram <-> charged partition bijection")
def test_criterion_1_bijection():
    t0 = time.perf_counter()
    maya = MayaSpec(-13, frozenset({5, 1, -1, -7, -9, -13}))
    assert maya_to_partition(maya) == FIG1
    assert black_positions(FIG1, 8) == [HalfInt(t) for t in (5, 1, -1, -7, -9, -13, -15, -17)]
    assert maya_to_partition(partition_to_maya(FIG1)) == FIG1
    rng = random.Random(12345)
    for _ in range(10_000):
        s = random_state(rng, 30, 10)
        assert maya_to_partition(partition_to_maya(s)) == s
        assert from_wedge(to_wedge(s, len(s.lam) + 2)) == (1, s)
    assert time.perf_counter() - t0 < 5


@pytest.mark.criterion(2, "Clifford anticommutation relations")
def test_criterion_2_clifford():
    t0 = time.perf_counter()
    sts = states(8, range(-2, 3))
    for m2 in range(-13, 14, 2):
        for n2 in range(-13, 14, 2):
            ok, bad, rel = anticommutator_check(HalfInt(m2), HalfInt(n2), sts)
            assert ok, (m2, n2, bad, rel)
    assert time.perf_counter() - t0 < 30


@pytest.mark.criterion(3, "worked alpha_2 and alpha_-4 examples")
def test_criterion_3_alpha_examples():
    assert alpha(2)(FIG1) == vec((-1, (4, 2, 2, 1, 1)), (1, (4, 3, 1, 1, 1)), (-1, (4, 3, 3)))
    assert alpha(-4)(FIG1) == vec(
        (1, (8, 3, 3, 1, 1)), (-1, (6, 5, 3, 1, 1)), (1, (5, 5, 4, 1, 1)),
        (1, (4, 3, 3, 2, 2, 2)), (-1, (4, 3, 3, 1, 1, 1, 1, 1, 1)),
    )


@pytest.mark.criterion(4, "bead moves equal sum of psi_m psi*_(m+k)")
def test_criterion_4_bosons_from_fermions():
    t0 = time.perf_counter()
    sts = states(10, range(-2, 3))
    for k in range(-6, 7):
        if k:
            ok, bad = operators_equal_on(alpha(k), alpha_via_clifford(k), sts)
            assert ok, (k, bad)
    assert time.perf_counter() - t0 < 60


@pytest.mark.criterion(5, "Heisenberg relations [a_j, a_k] = j delta_{j,-k}")
def test_criterion_5_heisenberg():
    sts = states(8, range(-2, 3))
    for j in range(-5, 6):
        for k in range(-5, 6):
            if j and k:
                rhs = scalar_op(j) if j == -k else zero_op()
                ok, bad = operators_equal_on(commutator(alpha(j), alpha(k)), rhs, sts)
                assert ok, (j, k, bad)


def _chi_from_mn(lam):
    out = BosonPoly()
    for mu, c in power_sum_expand_mn(lam).items():
        exps = [0] * max(mu)
        coeff = Fr(c)
        for part in mu:
            exps[part - 1] += 1
            coeff *= part
        out = out + BosonPoly.monomial(0, tuple(exps), coeff)
    return out


@pytest.mark.criterion(6, "sigma intertwines F and B; chi_(2), chi_(1,1)")
def test_criterion_6_sigma():
    for s in states(6, range(-2, 3)):
        for k in range(-4, 5):
            if k:
                assert sigma(alpha(k)(s)) == weyl_on_B(k)(sigma(s)), (s, k)
    chi2 = BosonPoly({(0, (2,)): Fr(1, 2), (0, (0, 1)): 1})
    chi11 = BosonPoly({(0, (2,)): Fr(1, 2), (0, (0, 1)): -1})
    assert char_poly((2,)) == chi2 == _chi_from_mn((2,))
    assert char_poly((1, 1)) == chi11 == _chi_from_mn((1, 1))


@pytest.mark.criterion(7, "fermions from bosons: worked example and full sweep")
def test_criterion_7_fermions_from_bosons():
    t0 = time.perf_counter()
    assert fermion_from_bosons(Fr(7, 2), CP((1,), 2)) == FockVector.basis(CP((1, 1), 3))
    for s in states(6, range(-2, 3)):
        for m2 in range(-9, 10, 2):
            m = HalfInt(m2)
            assert fermion_from_bosons(m, s) == psi(m)(s), (m, s)
            assert fermion_star_from_bosons(m, s) == psi_star(m)(s), (m, s)
    assert time.perf_counter() - t0 < 120


@pytest.mark.criterion(8, "five Gamma/psi commutation relations to degree 6")
@pytest.mark.parametrize("relation", sorted(RELATIONS), ids=lambda r: f"relation{r}")
def test_criterion_8_gamma_relations(relation):
    failures = []
    for s in GAMMA_PANEL:
        r = gamma_commutation_check(relation, s, 6)
        if not r.ok:
            a, e2, lhs, rhs = r.mismatch
            failures.append(f"{s}: x^{a} w^{Fr(e2, 2)}: lhs {lhs} != rhs {rhs}")
    assert not failures, RELATIONS[relation][0] + "\n" + "\n".join(failures[:3])


@pytest.mark.criterion(9, "a_infinity: action of bracket = bracket of actions")
def test_criterion_9_ainfty():
    m, n = HalfInt(-3), HalfInt(5)
    central = bracket_ainfty(PeriodicBanded.ebar(m, n), PeriodicBanded.ebar(n, m))
    assert central == PeriodicBanded.ebar(m, m) - PeriodicBanded.ebar(n, n) + PeriodicBanded.central_element()
    assert bracket_ainfty(PeriodicBanded.diagonal(1), PeriodicBanded.diagonal(-1)) == PeriodicBanded.central_element()
    sts = states(6, range(-2, 3))
    for a, b in ainfty_pairs():
        lhs = act_ainfty(bracket_ainfty(a, b))
        rhs = commutator(act_ainfty(a), act_ainfty(b))
        ok, bad = operators_equal_on(lhs, rhs, sts)
        assert ok, (a, b, bad)


@pytest.mark.criterion(10, "affine layer: Chevalley, C_k = alpha_k, Heisenberg, d")
def test_criterion_10_affine():
    sts = states(8, range(-2, 3))
    for lvl in (2, 3, 4):
        for i in range(lvl):
            for kind, comb in (("E", chevalley_E(i, lvl)), ("F", chevalley_F(i, lvl))):
                ok, bad = operators_equal_on(act_affine(chevalley_elt(kind, i, lvl)), comb, sts)
                assert ok, (kind, i, lvl, bad)
    assert embed_affine(alpha_in_affine(7, 3)) == PeriodicBanded.diagonal(7)
    for lvl in (2, 3):
        for k in range(-8, 9):
            if k:
                ok, bad = operators_equal_on(act_affine(alpha_in_affine(k, lvl)), alpha(k), sts)
                assert ok, (k, lvl, bad)
    for lvl in (2, 3):
        for k in (1, 2, 3):
            lhs = commutator(act_affine(AffElt.identity(lvl, k)), act_affine(AffElt.identity(lvl, -k)))
            ok, bad = operators_equal_on(lhs, scalar_op(k * lvl), states(6, range(-2, 3)))
            assert ok, (lvl, k, bad)
    for lvl in (2, 3, 4):
        d = act_d(lvl)
        for i in range(lvl):
            e, f = chevalley_E(i, lvl), chevalley_F(i, lvl)
            if i == 0:
                assert operators_equal_on(e * d, (d + identity()) * e, sts)[0]
                assert operators_equal_on(f * d, (d - identity()) * f, sts)[0]
            else:
                assert operators_equal_on(commutator(d, e), zero_op(), sts)[0]
                assert operators_equal_on(commutator(d, f), zero_op(), sts)[0]


@pytest.mark.criterion(11, "Misra-Miwa: q -> 1 limit, [E_i,F_j] = 0, diagonal identity")
def test_criterion_11_misra_miwa():
    sts = states(8, range(-2, 3))
    for lvl in (2, 3, 4):
        for i in range(lvl):
            for s in sts:
                assert specialize_q1(Eq(i, lvl).on_basis(s)) == chevalley_E(i, lvl).on_basis(s)
                assert specialize_q1(Fq(i, lvl).on_basis(s)) == chevalley_F(i, lvl).on_basis(s)
                assert diagonal_identity_holds(i, lvl, s), (lvl, i, s)
            for j in range(lvl):
                if i != j:
                    ok, bad = operators_equal_on(commutator(Eq(i, lvl), Fq(j, lvl)), zero_op(), sts)
                    assert ok, (lvl, i, j, bad)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
