"""Backend agreement and an independent wedge-list oracle."""
import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from focklab import kernels
from focklab.basis import partitions_upto

BACKENDS = kernels.available_backends()
LAMS = list(partitions_upto(7))


def wedge(lam, h, n):
    L = len(lam)
    return [2 * (h - i + (lam[i - 1] if i <= L else 0)) + 1 for i in range(1, n + 1)]


def to_state(beads, h):
    """Read back (lam, h) from a decreasing bead list that ends in the vacuum tail."""
    lam = [(b - 1) // 2 - h + i for i, b in enumerate(beads, start=1)]
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


def oracle_psi(lam, h, m2):
    n = len(lam) + 4 + abs(m2)
    beads = wedge(lam, h, n)
    if m2 in beads or m2 < beads[-1]:
        return None
    k = sum(1 for b in beads if b > m2)
    new = sorted(beads + [m2], reverse=True)
    return (-1) ** k, to_state(new, h + 1)


def oracle_psi_star(lam, h, m2):
    n = len(lam) + 4 + abs(m2)
    beads = wedge(lam, h, n)
    if m2 not in beads:
        return None
    k = beads.index(m2)
    beads.remove(m2)
    return (-1) ** k, to_state(beads, h - 1)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
def test_psi_matches_oracle(backend):
    for lam in LAMS:
        for h in (-2, 0, 3):
            for m2 in range(-15, 16, 2):
                assert backend.psi(lam, h, m2) == oracle_psi(lam, h, m2), (lam, h, m2)
                assert backend.psi_star(lam, h, m2) == oracle_psi_star(lam, h, m2), (lam, h, m2)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
def test_black_positions(backend):
    for lam in LAMS:
        assert list(backend.black_positions2(lam, -1, len(lam) + 2)) == wedge(lam, -1, len(lam) + 2)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
def test_backends_agree():
    py, c = BACKENDS
    for lam in LAMS:
        for k in range(-5, 6):
            if k:
                assert sorted(py.bead_moves(lam, k)) == sorted(c.bead_moves(lam, k))
        for m2 in range(-9, 10, 2):
            for n2 in range(-9, 10, 2):
                assert py.psi_psi_star(lam, 1, m2, n2) == c.psi_psi_star(lam, 1, m2, n2)


@given(st.lists(st.integers(1, 8), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True))),
       st.integers(-7, 7).filter(bool))
def test_bead_moves_oracle(lam, k):
    # the window's tail has |k|+1 consecutive beads, so beads below it cannot move
    beads = wedge(lam, 0, len(lam) + abs(k) + 2)
    want = []
    for b in beads:
        t = b - 2 * k
        if t in beads or t < beads[-1]:
            continue
        jumped = sum(1 for x in beads if min(b, t) < x < max(b, t))
        new = sorted([x for x in beads if x != b] + [t], reverse=True)
        want.append(((-1) ** jumped, to_state(new, 0)))
    assert sorted(kernels.bead_moves(lam, k)) == sorted(want)


def test_pure_env_forces_python():
    code = "from focklab import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, FOCKLAB_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_module_reload_is_stable():
    importlib.reload(kernels)
    assert kernels.BACKEND in ("python", "cython")
