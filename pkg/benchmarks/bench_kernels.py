"""Compare the compiled and pure-Python fermionic kernels.

    python3 benchmarks/bench_kernels.py [--max-size N] [--repeat R]

Each workload runs on every importable backend; the compiled timings
are reported with the speed-up over pure Python.
"""
from __future__ import annotations

import argparse
import time

from focklab.basis import partitions_upto
from focklab.kernels import available_backends


def workloads(max_size: int):
    lams = list(partitions_upto(max_size))
    charges = range(-2, 3)
    positions = range(-15, 16, 2)

    def psi_sweep(k):
        for lam in lams:
            for h in charges:
                for m2 in positions:
                    k.psi(lam, h, m2)
                    k.psi_star(lam, h, m2)

    def bilinear_sweep(k):
        for lam in lams:
            for h in charges:
                for m2 in positions:
                    k.psi_psi_star(lam, h, m2, m2 + 6)

    def bead_sweep(k):
        for lam in lams:
            for step in range(-6, 7):
                if step:
                    k.bead_moves(lam, step)

    return {"psi/psi*": psi_sweep, "psi psi*": bilinear_sweep, "bead moves": bead_sweep}


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = available_backends()
    print(f"backends: {', '.join(b.BACKEND for b in backends)}; |lambda| <= {args.max_size}")
    for name, fn in workloads(args.max_size).items():
        times = {}
        for b in backends:
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                fn(b)
                best = min(best, time.perf_counter() - t0)
            times[b.BACKEND] = best
        row = "  ".join(f"{k}={v * 1e3:8.1f} ms" for k, v in times.items())
        if "cython" in times:
            row += f"  speed-up x{times['python'] / times['cython']:.1f}"
        print(f"{name:>12}: {row}")


if __name__ == "__main__":
    main()
