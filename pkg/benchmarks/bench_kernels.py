"""Throughput comparison of the coefficient kernels across backends.

Times the frequency-domain noise-coefficient evaluation (the hot loop of
the phonon-number integration) on a large frequency grid, for each
available backend and both evaluation routes.

Run:  python benchmarks/bench_kernels.py [--points 200000] [--repeats 5]
"""

import argparse
import os
import time

import numpy as np

from dissipcool import SystemParams, build_drift, have_numba
from dissipcool.kernels import BACKEND_ENV, coeff_rows_closed, coeff_rows_solve


def _bench(fn, repeats: int) -> float:
    fn()  # warm-up (also triggers jit compilation when applicable)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=200_000)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    params = SystemParams(
        omega0=0.7, kappa=300.0, gamma0=1e-6, gamma1=1e-6,
        g0as=0.1, g1as=0.3, delta=0.5, nth0=100.0, nth1=100.0,
    )
    drift = build_drift(params)
    ptuple = (params.omega0, params.omega1, params.kappa, params.gamma0,
              params.gamma1, params.g0as, params.g1as, params.delta)
    rng = np.random.default_rng(7)
    omega = rng.uniform(-3000.0, 3000.0, size=args.points)

    backends = ["numpy"] + (["numba"] if have_numba() else [])
    if not have_numba():
        print("numba not importable; benchmarking the numpy path only")

    print(f"{args.points} frequency points, best of {args.repeats}")
    print(f"{'backend':8s} {'kernel':7s} {'seconds':>10s} {'Mpts/s':>8s}")
    for backend in backends:
        os.environ[BACKEND_ENV] = backend
        for label, fn in (
            ("solve", lambda: coeff_rows_solve(drift.m, drift.noise_map, omega)),
            ("closed", lambda: coeff_rows_closed(ptuple, omega)),
        ):
            seconds = _bench(fn, args.repeats)
            rate = args.points / seconds / 1e6
            print(f"{backend:8s} {label:7s} {seconds:10.4f} {rate:8.2f}")
    os.environ.pop(BACKEND_ENV, None)


if __name__ == "__main__":
    main()
