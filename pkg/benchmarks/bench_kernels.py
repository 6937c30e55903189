"""Compare the compiled and pure-Python kernel backends.

Usage: ``python3 benchmarks/bench_kernels.py [--repeat N]``. Prints one line per
kernel with the best-of-N wall time of each backend, the speedup, and the
largest absolute difference between the two backends' results.
"""

import argparse
import time

import numpy as np

from baypod_al import _kernels_py as py
from baypod_al.fom import DEFAULT_BC, SpatialGrid, TimeGrid, _step_schedule

try:
    from baypod_al import _ckernels as cy
except ImportError:  # extension not built
    cy = None


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _cases():
    rng = np.random.default_rng(0)
    n = 200
    lower, upper = rng.uniform(-1, 0, n), rng.uniform(-1, 0, n)
    diag = 3.0 + rng.uniform(size=n)
    rhs = rng.normal(size=n)
    A = rng.normal(size=(200, 200))
    A = A @ A.T
    sgrid, tgrid = SpatialGrid(), TimeGrid()
    ratios, thetas, ends, record = _step_schedule(0.5, sgrid, tgrid, 4)
    u0 = np.ascontiguousarray(np.broadcast_to(DEFAULT_BC.initial(sgrid.positions), (sgrid.n_x,)), dtype=np.float64)
    left = np.ascontiguousarray(np.broadcast_to(DEFAULT_BC.left(ends), ends.shape), dtype=np.float64)
    right = np.ascontiguousarray(np.broadcast_to(DEFAULT_BC.right(ends), ends.shape), dtype=np.float64)
    return {
        "thomas_solve (n=200)": lambda k: k.thomas_solve(lower, diag, upper, rhs),
        "jacobi_eigh (200x200)": lambda k: k.jacobi_eigh(A, 1e-14, 60)[0],
        "cn_march (one kappa)": lambda k: k.cn_march(u0, ratios, thetas, left, right, record, tgrid.n_T)[0],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if cy is None:
        print("compiled backend not available; build with `pip install -e . --no-build-isolation`")
        return
    print(f"{'kernel':<24}{'cython [s]':>12}{'python [s]':>12}{'speedup':>10}{'max |diff|':>13}")
    for name, call in _cases().items():
        tc, oc = _best(lambda: call(cy), args.repeat)
        tp, op = _best(lambda: call(py), max(1, args.repeat // 2))
        diff = float(np.max(np.abs(np.asarray(oc) - np.asarray(op))))
        print(f"{name:<24}{tc:>12.4f}{tp:>12.4f}{tp / tc:>9.1f}x{diff:>13.1e}")


if __name__ == "__main__":
    main()
