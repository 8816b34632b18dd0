"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Both paths are checked for identical output before timing; the first jitted
call (compilation) is excluded.
"""
import argparse
import os
import time

import numpy as np

from liesq import _kernels as K
from liesq.rootsys import _dominant_weights, _int_gram, _pos_array, cartan_matrix, parse_simple, weight_arrays

CASES = [("B4", (1, 1, 0, 1)), ("D5", (1, 0, 1, 0, 1)), ("E6", (1, 0, 0, 0, 0, 1)), ("F4", (1, 0, 0, 1)),
         ("E7", (0, 0, 0, 0, 0, 1, 1)), ("E8", (1, 0, 0, 0, 0, 0, 0, 0))]


def _jobs(name, lam):
    t = parse_simple(name)
    dom = np.array(_dominant_weights(t, lam), dtype=np.int64)
    _, g = _int_gram(t)
    fr = (dom, cartan_matrix(t), _pos_array(t), np.array(g, dtype=np.int64), np.ones(t.rank, dtype=np.int64))
    w, m = weight_arrays(t, lam)
    targets = np.array(_dominant_weights(t, tuple(2 * x for x in lam)), dtype=np.int64)
    pts = np.random.default_rng(0).integers(-8, 9, size=(20000, t.rank))
    return {
        "freudenthal": (K.freudenthal, fr),
        "pair_counts": (K.pair_counts, (w, m, targets)),
        "reduce_batch": (K.reduce_batch, (pts, cartan_matrix(t))),
    }


def _run(flag, fn, args, repeat):
    os.environ["LIESQ_NUMBA"] = flag
    out = fn(*args)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return out, best


def _same(a, b):
    if isinstance(a, tuple):
        # reduce_batch: dominant points must match, reflection counts only in parity
        return np.array_equal(a[0], b[0]) and np.array_equal(a[1] % 2, b[1] % 2)
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not K.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed")
    print(f"{'case':<22} {'kernel':<13} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for name, lam in CASES:
        for kname, (fn, fargs) in _jobs(name, lam).items():
            a, t_np = _run("0", fn, fargs, args.repeat)
            b, t_nb = _run("1", fn, fargs, args.repeat)
            if not _same(a, b):
                raise SystemExit(f"mismatch in {kname} for {name} {lam}")
            label = f"{name} {''.join(map(str, lam))}"
            print(f"{label:<22} {kname:<13} {t_np:>10.4f} {t_nb:>10.4f} {t_np / max(t_nb, 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()
