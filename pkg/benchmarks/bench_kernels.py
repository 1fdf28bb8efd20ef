"""Time every array kernel under numba and under the numpy fallback.

    python benchmarks/bench_kernels.py [--n 5] [--repeat 3]

The first numba call of each kernel is a warm-up and is excluded, so the
numbers compare steady-state throughput. Outputs of both backends are checked
for equality before timing.
"""

import argparse
import time

import numpy as np

from thetatrees import _jit, batch, kernels
from thetatrees.dyck import sequence_pair_arrays


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def same(x, y):
    if isinstance(x, tuple):
        return all(same(a, b) for a, b in zip(x, y))
    return np.array_equal(x, y)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if not _jit.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    n = args.n
    parent, w, lv, inv = batch.tree_arrays(n - 1, n, n)
    zp, zw, zl, _ = batch.tree_arrays(n, zero_only=True)
    a, b = sequence_pair_arrays(n)
    cases = {
        "extend_trees": (parent, w, lv, inv, n, n, False),
        "inv_counts": (zp, zw, zl),
        "exploration_orders": (zp, zw, zl),
        "psi": (a, b),
    }
    print(f"n={n}, trees with n-1 vertices: {len(parent)}, zero-inversion trees: {len(zp)}, "
          f"sequence pairs: {len(a)}")
    print(f"{'kernel':<20}{'rows':>10}{'numba s':>10}{'numpy s':>10}{'speed-up':>10}")
    for name, call_args in cases.items():
        fn_nb, fn_np = kernels.get(name, "numba"), kernels.get(name, "numpy")
        out_nb, out_np = fn_nb(*call_args), fn_np(*call_args)  # warm-up and compile
        if name == "extend_trees":
            out_nb = tuple(x[batch.lex_sort(*out_nb[:3])] for x in out_nb)
            out_np = tuple(x[batch.lex_sort(*out_np[:3])] for x in out_np)
        assert same(out_nb, out_np), f"{name}: backends disagree"
        t_nb = best_of(lambda: fn_nb(*call_args), args.repeat)
        t_np = best_of(lambda: fn_np(*call_args), args.repeat)
        print(f"{name:<20}{len(call_args[0]):>10}{t_nb:>10.3f}{t_np:>10.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
