"""Compare the numba and pure-numpy kernel backends.

    python benchmarks/bench_kernels.py --n 16 --repeats 5

Times the partition scan behind the brute-force balance oracle, batch sign
induction, and the all-pairs parity table. Numba compile time is excluded.
"""

from __future__ import annotations

import argparse
import itertools
import time

import numpy as np

from setsign import _kernels


def best_of(fn, repeats):
    fn()
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=16, help="vertices for the partition scan")
    parser.add_argument("--p", type=float, default=0.3)
    parser.add_argument("--rows", type=int, default=20_000, help="valuations for batch induction")
    parser.add_argument("--m", type=int, default=10, help="ground set size for the parity table")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    pairs = list(itertools.combinations(range(args.n), 2))
    edges = [e for e in pairs if rng.random() < args.p]
    us = np.array([u for u, _ in edges], dtype=np.int64)
    vs = np.array([v for _, v in edges], dtype=np.int64)
    # unbalanced signature forces a full scan of all 2**n partitions
    neg = rng.random(len(edges)) < 0.5
    masks = rng.integers(0, 1 << 20, size=(args.rows, args.n), dtype=np.int64)

    cases = {
        f"cut_scan n={args.n} |E|={len(edges)}": lambda k: k.cut_scan(args.n, us, vs, neg, False),
        f"negative_edges rows={args.rows}": lambda k: k.negative_edges(masks, us, vs),
        f"pair_parity m={args.m}": lambda k: k.pair_parity(args.m),
    }
    print(f"{'kernel':<36}{'numpy':>12}{'numba':>12}{'speedup':>10}")
    for label, call in cases.items():
        t_np = best_of(lambda: call(_kernels.NUMPY), args.repeats)
        if _kernels.NUMBA is None:
            print(f"{label:<36}{t_np:>11.4f}s{'n/a':>12}")
            continue
        t_nb = best_of(lambda: call(_kernels.NUMBA), args.repeats)
        print(f"{label:<36}{t_np:>11.4f}s{t_nb:>11.4f}s{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
