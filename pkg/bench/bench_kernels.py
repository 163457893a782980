"""Compare the compiled kernels against the pure-Python fallback.

    python bench/bench_kernels.py [--max-n 8] [--repeat 3]
"""

import argparse
import time

from caput_kit import _kernels_py
from caput_kit.oracle import canonical_representative
from caput_kit.partitions import enumerate_partitions, partition_to_cycle_type

try:
    from caput_kit import _kernels as _compiled
except ImportError:
    _compiled = None


def sweep(impl, n):
    impl.cycle_type_histogram(n)


def young_sweeps(impl, n):
    for lam in enumerate_partitions(n):
        labels = [i for i, part in enumerate(lam.parts) for _ in range(part)]
        impl.cycle_type_histogram(n, labels)


def blockings(impl, n):
    for lam in enumerate_partitions(n):
        for rho in enumerate_partitions(n):
            rep = canonical_representative(partition_to_cycle_type(rho))
            impl.count_invariant_blockings(rep.images, lam.parts)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _compiled is None:
        print("compiled kernels not built; only the Python fallback is available")
    print(f"{'kernel':<16}{'n':>3}{'python [s]':>13}{'compiled [s]':>14}{'speedup':>10}")
    for name, fn in (("class sweep", sweep), ("young sweeps", young_sweeps), ("fixed blockings", blockings)):
        for n in range(5, args.max_n + 1):
            py = best_of(lambda: fn(_kernels_py, n), args.repeat)
            if _compiled is None:
                print(f"{name:<16}{n:>3}{py:>13.4f}{'-':>14}{'-':>10}")
                continue
            cc = best_of(lambda: fn(_compiled, n), args.repeat)
            print(f"{name:<16}{n:>3}{py:>13.4f}{cc:>14.4f}{py / cc:>9.1f}x")


if __name__ == "__main__":
    main()
