"""Benchmark: compiled partition-function kernel versus the pure-Python one.

Builds the full q-graded partition table over a box for a chosen rank-2 root
system and reports wall times and the speedup. Results are checked for
equality on a small box first, so a timing run is also a parity run.

Usage: python benchmarks/bench_kernels.py [--system b2] [--bound 80] [--repeat 3]
"""

import argparse
import statistics
import time

from nilchar import kernels

SYSTEMS = {
    "a2": [(1, 0), (0, 1), (1, 1)],
    "b2": [(1, 0), (0, 1), (1, 1), (2, 1)],
    "g2": [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)],
}


def time_backend(backend: str, roots, bounds, repeat: int) -> list[float]:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        kernels.partition_table(roots, bounds, backend=backend)
        times.append(time.perf_counter() - start)
    return times


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--system", choices=sorted(SYSTEMS), default="b2")
    parser.add_argument("--bound", type=int, default=80, help="componentwise box bound")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    roots = SYSTEMS[args.system]
    bounds = (args.bound, args.bound)

    small = (10, 10)
    pure_small = kernels.partition_table(roots, small, backend="python")
    print(f"system {args.system}: {len(roots)} positive roots, box {bounds}")
    if not kernels.HAVE_COMPILED:
        print("compiled kernel not built; timing the pure backend only")
        times = time_backend("python", roots, bounds, args.repeat)
        print(f"python:   {statistics.median(times):8.3f} s")
        return 0

    fast_small = kernels.partition_table(roots, small, backend="compiled")
    assert pure_small == fast_small, "backend disagreement on the parity box"
    print("parity on the small box: ok")

    py_times = time_backend("python", roots, bounds, args.repeat)
    c_times = time_backend("compiled", roots, bounds, args.repeat)
    py_med = statistics.median(py_times)
    c_med = statistics.median(c_times)
    print(f"python:   {py_med:8.3f} s  (runs: {', '.join(f'{t:.3f}' for t in py_times)})")
    print(f"compiled: {c_med:8.3f} s  (runs: {', '.join(f'{t:.3f}' for t in c_times)})")
    print(f"speedup:  {py_med / c_med:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
