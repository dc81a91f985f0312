"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat 5] [--census N D]

Each row reports the best wall time over ``--repeat`` runs for one workload
and the speedup of the compiled backend.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from freiman import _pykernels
from freiman.ideal import monomials_of_degree

try:
    from freiman import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    rng = random.Random(7)
    m3 = [tuple(g) for g in monomials_of_degree(4, 3)]
    m5 = [tuple(g) for g in monomials_of_degree(5, 4)]
    half = rng.sample(m5, len(m5) // 2)
    noisy = [tuple(rng.randint(0, 6) for _ in range(6)) for _ in range(400)]
    mat = [tuple(rng.randint(0, 9) for _ in range(12)) for _ in range(60)]
    return [
        ("sumset (x1..x5)^4 x half", "sumset", (m5, half)),
        ("power_sizes (x1..x4)^3, k<=4", "power_sizes", (m3, 4)),
        ("power_sizes random half, k<=3", "power_sizes", (half, 3)),
        ("minimal_rows 400 random rows", "minimal_rows", (noisy,)),
        ("rank 60x12 random", "rank", (mat,)),
    ]


CENSUS = (
    "import sys, time; from freiman.search import freiman_census;"
    "t = time.perf_counter(); freiman_census(int(sys.argv[1]), int(sys.argv[2]));"
    "print(time.perf_counter() - t)"
)


def census_time(n: int, d: int, pure: bool) -> float:
    env = dict(os.environ, FREIMAN_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", CENSUS, str(n), str(d)],
                         env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--census", nargs=2, type=int, metavar=("N", "D"), default=(3, 3),
                        help="also time a full census end to end (default 3 3)")
    args = parser.parse_args()

    impls = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled kernels are not built; timing the Python backend only")
    header = f"{'workload':34s} " + " ".join(f"{name:>10s}" for name, _ in impls)
    print(header + ("   speedup" if len(impls) == 2 else ""))
    for label, fn, fargs in workloads():
        times = []
        results = []
        for _, mod in impls:
            f = getattr(mod, fn)
            results.append(f(*fargs))
            times.append(min(timeit.repeat(lambda: f(*fargs), number=1, repeat=args.repeat)))
        if fn == "sumset" or fn == "minimal_rows":
            results = [sorted(r) for r in results]
        assert all(r == results[0] for r in results), f"backends disagree on {label}"
        row = f"{label:34s} " + " ".join(f"{t * 1e3:8.2f}ms" for t in times)
        if len(times) == 2:
            row += f"   {times[0] / times[1]:6.1f}x"
        print(row)

    n, d = args.census
    py = census_time(n, d, pure=True)
    row = f"{f'census n={n} d={d} (end to end)':34s} {py * 1e3:8.1f}ms"
    if _ckernels is not None:
        cy = census_time(n, d, pure=False)
        row += f" {cy * 1e3:8.1f}ms   {py / cy:6.1f}x"
    print(row)


if __name__ == "__main__":
    main()
