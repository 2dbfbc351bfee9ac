"""Time the compiled and pure-Python GF(2) elimination kernels side by side.

    python benchmarks/bench_gf2.py [--sizes 16,32,64,128] [--repeats 5] [--seed 0]

Both kernels get the same random square matrices; their outputs are
checked for equality before any timing is reported.
"""

import argparse
import random
import sys
import time

from zxkit import _gf2_py

try:
    from zxkit import _gf2
except ImportError:
    _gf2 = None


def random_matrix(n: int, rng: random.Random):
    return [[rng.randrange(2) for _ in range(n)] for _ in range(n)]


def best_time(fn, m, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(m)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="16,32,64,128,256")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    if _gf2 is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1
    rng = random.Random(args.seed)
    print(f"{'n':>5} {'python_s':>10} {'cython_s':>10} {'speedup':>8}")
    for n in (int(x) for x in args.sizes.split(",")):
        m = random_matrix(n, rng)
        ops_c, red_c = _gf2.gauss(m)
        ops_p, red_p = _gf2_py.gauss(m)
        if [tuple(map(int, o)) for o in ops_c] != ops_p or [list(map(int, r)) for r in red_c] != red_p:
            print(f"kernels disagree on a {n}x{n} matrix", file=sys.stderr)
            return 1
        tp = best_time(_gf2_py.gauss, m, args.repeats)
        tc = best_time(_gf2.gauss, m, args.repeats)
        print(f"{n:>5} {tp:>10.5f} {tc:>10.5f} {tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
