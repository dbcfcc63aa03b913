"""Time the census and structure kernels on both backends.

    python3 benchmarks/bench_census.py --n 9 --k 10 --repeat 3
"""

import argparse
import time
from math import factorial

from cdspile.kernels import compiled_backend, python_backend


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--n", type=int, default=9, help="census over S_n")
    parser.add_argument("--k", type=int, default=9, help="structure census over (k-1)! pair lists")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("python", python_backend)]
    if compiled_backend is not None:
        backends.append(("cython", compiled_backend))
    else:
        print("compiled extension not available; timing the fallback only")

    total = factorial(args.n)
    jobs = [
        (f"census S_{args.n} ({total} perms)", lambda b: b.census_chunk(args.n, 0, total)),
        (f"structure census k={args.k}", lambda b: b.structure_census(args.k)),
    ]
    for label, job in jobs:
        results = {}
        print(label)
        for name, backend in backends:
            secs, out = best_of(lambda: job(backend), args.repeat)
            results[name] = (secs, out)
            print(f"  {name:<7} {secs:9.4f} s")
        if len(results) == 2:
            (tp, op), (tc, oc) = results["python"], results["cython"]
            assert op == oc, "backends disagree"
            print(f"  speedup {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
