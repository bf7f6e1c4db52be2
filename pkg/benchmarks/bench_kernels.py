"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from nestgraphs import _pycore, kernels
from nestgraphs.autgroup import search
from nestgraphs.bicirculant import NestParams, build


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        compiled = kernels.get_backend("compiled")
    except ImportError:
        print("compiled backend not built; only the fallback is timed")
        compiled = None

    graphs = [NestParams(28, 1, 6, 19, 13), NestParams(12, 1, 3, 10, 5), NestParams(156, 1, 34, 111, 77)]
    cases = [(f"sweep n={n} valence 6", lambda b, n=n: b.sweep(n, 4, 8)) for n in (30, 50)]
    cases += [(f"search N({p.n};{p.a},{p.b},{p.c};{p.k})", lambda b, g=build(p): search(g, b)) for p in graphs]

    print(f"{'case':34} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in cases:
        tp = best_of(lambda: fn(_pycore), args.repeat)
        if compiled is None:
            print(f"{name:34} {tp:10.4f}")
            continue
        tc = best_of(lambda: fn(compiled), args.repeat)
        print(f"{name:34} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
