"""Compare the compiled and pure-Python class-merging kernels.

    python3 benchmarks/bench_kernels.py [--sides 100 160 226 320] [--repeats 3]

Prints one row per grid size and backend with the best wall time of
``compute_apc`` and the ratio of python to compiled time.
"""
import argparse
import time

from parflex._accel import KERNELS
from parflex.apc import compute_apc
from parflex.core import Graph
from parflex.tilings import square_patch


def best_time(graph, backend, repeats):
    best = float("inf")
    for _ in range(repeats):
        g = Graph(graph.edges, vertices=graph.vertices)
        start = time.perf_counter()
        compute_apc(g, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sides", type=int, nargs="+", default=[100, 160, 226, 320])
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    backends = [b for b in ("compiled", "python") if b in KERNELS]
    print(f"{'side':>6} {'edges':>8} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for side in args.sides:
        g = square_patch(side, side).graph
        times = {b: best_time(g, b, args.repeats) for b in backends}
        row = f"{side:>6} {g.m:>8} " + " ".join(f"{times[b]:>9.3f}s" for b in backends)
        if len(backends) == 2:
            row += f"   {times['python'] / times['compiled']:6.1f}x"
        print(row, flush=True)


if __name__ == "__main__":
    main()
