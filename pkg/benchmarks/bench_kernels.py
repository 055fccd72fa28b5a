"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]

Every workload is run on each available backend; results are checked to be
identical before timings are printed.
"""

import argparse
import time

from arbcount import constructions as C
from arbcount import kernels
from arbcount.graphs import laplacian, skew_adjacency
from arbcount.search import extremal_eulerian


def _det_workload():
    mats = [laplacian(C.random_digraph(12, 0.5, s)).rows for s in range(200)]
    return lambda: [kernels.det(m) for m in mats]


def _minor_sum_workload():
    mats = [laplacian(C.random_tournament(15, s)).rows for s in range(40)]
    return lambda: [kernels.rooted_minor_sum(m) for m in mats]


def _skew4_workload():
    mats = [skew_adjacency(C.random_tournament(14, s)).rows for s in range(10)]
    return lambda: [sorted(kernels.skew4_det_counts(m).items()) for m in mats]


def _search_workload():
    G = C.complete_graph(7)
    return lambda: extremal_eulerian(G, "min-arb", iso_dedup=False, jobs=1).value


WORKLOADS = {
    "det 12x12 x200": _det_workload,
    "rooted minor sum n=15 x40": _minor_sum_workload,
    "skew 4-minors n=14 x10": _skew4_workload,
    "Eulerian search K_7 (2640)": _search_workload,
}


def bench(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available_backends()
    old = kernels.get_backend()
    print(f"backends: {', '.join(backends)}")
    print(f"{'workload':32s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    try:
        for name, make in WORKLOADS.items():
            fn = make()
            times, results = [], []
            for b in backends:
                kernels.set_backend(b)
                t, r = bench(fn, args.repeat)
                times.append(t)
                results.append(r)
            if any(r != results[0] for r in results):
                raise SystemExit(f"{name}: backends disagree")
            row = f"{name:32s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
            if len(times) > 1:
                row += f"{times[0] / times[-1]:11.1f}x"
            print(row)
    finally:
        kernels.set_backend(old)


if __name__ == "__main__":
    main()
