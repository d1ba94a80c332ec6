"""Time the compiled kernels against their pure-Python twins.

Usage: python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Every case is run once per backend on identical inputs.  Results are compared
for equality before any timing is reported, so a speedup on a wrong answer
cannot slip through.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from ricbound import kernels
from ricbound.curvature import curvature_oracle, ollivier_curvature
from ricbound.families import (
    gen_erdos_renyi_connected,
    gen_gosset,
    gen_halved_cube,
    gen_hypercube,
    gen_johnson,
)
from ricbound.metrics import all_pairs


def _bfs_case(graph):
    return lambda backend: all_pairs(graph, backend=backend).dist


def _lp_case(graph, support, edges):
    data = all_pairs(graph)
    chosen = graph.edges[:edges]
    return lambda backend: [ollivier_curvature(graph, e, data, support=support, backend=backend) for e in chosen]


def _oracle_case(graph, edges):
    data = all_pairs(graph)
    chosen = graph.edges[:edges]
    return lambda backend: [curvature_oracle(graph, e, data, backend=backend) for e in chosen]


def cases(quick: bool):
    scale = 1 if quick else 4
    n_random = 100 if quick else 300
    return [
        ("bfs  all-pairs, Gosset (56 vertices)", _bfs_case(gen_gosset())),
        (f"bfs  all-pairs, random G({n_random}, 0.05)", _bfs_case(gen_erdos_renyi_connected(n_random, 0.05, 1))),
        ("lp   core support, Gosset", _lp_case(gen_gosset(), "core", 10 * scale)),
        ("lp   ball support, Gosset", _lp_case(gen_gosset(), "ball", 3 * scale)),
        ("lp   full support, J(6,3)", _lp_case(gen_johnson(6, 3), "full", 5 * scale)),
        ("oracle, Q4", _oracle_case(gen_hypercube(4), 8 * scale)),
        ("oracle, half-cube of Q5", _oracle_case(gen_halved_cube(5), 2 * scale)),
    ]


def _time(fn, backend, repeat):
    samples = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(backend)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), result


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="smaller inputs, for smoke runs")
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the Python backend can be timed", file=sys.stderr)
    print(f"{'case':42s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for label, fn in cases(args.quick):
        timings, results = {}, {}
        for b in backends:
            timings[b], results[b] = _time(fn, b, args.repeat)
        if len({repr(r) for r in results.values()}) != 1:
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        row = f"{label:42s}" + "".join(f"{timings[b] * 1e3:10.1f}ms" for b in backends)
        if len(backends) > 1:
            row += f"{timings['python'] / timings['cython']:11.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
