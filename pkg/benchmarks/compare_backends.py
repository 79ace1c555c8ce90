#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the exhaustive scan and the information-set search on mid-size codes.
The first numba call per kernel includes JIT compilation; a warm-up pass is
run first so the table reports steady-state times.

Usage: python benchmarks/compare_backends.py
"""

import time

from toricode.codes import build_code
from toricode.gf import make_field
from toricode.kernels import available_backends
from toricode.mindist import min_distance_exhaustive, min_distance_isd
from toricode.polytopes import box, from_vertices, standard_simplex

TRIANGLE = [(1, 0), (0, 3), (3, 1)]
EX4 = [(0, 3, 0), (1, 0, 0), (3, 1, 0), (1, 1, 2), (2, 3, 3)]


def bench(label, fn, backends):
    rows = []
    results = {}
    for backend in backends:
        t0 = time.perf_counter()
        result = fn(backend)
        dt = time.perf_counter() - t0
        rows.append((backend, dt))
        results[backend] = result.d
    assert len(set(results.values())) == 1, f"backends disagree on {label}: {results}"
    base = dict(rows).get("numpy")
    print(f"{label}  (d = {results[rows[0][0]]})")
    for backend, dt in rows:
        speedup = f"  {base / dt:6.1f}x vs numpy" if base and backend != "numpy" else ""
        print(f"  {backend:6s} {dt:8.3f}s{speedup}")
    print()


def main():
    backends = available_backends()
    print(f"backends: {', '.join(backends)}\n")

    f5 = make_field(5)
    f7 = make_field(7)
    f8 = make_field(2, 3)

    # warm-up: compile both kernels on a tiny instance
    tiny = build_code(standard_simplex(2), f5)
    for b in backends:
        min_distance_exhaustive(tiny, backend=b)
        min_distance_isd(tiny, backend=b)

    # exhaustive: 960k normalized messages of length 216
    cube7 = build_code(box([1, 1, 1]), f7)
    bench(
        "exhaustive, unit cube over GF(7) [N=216, k=8]",
        lambda b: min_distance_exhaustive(cube7, backend=b),
        backends,
    )

    # exhaustive: 37k messages of length 49
    tri8 = build_code(from_vertices(2, TRIANGLE), f8)
    bench(
        "exhaustive, triangle over GF(8) [N=49, k=6]",
        lambda b: min_distance_exhaustive(tri8, backend=b),
        backends,
    )

    # information-set search: ~9M messages of length 64
    ex4 = build_code(from_vertices(3, EX4), f5)
    bench(
        "isd, Example-4 polytope over GF(5) [N=64, k=13]",
        lambda b: min_distance_isd(ex4, backend=b),
        backends,
    )


if __name__ == "__main__":
    main()
