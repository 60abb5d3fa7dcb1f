#!/usr/bin/env python3
"""Benchmark the compiled convolution kernels against the pure-Python ones.

Three workloads:
  small   dense series whose coefficients fit the int64 fast path
  big     dense series with partition-sized coefficients (object path)
  expand  an end-to-end identity verification through the evaluator

Run after building the extension (pip install -e . --no-build-isolation):

    python benchmarks/compare_kernels.py [--order N] [--json]
"""

import argparse
import json
import random
import time

from qdissect import _kernels, _kernels_py

try:
    from qdissect import _speedups
except ImportError:
    _speedups = None


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_conv(n, big):
    rng = random.Random(12345)
    hi = 10**40 if big else 10**6
    a = [rng.randrange(-hi, hi) for _ in range(n)]
    b = [rng.randrange(-hi, hi) for _ in range(n)]
    rows = {}
    rows["python"] = timeit(lambda: _kernels_py.conv(a, b, n))
    if _speedups is not None:
        if big:
            rows["cython"] = timeit(lambda: _speedups.conv_obj(a, b, n))
        else:
            from array import array

            aa, bb = array("q", a), array("q", b)
            rows["cython"] = timeit(lambda: _speedups.conv_i64(aa, bb, n))
        assert _kernels.conv(a, b, n) == _kernels_py.conv(a, b, n)
    return rows


def bench_expand(order):
    import os
    import subprocess
    import sys

    code = (
        "import time; from qdissect.registry import load_registry, verify_by_id\n"
        "t0=time.perf_counter(); reg=load_registry();\n"
        f"assert verify_by_id(reg, 'gh-quartic-plus', order={order}).passed\n"
        "print(time.perf_counter()-t0)"
    )
    rows = {}
    for label, env_extra in (("cython", {}), ("python", {"QDISSECT_PURE_PYTHON": "1"})):
        if label == "cython" and _speedups is None:
            continue
        env = dict(os.environ, **env_extra)
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        rows[label] = float(out.stdout.strip())
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=1200)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    results = {
        "backend_available": _speedups is not None,
        "small_coeff_conv": bench_conv(args.order, big=False),
        "big_coeff_conv": bench_conv(max(args.order // 2, 100), big=True),
        "identity_verify": bench_expand(min(args.order, 600)),
    }
    if args.json:
        print(json.dumps(results, indent=1))
        return
    print(f"compiled extension available: {results['backend_available']}")
    for name in ("small_coeff_conv", "big_coeff_conv", "identity_verify"):
        rows = results[name]
        print(f"\n{name}:")
        for label, t in rows.items():
            print(f"  {label:8s} {t * 1000:10.2f} ms")
        if "cython" in rows and "python" in rows and rows["cython"] > 0:
            print(f"  speedup  {rows['python'] / rows['cython']:10.1f}x")


if __name__ == "__main__":
    main()
