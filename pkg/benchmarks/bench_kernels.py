"""Compiled vs pure-Python timings for the mod-p polynomial kernels.

    python benchmarks/bench_kernels.py [--p 101] [--deg 200] [--repeat 5]

Also times the full cubic fiber certificate under each backend (the
pure-Python run happens in a child process with MULSPEC_PURE_PYTHON=1).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from mulspec.algebra import _pykernels as py
from mulspec.algebra import kernels


def _rand(rng, n, p):
    v = [rng.randrange(p) for _ in range(n)]
    v[-1] = v[-1] or 1
    return v


def bench_ops(p, deg, repeat):
    if kernels.c is None:
        print("compiled kernels not available; only the Python backend is timed")
    rng = random.Random(0)
    a, b = _rand(rng, deg + 1, p), _rand(rng, deg + 1, p)
    m = _rand(rng, deg // 2 + 1, p)
    cases = {
        "mul": lambda mod: mod.mul(a, b, p),
        "divmod": lambda mod: mod.divmod_(mod.mul(a, b, p), m, p),
        "powmod x^p^2": lambda mod: mod.powmod([0, 1], p * p, m, p),
    }
    print(f"{'kernel':<14}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, fn in cases.items():
        tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=repeat)) * 1e3
        if kernels.c is not None:
            assert fn(py) == fn(kernels.c)
            tc = min(timeit.repeat(lambda: fn(kernels.c), number=1, repeat=repeat)) * 1e3
            print(f"{name:<14}{tp:>14.2f}{tc:>14.2f}{tp / tc:>10.1f}")
        else:
            print(f"{name:<14}{tp:>14.2f}{'-':>14}{'-':>10}")


_FIBER = ("import time; from mulspec import ffverify; t = time.perf_counter(); "
          "ffverify.injectivity_report(); print(time.perf_counter() - t)")


def bench_fiber():
    for label, pure in (("cython", "0"), ("python", "1")):
        env = dict(os.environ, MULSPEC_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", _FIBER], env=env, capture_output=True,
                             text=True, check=True)
        print(f"cubic fiber certificate ({label} kernels): {float(out.stdout):.2f} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=101)
    ap.add_argument("--deg", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-fiber", action="store_true")
    args = ap.parse_args()
    bench_ops(args.p, args.deg, args.repeat)
    if not args.skip_fiber:
        bench_fiber()


if __name__ == "__main__":
    main()
