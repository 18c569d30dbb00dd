"""Compare the compiled and pure-Python exact kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Workloads: products and reductions of the Dirac-type operators that dominate
the identity suite, plus dense random integer matrices.
"""

import argparse
import random
import timeit

from cubicdirac import _kernels_py
from cubicdirac.dirac import dirac_complex
from cubicdirac.lie import parabolic_split
from cubicdirac.representations import build_irrep

try:
    from cubicdirac import _kernels
except ImportError:
    _kernels = None


def workloads():
    cx = dirac_complex(build_irrep(3, (1, 1)), parabolic_split(3, "1+1+1"))
    D = cx.D
    num, cols = D.numerators(), D.cols
    yield "D @ D, sl3 Borel adjoint (64x64)", "matmul", (num, num, cols)
    yield "rref D, sl3 Borel adjoint (64x64)", "rref_den", (num, cols)
    rng = random.Random(0)
    dense = [[rng.randint(-50, 50) for _ in range(60)] for _ in range(60)]
    yield "matmul dense random 60x60", "matmul", (dense, dense, 60)
    yield "rref dense random 60x60 (bigint growth)", "rref_den", (dense, 60)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; only the pure-Python timings are shown")
    print(f"{'workload':44s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn, fargs in workloads():
        py = min(timeit.repeat(lambda: getattr(_kernels_py, fn)(*fargs),
                               number=1, repeat=args.repeat)) * 1e3
        if _kernels is not None:
            assert getattr(_kernels, fn)(*fargs) == getattr(_kernels_py, fn)(*fargs)
            cy = min(timeit.repeat(lambda: getattr(_kernels, fn)(*fargs),
                                   number=1, repeat=args.repeat)) * 1e3
            print(f"{name:44s} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")
        else:
            print(f"{name:44s} {py:10.2f} {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
