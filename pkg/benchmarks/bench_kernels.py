"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--reps 20] [--json]

Each row is one kernel at one size; ``speedup`` is python / cython median time.
Both backends are checked for identical output before timing.
"""

import argparse
import json
import statistics
import timeit

import numpy as np

from lbdt import kernels


def cases(rng):
    for B, C, H in ((8, 16, 32), (8, 64, 16), (8, 64, 4)):
        x = rng.normal(size=(B, C, H, H)).astype(np.float32)
        for stride in (1, 2):
            label = f"{B}x{C}x{H}x{H}/s{stride}"
            yield "im2col3x3", label, (x, stride)
            cols = kernels.backend("python").im2col3x3(x, stride)
            yield "col2im3x3", label, (cols, C, H, H, stride)
    for side in (64, 256):
        a = (rng.random((side, side)) > 0.5).astype(np.uint8)
        b = (rng.random((side, side)) > 0.5).astype(np.uint8)
        yield "boundary_match", f"{side}x{side}/r2", (a, b, 2)


def median_ms(fn, reps):
    times = timeit.repeat(fn, number=1, repeat=reps)
    return statistics.median(times) * 1e3


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=20)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        raise SystemExit("compiled kernels are not built; run: pip install -e . --no-build-isolation")
    py, cy = kernels.backend("python"), kernels.backend("cython")
    rows = []
    for name, label, inputs in cases(np.random.default_rng(0)):
        f_py, f_cy = getattr(py, name), getattr(cy, name)
        if not np.array_equal(np.asarray(f_py(*inputs)), np.asarray(f_cy(*inputs))):
            raise SystemExit(f"{name} {label}: backends disagree")
        t_py = median_ms(lambda: f_py(*inputs), args.reps)
        t_cy = median_ms(lambda: f_cy(*inputs), args.reps)
        rows.append({"kernel": name, "size": label, "python_ms": t_py, "cython_ms": t_cy, "speedup": t_py / t_cy})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print("kernel\tsize\tpython_ms\tcython_ms\tspeedup")
    for r in rows:
        print(f"{r['kernel']}\t{r['size']}\t{r['python_ms']:.3f}\t{r['cython_ms']:.3f}\t{r['speedup']:.2f}")


if __name__ == "__main__":
    main()
