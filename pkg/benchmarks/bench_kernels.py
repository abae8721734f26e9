"""Compare the compiled kernels with the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--ell-max 256] [--repeat 3]

Times ring synthesis (values and covariant derivatives), ring analysis and
derivative evaluation at selected pixels, and checks the two backends agree.
"""

import argparse
import time

import numpy as np

from stemsphere import _backend
from stemsphere.geometry import build_grid
from stemsphere.harmonics import analyze, columns_at_pixels, power_law_spectrum, ring_columns, sample_alm, synthesize
from stemsphere.stem import detection_grid, find_maxima


def _best(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def _cases(ell_max):
    rng = np.random.default_rng(0)
    alm = sample_alm(power_law_spectrum(3.0, ell_max, band_limited=True), ell_max, rng)
    gauss = build_grid(ell_max)
    fine = detection_grid(ell_max)
    cols = ring_columns(alm, fine, deriv_order=2)
    f = synthesize(alm, fine).f
    pix = find_maxima(f, fine)
    maps = synthesize(alm, gauss, deriv_order=2)
    return {
        "synthesize f (gauss)": lambda b: synthesize(alm, gauss, backend=b).f,
        "synthesize f+grad+hess (gauss)": lambda b: synthesize(alm, gauss, deriv_order=2, backend=b).hess,
        "analyze (gauss)": lambda b: analyze(maps, gauss, backend=b).coefficients,
        "hessian at maxima (3x grid)": lambda b: columns_at_pixels(cols, fine, pix, backend=b)[2],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ell-max", type=int, default=256)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    names = _backend.available()
    if "cython" not in names:
        print("compiled kernels not built; only the fallback is available")
    print(f"ell_max = {args.ell_max}, best of {args.repeat}")
    print(f"{'operation':34s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}{'max diff':>12s}")
    for label, fn in _cases(args.ell_max).items():
        times, outs = {}, {}
        for n in names:
            times[n], outs[n] = _best(lambda: fn(n), args.repeat)
        line = f"{label:34s}" + "".join(f"{times[n]:11.3f}s" for n in names)
        if len(names) == 2:
            diff = float(np.max(np.abs(np.asarray(outs["cython"]) - np.asarray(outs["python"]))))
            line += f"{times['python'] / times['cython']:9.1f}x{diff:12.1e}"
        print(line)


if __name__ == "__main__":
    main()
