"""Time the numba kernels against their numpy twins.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Both paths run in the same process through the ``use_numba`` override, and
every timed pair is checked for identical output before it is reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from unitcyclo import _kernels as K
from unitcyclo import iepoly as ie

CASES = [(9, 11, 16384), (13, 17, 2003), (31, 37, 401)]


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    # compile once outside the timed region
    warm = ie.make_triple(3, 5, 7)
    for flag in (True, False):
        ie.coeff_vector(warm)
        K.point_query(np.arange(10), 3, 5, 7, warm.u, warm.v, warm.f_deg, use_numba=flag)
        K.block_query(*ie.block_representatives(ie.make_triple(3, 5, 17)), 3, 5, 2, 2, 4, use_numba=flag)

    print(f"{'kernel':<22}{'triple':<20}{'numba s':>10}{'numpy s':>10}{'ratio':>8}")
    rng = np.random.default_rng(0)
    for elems in CASES:
        t = ie.make_triple(*elems)
        p, q, r = t.elements
        chi = K.lattice_indicator(q * r, p * r, p * q, t.f_deg)
        ms = rng.integers(0, t.f_deg + 1, size=200_000)
        ks, ss = ie.block_representatives(t)
        kernels = {
            "lattice_indicator": lambda flag: K.lattice_indicator(q * r, p * r, p * q, t.f_deg, use_numba=flag),
            "coeffs_from_indicator": lambda flag: K.coeffs_from_indicator(chi, p, q, r, use_numba=flag),
            "divide_binomial": lambda flag: K.divide_binomial(chi.astype(np.int64), p, use_numba=flag),
            "point_query": lambda flag: K.point_query(ms, p, q, r, t.u, t.v, t.f_deg, use_numba=flag),
            "block_query": lambda flag: K.block_query(ks, ss, p, q, r % (p * q), t.u, t.v, use_numba=flag),
        }
        for name, fn in kernels.items():
            t_nb, out_nb = best_of(lambda: fn(True), args.repeat)
            t_np, out_np = best_of(lambda: fn(False), args.repeat)
            if not _same(out_nb, out_np):
                raise SystemExit(f"{name} disagrees between backends on {elems}")
            print(f"{name:<22}{str(elems):<20}{t_nb:>10.4f}{t_np:>10.4f}{t_np / t_nb:>8.1f}")


if __name__ == "__main__":
    main()
