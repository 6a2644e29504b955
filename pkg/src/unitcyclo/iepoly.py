"""Ternary inclusion-exclusion polynomials and their coefficients.

For pairwise coprime ``p, q, r > 2`` the quotient

    (x^pqr - 1)(x^p - 1)(x^q - 1)(x^r - 1)
    --------------------------------------
    (x^pq - 1)(x^qr - 1)(x^rp - 1)(x - 1)

is a polynomial of degree ``(p-1)(q-1)(r-1)``. Three ways to get at its
coefficients live here:

* ``coeff_vector(t, "oracle")`` divides the numerator by the denominator
  one binomial at a time and insists on a zero remainder;
* ``coeff_vector(t, "truncated")`` marks the nonnegative combinations
  ``i*qr + j*pr + k*pq`` and convolves with ``1 + x + ... + x^(p-1)`` and
  ``(1 - x^q)(1 - x^r)``, everything cut off above the degree;
* ``coeff_at(t, m)`` evaluates one coefficient from four window sums of the
  indicator ``chi``, costing O(p) big-int operations however large m is.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _kernels
from .modmath import lnr

__all__ = [
    "DEFAULT_MAX_CELLS",
    "TripleError",
    "ResourceCapError",
    "ConsistencyError",
    "Triple",
    "Representation",
    "CoeffResult",
    "make_triple",
    "decompose",
    "chi",
    "chi_by_delta",
    "f_val",
    "window_sum",
    "coeff_at",
    "coeff_at_many",
    "coeff_vector",
    "coeff_set",
    "coeff_set_blocks",
    "block_representatives",
    "block_cost",
    "parse_index",
    "coefficients_to_csv",
]

DEFAULT_MAX_CELLS = 10**8
_INT64_SAFE = 1 << 62


class TripleError(ValueError):
    """Invalid parameters for an inclusion-exclusion triple."""


class ResourceCapError(RuntimeError):
    """A dense computation would exceed the configured memory cap."""


class ConsistencyError(AssertionError):
    """An internal cross-check failed (engines disagree, remainder nonzero, ...)."""


@dataclass(frozen=True)
class Triple:
    """A pairwise coprime triple, stored sorted so that ``p < q < r``.

    ``u, v, w, delta1`` are the coordinates of 1 in the representation
    ``n = x*qr + y*pr + z*pq + delta*pqr``; ``r_star`` inverts r mod pq.
    """

    p: int
    q: int
    r: int
    u: int
    v: int
    w: int
    delta1: int
    r_star: int
    f_deg: int

    @property
    def elements(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def diameter_bound(self) -> int:
        return self.p


@dataclass(frozen=True)
class Representation:
    x: int
    y: int
    z: int
    delta: int


@dataclass
class CoeffResult:
    degree: int
    set_min: int
    set_max: int
    coefficients: np.ndarray | None = None

    @property
    def diameter(self) -> int:
        return self.set_max - self.set_min

    @property
    def values(self) -> list[int]:
        return list(range(self.set_min, self.set_max + 1))

    def summary(self, t: Triple) -> dict:
        return {
            "p": str(t.p),
            "q": str(t.q),
            "r": str(t.r),
            "degree": str(self.degree),
            "min": self.set_min,
            "max": self.set_max,
            "diameter": self.diameter,
        }


def make_triple(e1: int, e2: int, e3: int) -> Triple:
    elems = [int(e1), int(e2), int(e3)]
    for e in elems:
        if e <= 2:
            raise TripleError(f"element {e} must be > 2")
    for a, b in ((elems[0], elems[1]), (elems[0], elems[2]), (elems[1], elems[2])):
        if math.gcd(a, b) != 1:
            raise TripleError(f"elements {a} and {b} are not coprime (gcd {math.gcd(a, b)})")
    p, q, r = sorted(elems)
    u = pow(q * r, -1, p)
    v = pow(p * r, -1, q)
    w = pow(p * q, -1, r)
    delta1, rem = divmod(1 - u * q * r - v * p * r - w * p * q, p * q * r)
    assert rem == 0
    return Triple(
        p=p,
        q=q,
        r=r,
        u=u,
        v=v,
        w=w,
        delta1=delta1,
        r_star=pow(r, -1, p * q),
        f_deg=(p - 1) * (q - 1) * (r - 1),
    )


def parse_index(m: int | str) -> int:
    """Accept ints or decimal strings (any length) for coefficient indices."""
    if isinstance(m, int):
        return m
    from ._io import parse_int

    return parse_int(m)


def decompose(t: Triple, n: int) -> Representation:
    p, q, r = t.elements
    x = lnr(t.u * n, p)
    y = lnr(t.v * n, q)
    z = lnr(t.w * n, r)
    delta, rem = divmod(n - x * q * r - y * p * r - z * p * q, p * q * r)
    assert rem == 0
    return Representation(x, y, z, delta)


def chi_by_delta(t: Triple, n: int) -> int:
    return int(decompose(t, n).delta == 0)


def f_val(t: Triple, n: int) -> int:
    return lnr(t.u * n, t.p) * t.q + lnr(t.v * n, t.q) * t.p


def chi(t: Triple, n: int) -> int:
    """1 iff n is a nonnegative combination i*qr + j*pr + k*pq with i<p, j<q, k<r."""
    if n < 0:
        return 0
    if n <= t.f_deg:
        return int(f_val(t, n) <= n // t.r)
    return chi_by_delta(t, n)


def window_sum(t: Triple, m: int) -> int:
    """Sum of chi(n) over the p integers m-p < n <= m."""
    if m < 0:
        return 0
    p, q, r, u, v, f_deg = t.p, t.q, t.r, t.u, t.v, t.f_deg
    total = 0
    for n in range(max(m - p + 1, 0), m + 1):
        if n <= f_deg:
            if (u * n % p) * q + (v * n % q) * p <= n // r:
                total += 1
        else:
            total += chi_by_delta(t, n)
    return total


def coeff_at(t: Triple, m: int | str) -> int:
    m = parse_index(m)
    if not 0 <= m <= t.f_deg:
        raise IndexError(f"index {m} outside [0, {t.f_deg}]")
    return (
        window_sum(t, m)
        - window_sum(t, m - t.q)
        - window_sum(t, m - t.r)
        + window_sum(t, m - t.q - t.r)
    )


def _int64_safe(t: Triple) -> bool:
    return t.f_deg + t.p + t.q + t.r < _INT64_SAFE // max(t.p, t.q)


def coeff_at_many(t: Triple, ms) -> np.ndarray:
    """Vectorized ``coeff_at`` for machine-size triples."""
    if not _int64_safe(t):
        return np.array([coeff_at(t, int(m)) for m in ms], dtype=object)
    ms = np.asarray(ms, dtype=np.int64)
    if ms.size and (ms.min() < 0 or ms.max() > t.f_deg):
        raise IndexError(f"indices outside [0, {t.f_deg}]")
    return _kernels.point_query(ms, t.p, t.q, t.r, t.u, t.v, t.f_deg)


def _check_cap(cells: int, max_cells: int) -> None:
    if cells > max_cells:
        raise ResourceCapError(
            f"dense vector needs {cells} cells, cap is {max_cells}; use coeff_at for point queries"
        )


def _oracle_vector(t: Triple) -> np.ndarray:
    p, q, r = t.elements
    top = p * q * r + p + q + r
    numerator = np.zeros(top + 1, dtype=np.int64)
    # (x^pqr - 1)(x^p - 1)(x^q - 1)(x^r - 1), 16 monomials
    for e1, s1 in ((p * q * r, 1), (0, -1)):
        for e2, s2 in ((p, 1), (0, -1)):
            for e3, s3 in ((q, 1), (0, -1)):
                for e4, s4 in ((r, 1), (0, -1)):
                    numerator[e1 + e2 + e3 + e4] += s1 * s2 * s3 * s4
    poly = numerator
    for d in (1, p * q, q * r, r * p):
        poly, exact, _ = _kernels.divide_binomial(poly, d)
        if not exact:
            raise ConsistencyError(f"division by x^{d} - 1 left a remainder for {t.elements}")
    if poly.shape[0] != t.f_deg + 1:
        raise ConsistencyError("quotient has unexpected degree")
    if np.abs(poly).max() >= 1 << 31:
        raise ConsistencyError("coefficient exceeds int32")
    return poly.astype(np.int32)


def _truncated_vector(t: Triple) -> np.ndarray:
    p, q, r = t.elements
    indicator = _kernels.lattice_indicator(p, q, r, t.f_deg)
    return _kernels.coeffs_from_indicator(indicator, p, q, r)


Engine = Literal["oracle", "truncated"]


def coeff_vector(t: Triple, engine: Engine = "truncated", max_cells: int = DEFAULT_MAX_CELLS) -> CoeffResult:
    """All coefficients ``a_0 .. a_f`` as an int32 array."""
    if engine == "oracle":
        _check_cap(t.p * t.q * t.r + t.p + t.q + t.r + 1, max_cells)
        vec = _oracle_vector(t)
    elif engine == "truncated":
        _check_cap(t.f_deg + 1, max_cells)
        vec = _truncated_vector(t)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return CoeffResult(
        degree=t.f_deg,
        set_min=int(vec.min()),
        set_max=int(vec.max()),
        coefficients=vec,
    )


def block_representatives(t: Triple) -> tuple[np.ndarray, np.ndarray]:
    """Index pairs (K, s), m = K*r + s, whose coefficients exhaust the set.

    Write m = K*r + s with 0 <= s < r. Once s >= p + q - 1 every window in
    the four-term formula sits inside a single block, where floor(n/r) is
    constant and chi(n) depends only on n mod pq. So a_m is a function of
    (K, m mod pq) there, and pq consecutive s values per block cover it; the
    first p + q - 1 values of s in each block are taken individually.
    """
    p, q, r, pq = t.p, t.q, t.r, t.p * t.q
    if r <= p + q:
        raise ValueError("block reduction needs r > p + q")
    ks: list[np.ndarray] = []
    ss: list[np.ndarray] = []
    edge = p + q - 1
    for k in range(t.f_deg // r + 1):
        s_hi = min(r - 1, t.f_deg - k * r)
        if s_hi - edge + 1 > pq + edge:
            s = np.concatenate([np.arange(edge), np.arange(edge, edge + pq)])
        else:
            s = np.arange(s_hi + 1)
        ss.append(s.astype(np.int64))
        ks.append(np.full(s.shape[0], k, dtype=np.int64))
    return np.concatenate(ks), np.concatenate(ss)


def block_cost(t: Triple) -> int:
    return (t.f_deg // t.r + 1) * (t.p * t.q + 2 * (t.p + t.q))


def coeff_set_blocks(t: Triple) -> CoeffResult:
    """Exact coefficient set without a dense vector; cost independent of r."""
    ks, ss = block_representatives(t)
    vals = _kernels.block_query(ks, ss, t.p, t.q, t.r % (t.p * t.q), t.u, t.v)
    return _set_from_values(t, vals)


def _set_from_values(t: Triple, vals: np.ndarray) -> CoeffResult:
    present = np.unique(vals)
    lo, hi = int(present[0]), int(present[-1])
    if present.size != hi - lo + 1:
        missing = sorted(set(range(lo, hi + 1)) - set(present.tolist()))
        raise ConsistencyError(f"coefficient set of {t.elements} has gaps at {missing}")
    return CoeffResult(degree=t.f_deg, set_min=lo, set_max=hi)


def coeff_set(
    t: Triple,
    engine: Engine = "truncated",
    max_cells: int = DEFAULT_MAX_CELLS,
    method: Literal["auto", "dense", "blocks"] = "auto",
) -> CoeffResult:
    """Min, max and diameter of the coefficient set, checked for contiguity.

    ``method="auto"`` uses the dense vector when it fits under ``max_cells``
    and falls back to the block reduction otherwise.
    """
    if method == "auto":
        method = "dense" if t.f_deg + 1 <= max_cells else "blocks"
    if method == "blocks":
        if t.r <= t.p + t.q:
            raise ValueError("block reduction needs r > p + q")
        _check_cap(block_cost(t), max_cells)
        return coeff_set_blocks(t)
    res = coeff_vector(t, engine, max_cells)
    return _set_from_values(t, res.coefficients)


def coefficients_to_csv(vec: np.ndarray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "a_m"])
    writer.writerows(enumerate(vec.tolist()))
    return buf.getvalue()
