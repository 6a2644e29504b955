"""Dense-array kernels behind the coefficient engines.

Each kernel exists twice: a numba ``@njit`` loop and a vectorized numpy
version. The numba path is used unless ``UNITCYCLO_NO_NUMBA=1`` is set or
numba cannot be imported. Both paths are exact integer code and must agree
bit for bit; ``benchmarks/bench_kernels.py`` times one against the other.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA and os.environ.get("UNITCYCLO_NO_NUMBA", "") not in ("1", "true", "yes")

# |intermediate| bound for the int64 division chain
_DIVISION_GUARD = 1 << 52


# ---------------------------------------------------------------------------
# lattice indicator: chi[n] = 1 iff n = i*b*c + j*a*c + k*a*b, i<a, j<b, k<c


def _lattice_indicator_np(a: int, b: int, c: int, limit: int) -> np.ndarray:
    chi = np.zeros(limit + 1, dtype=np.uint8)
    ab, ac, bc = a * b, a * c, b * c
    for i in range(a):
        base_i = i * bc
        if base_i > limit:
            break
        j = np.arange(b, dtype=np.int64)
        bases = base_i + j * ac
        bases = bases[bases <= limit]
        for base in bases.tolist():
            stop = min(base + c * ab, limit + 1)
            chi[base:stop:ab] = 1
    return chi


def _lattice_indicator_nb_impl(a, b, c, limit):
    chi = np.zeros(limit + 1, dtype=np.uint8)
    ab = a * b
    ac = a * c
    bc = b * c
    for i in range(a):
        base_i = i * bc
        if base_i > limit:
            break
        for j in range(b):
            base = base_i + j * ac
            if base > limit:
                break
            n = base
            for _ in range(c):
                if n > limit:
                    break
                chi[n] = 1
                n += ab
    return chi


# ---------------------------------------------------------------------------
# coefficients from the indicator: window sum of width p, then the
# (1 - x^q - x^r + x^(q+r)) factor


def _coeffs_from_indicator_np(chi: np.ndarray, p: int, q: int, r: int) -> np.ndarray:
    n = chi.shape[0]
    csum = np.cumsum(chi, dtype=np.int64)
    window = csum.copy()
    window[p:] -= csum[:-p]
    out = window.copy()
    out[q:] -= window[: n - q]
    out[r:] -= window[: n - r]
    if q + r < n:
        out[q + r :] += window[: n - q - r]
    return out.astype(np.int32)


def _coeffs_from_indicator_nb_impl(chi, p, q, r):
    n = chi.shape[0]
    window = np.zeros(n, dtype=np.int64)
    run = 0
    for m in range(n):
        run += chi[m]
        if m >= p:
            run -= chi[m - p]
        window[m] = run
    out = np.empty(n, dtype=np.int32)
    for m in range(n):
        s = window[m]
        if m >= q:
            s -= window[m - q]
        if m >= r:
            s -= window[m - r]
        if m >= q + r:
            s += window[m - q - r]
        out[m] = s
    return out


# ---------------------------------------------------------------------------
# exact division by x^d - 1; returns (quotient, exact, max_abs)


def _divide_binomial_np(poly: np.ndarray, d: int):
    n = poly.shape[0]
    rows = -(-n // d)
    padded = np.zeros(rows * d, dtype=np.int64)
    padded[:n] = -poly
    acc = np.cumsum(padded.reshape(rows, d), axis=0).reshape(-1)[:n]
    split = max(n - d, 0)
    quotient = acc[:split].copy()
    exact = not np.any(acc[split:])
    max_abs = int(np.abs(quotient).max()) if quotient.size else 0
    return quotient, exact, max_abs


def _divide_binomial_nb_impl(poly, d):
    n = poly.shape[0]
    acc = np.empty(n, dtype=np.int64)
    max_abs = 0
    for k in range(n):
        v = -poly[k]
        if k >= d:
            v += acc[k - d]
        acc[k] = v
        if k < n - d:
            a = v if v >= 0 else -v
            if a > max_abs:
                max_abs = a
    split = max(n - d, 0)
    exact = True
    for k in range(split, n):
        if acc[k] != 0:
            exact = False
            break
    return acc[:split].copy(), exact, max_abs


# ---------------------------------------------------------------------------
# batched point queries a_m via window sums of the Lemma-2 indicator


def _chi_np(n: np.ndarray, p: int, q: int, r: int, u: int, v: int, f_deg: int) -> np.ndarray:
    x = (n % p) * u % p
    y = (n % q) * v % q
    fval = x * q + y * p
    ok = (n >= 0) & (n <= f_deg) & (fval <= n // r)
    return ok.astype(np.int64)


def _point_query_np(ms: np.ndarray, p: int, q: int, r: int, u: int, v: int, f_deg: int) -> np.ndarray:
    ms = np.asarray(ms, dtype=np.int64)
    offsets = np.arange(p, dtype=np.int64)
    out = np.zeros(ms.shape[0], dtype=np.int64)
    for shift, sign in ((0, 1), (q, -1), (r, -1), (q + r, 1)):
        top = ms - shift
        n = top[:, None] - offsets[None, :]
        out += sign * _chi_np(n, p, q, r, u, v, f_deg).sum(axis=1)
    return out


def _point_query_nb_impl(ms, p, q, r, u, v, f_deg):
    out = np.zeros(ms.shape[0], dtype=np.int64)
    for idx in range(ms.shape[0]):
        m = ms[idx]
        total = 0
        for t in range(4):
            if t == 0:
                shift, sign = 0, 1
            elif t == 1:
                shift, sign = q, -1
            elif t == 2:
                shift, sign = r, -1
            else:
                shift, sign = q + r, 1
            top = m - shift
            s = 0
            for k in range(p):
                n = top - k
                if n < 0 or n > f_deg:
                    continue
                x = (n % p) * u % p
                y = (n % q) * v % q
                if x * q + y * p <= n // r:
                    s += 1
            total += sign * s
        out[idx] = total
    return out


# ---------------------------------------------------------------------------
# block-reduced point queries: index m = K*r + s with 0 <= s < r, r huge.
# Only r mod pq is needed; floor(n/r) = K' + (s' < 0 ? -1 : 0) while |s'| < r.


def _block_query_np(ks: np.ndarray, ss: np.ndarray, p: int, q: int, r_mod: int, u: int, v: int) -> np.ndarray:
    pq = p * q
    offsets = np.arange(p, dtype=np.int64)
    out = np.zeros(ks.shape[0], dtype=np.int64)
    for dk, ds, sign in ((0, 0, 1), (0, q, -1), (1, 0, -1), (1, q, 1)):
        k = (ks - dk)[:, None]
        s = (ss - ds)[:, None] - offsets[None, :]
        floor = k - (s < 0)
        res = (k % pq * r_mod + s) % pq
        fval = (res % p * u % p) * q + (res % q * v % q) * p
        out += sign * ((floor >= 0) & (fval <= floor)).sum(axis=1)
    return out


def _block_query_nb_impl(ks, ss, p, q, r_mod, u, v):
    pq = p * q
    out = np.zeros(ks.shape[0], dtype=np.int64)
    for idx in range(ks.shape[0]):
        total = 0
        for t in range(4):
            dk = 1 if t >= 2 else 0
            ds = q if (t == 1 or t == 3) else 0
            sign = 1 if (t == 0 or t == 3) else -1
            k = ks[idx] - dk
            acc = 0
            for off in range(p):
                s = ss[idx] - ds - off
                floor = k - 1 if s < 0 else k
                if floor < 0:
                    continue
                res = ((k % pq) * r_mod + s) % pq
                fval = ((res % p) * u % p) * q + ((res % q) * v % q) * p
                if fval <= floor:
                    acc += 1
            total += sign * acc
        out[idx] = total
    return out


if _HAVE_NUMBA:
    _block_query_nb = njit(cache=True)(_block_query_nb_impl)
    _lattice_indicator_nb = njit(cache=True)(_lattice_indicator_nb_impl)
    _coeffs_from_indicator_nb = njit(cache=True)(_coeffs_from_indicator_nb_impl)
    _divide_binomial_nb = njit(cache=True)(_divide_binomial_nb_impl)
    _point_query_nb = njit(cache=True)(_point_query_nb_impl)


def lattice_indicator(a: int, b: int, c: int, limit: int, *, use_numba: bool | None = None) -> np.ndarray:
    if use_numba if use_numba is not None else USE_NUMBA:
        return _lattice_indicator_nb(a, b, c, limit)
    return _lattice_indicator_np(a, b, c, limit)


def coeffs_from_indicator(chi: np.ndarray, p: int, q: int, r: int, *, use_numba: bool | None = None) -> np.ndarray:
    if use_numba if use_numba is not None else USE_NUMBA:
        return _coeffs_from_indicator_nb(chi, p, q, r)
    return _coeffs_from_indicator_np(chi, p, q, r)


def divide_binomial(poly: np.ndarray, d: int, *, use_numba: bool | None = None):
    """Divide an int64 coefficient array by ``x**d - 1``.

    Returns ``(quotient, exact, max_abs)``; ``exact`` is False when the
    remainder is nonzero.
    """
    if use_numba if use_numba is not None else USE_NUMBA:
        quotient, exact, max_abs = _divide_binomial_nb(poly, d)
    else:
        quotient, exact, max_abs = _divide_binomial_np(poly, d)
    if max_abs > _DIVISION_GUARD:
        raise OverflowError(f"intermediate coefficient {max_abs} exceeds the int64 guard")
    return quotient, bool(exact), int(max_abs)


def block_query(ks: np.ndarray, ss: np.ndarray, p: int, q: int, r_mod: int, u: int, v: int, *, use_numba: bool | None = None) -> np.ndarray:
    """Coefficients at ``m = K*r + s`` from (K, s) pairs and ``r mod pq`` alone."""
    ks = np.ascontiguousarray(ks, dtype=np.int64)
    ss = np.ascontiguousarray(ss, dtype=np.int64)
    if use_numba if use_numba is not None else USE_NUMBA:
        return _block_query_nb(ks, ss, p, q, r_mod, u, v)
    return _block_query_np(ks, ss, p, q, r_mod, u, v)


def point_query(ms: np.ndarray, p: int, q: int, r: int, u: int, v: int, f_deg: int, *, use_numba: bool | None = None) -> np.ndarray:
    ms = np.ascontiguousarray(ms, dtype=np.int64)
    if use_numba if use_numba is not None else USE_NUMBA:
        return _point_query_nb(ms, p, q, r, u, v, f_deg)
    return _point_query_np(ms, p, q, r, u, v, f_deg)
