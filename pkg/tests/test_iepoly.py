from __future__ import annotations

import math
import random

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from unitcyclo import iepoly as ie


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _binom(d):
    return [-1] + [0] * (d - 1) + [1]


def _long_div(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // lead
        out[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    assert not any(num), "division left a remainder"
    return out


def naive_poly(p, q, r):
    """Plain list arithmetic; small triples only."""
    num = [1]
    for d in (p * q * r, p, q, r):
        num = _mul(num, _binom(d))
    den = [1]
    for d in (p * q, q * r, r * p, 1):
        den = _mul(den, _binom(d))
    return _long_div(num, den)


coprime_triples = (
    st.tuples(st.integers(3, 13), st.integers(3, 23), st.integers(3, 40))
    .filter(lambda t: math.gcd(t[0], t[1]) == math.gcd(t[1], t[2]) == math.gcd(t[0], t[2]) == 1)
    .filter(lambda t: len(set(t)) == 3)
)

PHI_105 = [1, 1, 1, 0, 0, -1, -1, -2, -1, -1, 0, 0, 1, 1, 1]


def test_make_triple_sorts_and_validates():
    t = ie.make_triple(7, 3, 5)
    assert t.elements == (3, 5, 7) and t.f_deg == 48
    for bad in ((2, 3, 5), (3, 6, 7), (3, 3, 5), (3, 5, 10**0)):
        with pytest.raises(ie.TripleError):
            ie.make_triple(*bad)


def test_phi_105():
    t = ie.make_triple(3, 5, 7)
    vec = ie.coeff_vector(t, "oracle").coefficients
    assert vec[:15].tolist() == PHI_105
    assert vec.tolist() == naive_poly(3, 5, 7)
    res = ie.coeff_set(t)
    assert (res.set_min, res.set_max) == (-2, 1)


@given(coprime_triples)
@settings(max_examples=60, deadline=None)
def test_engines_match_naive(tr):
    t = ie.make_triple(*tr)
    want = naive_poly(*t.elements)
    for engine in ("oracle", "truncated"):
        assert ie.coeff_vector(t, engine).coefficients.tolist() == want


@given(coprime_triples)
@settings(max_examples=80, deadline=None)
def test_structural_properties(tr):
    t = ie.make_triple(*tr)
    vec = ie.coeff_vector(t).coefficients
    assert len(vec) == t.f_deg + 1
    assert vec[0] == vec[-1] == 1
    assert int(vec.sum()) == 1  # value at x = 1 equals 1 for pairwise coprime parameters
    assert np.array_equal(vec, vec[::-1])
    res = ie.coeff_set(t)
    assert res.diameter <= t.p
    assert set(vec.tolist()) == set(range(res.set_min, res.set_max + 1))


@given(coprime_triples, st.integers(-(10**6), 10**6))
@settings(max_examples=300)
def test_representation_identities(tr, n):
    t = ie.make_triple(*tr)
    p, q, r = t.elements
    assert t.u * q * r + t.v * p * r + t.w * p * q + t.delta1 * p * q * r == 1
    rep = ie.decompose(t, n)
    assert rep.x * q * r + rep.y * p * r + rep.z * p * q + rep.delta * p * q * r == n
    assert 0 <= rep.x < p and 0 <= rep.y < q and 0 <= rep.z < r
    assert ie.f_val(t, r) == p * q + 1
    assert ie.f_val(t, -r) == p * q - 1
    assert (ie.f_val(t, n) - n * t.r_star) % (p * q) == 0
    xq, xr = ie.decompose(t, q).x, ie.decompose(t, r).x
    yp, yr = ie.decompose(t, p).y, ie.decompose(t, r).y
    assert t.u == xq * xr % p
    assert t.v == yp * yr % q


@given(coprime_triples)
@settings(max_examples=40, deadline=None)
def test_chi_fast_path_matches_delta(tr):
    t = ie.make_triple(*tr)
    for n in range(-5, t.f_deg + 1):
        assert ie.chi(t, n) == (ie.chi_by_delta(t, n) if n >= 0 else 0)


@given(coprime_triples, st.permutations([0, 1, 2]))
@settings(max_examples=40, deadline=None)
def test_chi_lemma2_any_labelling(tr, perm):
    # f(n) <= n // r characterizes chi for every assignment of roles
    a, b, c = (tr[i] for i in perm)
    t = ie.make_triple(a, b, c)
    for n in range(0, t.f_deg + 1, 7):
        x = n * pow(b * c, -1, a) % a
        y = n * pow(a * c, -1, b) % b
        assert (x * b + y * a <= n // c) == bool(ie.chi_by_delta(t, n))


@given(coprime_triples)
@settings(max_examples=40, deadline=None)
def test_point_queries_match_vector(tr):
    t = ie.make_triple(*tr)
    vec = ie.coeff_vector(t).coefficients
    ms = np.arange(t.f_deg + 1)
    assert np.array_equal(ie.coeff_at_many(t, ms), vec)
    for m in range(0, t.f_deg + 1, 5):
        assert ie.coeff_at(t, m) == vec[m]
        assert ie.coeff_at(t, str(m)) == vec[m]


def test_coeff_at_range_and_parse():
    t = ie.make_triple(3, 5, 7)
    with pytest.raises(IndexError):
        ie.coeff_at(t, 49)
    with pytest.raises(IndexError):
        ie.coeff_at(t, -1)
    with pytest.raises(ValueError):
        ie.parse_index("12a")


def test_coeff_at_huge_parameters():
    big = 3**2000
    t = ie.make_triple(5, 7, big)
    m = 5 * 7 * big // 3
    assert ie.coeff_at(t, m) in range(-5, 6)
    idx = [0, 1, 2, 34, m, t.f_deg - 2, t.f_deg]
    got = ie.coeff_at_many(t, np.array(idx, dtype=object)).tolist()
    assert got == [ie.coeff_at(t, k) for k in idx]
    assert got[0] == got[-1] == 1 and got[2] == got[-2]


def test_resource_cap():
    t = ie.make_triple(9, 11, 16384)
    with pytest.raises(ie.ResourceCapError):
        ie.coeff_vector(t, max_cells=10**5)
    with pytest.raises(ie.ResourceCapError):
        ie.coeff_set(t, max_cells=10**5, method="dense")


def test_block_method_matches_dense():
    rng = random.Random(5)
    done = 0
    while done < 150:
        p, q = rng.randint(3, 12), rng.randint(3, 25)
        r = rng.randint(p + q + 1, 3000)
        try:
            t = ie.make_triple(p, q, r)
        except ie.TripleError:
            continue
        if t.r <= t.p + t.q:
            continue
        dense = ie.coeff_set(t, method="dense")
        blocks = ie.coeff_set(t, method="blocks")
        assert (dense.set_min, dense.set_max) == (blocks.set_min, blocks.set_max), t
        done += 1


def test_block_cost_is_independent_of_r():
    a = ie.block_cost(ie.make_triple(9, 11, 2**14))
    b = ie.block_cost(ie.make_triple(9, 11, 2**140))
    assert a == b


def test_csv_output():
    vec = ie.coeff_vector(ie.make_triple(3, 5, 7)).coefficients
    lines = ie.coefficients_to_csv(vec).splitlines()
    assert lines[0] == "m,a_m" and lines[8] == "7,-2" and len(lines) == 50


@given(st.integers(3, 12), st.integers(3, 30), st.integers(31, 200))
@settings(max_examples=30, deadline=None)
def test_summary_serializes_ints_as_strings(p, q, r):
    assume(math.gcd(p, q) == math.gcd(q, r) == math.gcd(p, r) == 1)
    t = ie.make_triple(p, q, r)
    d = ie.coeff_set(t).summary(t)
    assert all(isinstance(d[k], str) for k in ("p", "q", "r", "degree"))
