from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitcyclo.modmath import (
    NotAUnitError,
    PrimePowerModulus,
    crt_general,
    dlog_composite,
    dlog_prime_power,
    factorize,
    is_prime,
    is_primitive_root,
    legendre_minus_two,
    lnr,
    mult_order,
    primes_upto,
    totient,
)

SMALL_PRIMES = [p for p in range(3, 200) if all(p % d for d in range(2, p))]


def _sieve(n):
    flags = [True] * (n + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(flags[i * i :: i])
    return [i for i, f in enumerate(flags) if f]


def test_lnr_is_least_nonnegative():
    assert lnr(-7, 5) == 3
    assert lnr(12, 4) == 0
    with pytest.raises(ValueError):
        lnr(3, 0)


def test_primes_upto_matches_sieve():
    assert primes_upto(10_000) == _sieve(10_000)


def test_is_prime_small_range():
    expected = set(_sieve(5000))
    assert [n for n in range(-5, 5001) if is_prime(n)] == sorted(expected)


@pytest.mark.parametrize(
    "n, prime",
    [
        (2**61 - 1, True),
        (2**89 - 1, True),
        (2**127 - 1, True),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3317044064679887385961981, False),  # beyond the deterministic base range
        (561, False),
        (10**18 + 9, True),
    ],
)
def test_is_prime_known_values(n, prime):
    assert is_prime(n) is prime


@given(st.integers(min_value=2, max_value=10**12))
@settings(max_examples=200, deadline=None)
def test_factorize_reconstructs(n):
    fac = factorize(n)
    assert math.prod(p**e for p, e in fac.items()) == n
    assert all(is_prime(p) for p in fac)


def test_factorize_semiprime():
    p, q = 1_000_000_007, 998_244_353
    assert factorize(p * q) == {q: 1, p: 1}


@given(st.integers(min_value=1, max_value=5000))
def test_totient_brute(n):
    assert totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_prime_power_modulus_fields():
    m = PrimePowerModulus(3, 4)
    assert (m.value, m.totient) == (81, 54)
    assert m.totient_factors() == {2: 1, 3: 3}
    with pytest.raises(ValueError):
        PrimePowerModulus(4, 2)


@given(st.integers(min_value=2, max_value=500), st.integers(min_value=1, max_value=500))
def test_mult_order_brute(m, g):
    if math.gcd(g, m) != 1:
        with pytest.raises(NotAUnitError):
            mult_order(g, m)
        return
    k, x = 1, g % m
    while x != 1 % m:
        x = x * g % m
        k += 1
    assert mult_order(g, m) == k


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 29, 43])
def test_primitive_root_count_mod_square(p):
    mod = PrimePowerModulus(p, 2)
    roots = [g for g in range(1, mod.value) if g % p and is_primitive_root(g, mod)]
    assert len(roots) == (p - 1) * totient(p - 1)
    assert all(mult_order(g, mod.value) == mod.totient for g in roots)


@given(
    st.sampled_from(SMALL_PRIMES[:15]),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=2, max_value=10**9),
    st.integers(min_value=0, max_value=10**9),
)
@settings(max_examples=300, deadline=None)
def test_dlog_round_trip(p, e, g, k):
    mod = PrimePowerModulus(p, e)
    if g % p == 0:
        return
    h = pow(g, k, mod.value)
    ans = dlog_prime_power(g, h, mod)
    assert ans is not None
    assert pow(g, ans.exponent, mod.value) == h
    assert 0 <= ans.exponent < ans.order == mult_order(g, mod.value)
    assert ans.exponent == k % ans.order


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_dlog_none_outside_subgroup(p):
    mod = PrimePowerModulus(p, 2)
    g = 1 + p  # order p, generates only the 1 mod p residues
    reach = {pow(g, k, mod.value) for k in range(p)}
    for h in range(1, mod.value):
        if h % p == 0:
            continue
        ans = dlog_prime_power(g, h, mod)
        assert (ans is not None) == (h in reach)


def test_dlog_large_prime_power():
    mod = PrimePowerModulus(7, 60)
    g, k = 3, 123456789123456789
    ans = dlog_prime_power(g, pow(g, k, mod.value), mod)
    assert ans is not None and pow(g, ans.exponent, mod.value) == pow(g, k, mod.value)


@given(st.integers(min_value=2, max_value=3000), st.integers(min_value=2, max_value=10**6), st.integers(0, 10**6))
@settings(max_examples=200, deadline=None)
def test_dlog_composite_round_trip(m, g, k):
    if math.gcd(g, m) != 1:
        return
    h = pow(g, k, m)
    x = dlog_composite(g, h, m)
    assert x is not None and pow(g, x.exponent, m) == h
    assert x.order == mult_order(g, m)


@given(st.integers(1, 120), st.integers(1, 120), st.integers(0, 10**4), st.integers(0, 10**4))
@settings(max_examples=400)
def test_crt_brute(m1, m2, r1, r2):
    r1, r2 = r1 % m1, r2 % m2
    got = crt_general(r1, m1, r2, m2)
    lcm = m1 * m2 // math.gcd(m1, m2)
    brute = [x for x in range(lcm) if x % m1 == r1 and x % m2 == r2]
    if not brute:
        assert got is None
    else:
        assert got == (brute[0], lcm)


def test_legendre_minus_two_brute():
    for p in primes_upto(10_000)[1:]:
        squares = {x * x % p for x in range(1, p)}
        expected = 1 if (p - 2) in squares else -1
        assert legendre_minus_two(p) == expected
        assert (expected == 1) == (p % 8 in (1, 3))
