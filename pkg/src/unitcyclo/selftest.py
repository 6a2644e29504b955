"""Invariant checks at a bounded scale, run by ``unitcyclo selftest``."""

from __future__ import annotations

import random
from typing import Callable

import numpy as np

from . import iepoly as ie
from .modmath import crt_general, dlog_prime_power, is_prime, legendre_minus_two, mult_order, PrimePowerModulus
from .primesearch import find_triples
from .theorems import flat_family_check, prop5_certify, thm3_construct
from .verify import verify_certificate


def _random_triples(rng: random.Random, count: int, max_deg: int) -> list[ie.Triple]:
    out = []
    while len(out) < count:
        try:
            t = ie.make_triple(rng.randint(3, 15), rng.randint(3, 40), rng.randint(3, 400))
        except ie.TripleError:
            continue
        if t.f_deg <= max_deg:
            out.append(t)
    return out


def check_engines(rng: random.Random, count: int) -> str:
    for t in _random_triples(rng, count, 50_000):
        a = ie.coeff_vector(t, "oracle").coefficients
        b = ie.coeff_vector(t, "truncated").coefficients
        assert np.array_equal(a, b), t
        ms = np.array([rng.randint(0, t.f_deg) for _ in range(50)])
        assert np.array_equal(ie.coeff_at_many(t, ms), a[ms]), t
        m = int(ms[0])
        assert ie.coeff_at(t, m) == a[m], t
        assert a[0] == a[-1] == 1 and int(a.sum()) == 1
        assert np.array_equal(a, a[::-1])
        assert int(a.max()) - int(a.min()) <= t.p
    return f"{count} triples"


def check_identities(rng: random.Random, count: int) -> str:
    for t in _random_triples(rng, count, 10**6):
        p, q, r = t.elements
        assert t.u * q * r + t.v * p * r + t.w * p * q + t.delta1 * p * q * r == 1
        assert ie.f_val(t, r) == p * q + 1 and ie.f_val(t, -r) == p * q - 1
        n = rng.randint(-10**9, 10**9)
        assert (ie.f_val(t, n) - n * t.r_star) % (p * q) == 0
        rep = ie.decompose(t, n)
        assert rep.x * q * r + rep.y * p * r + rep.z * p * q + rep.delta * p * q * r == n
        x_q, x_r = ie.decompose(t, q).x, ie.decompose(t, r).x
        y_p, y_r = ie.decompose(t, p).y, ie.decompose(t, r).y
        assert t.u == x_q * x_r % p and t.v == y_p * y_r % q
    return f"{count} triples"


def check_modmath(rng: random.Random, count: int) -> str:
    for _ in range(count):
        m1, m2 = rng.randint(1, 200), rng.randint(1, 200)
        r1, r2 = rng.randrange(m1), rng.randrange(m2)
        got = crt_general(r1, m1, r2, m2)
        brute = [x for x in range(m1 * m2) if x % m1 == r1 and x % m2 == r2]
        assert (got is None) == (not brute)
        if got:
            assert got[0] == brute[0]
    for p in (3, 7, 11, 19, 23, 43):
        mod = PrimePowerModulus(p, 3)
        for _ in range(20):
            g = rng.randrange(2, mod.value)
            if g % p == 0:
                continue
            k = rng.randrange(0, mod.totient)
            ans = dlog_prime_power(g, pow(g, k, mod.value), mod)
            assert ans is not None and pow(g, ans.exponent, mod.value) == pow(g, k, mod.value)
            assert ans.order == mult_order(g, mod.value)
        squares = {x * x % p for x in range(1, p)}
        assert (legendre_minus_two(p) == 1) == ((-2) % p in squares)
    assert [n for n in range(200) if is_prime(n)][:5] == [2, 3, 5, 7, 11]
    return f"{count} CRT instances"


def check_theorems(rng: random.Random, count: int) -> str:
    for a in (1, 2):
        cert = thm3_construct(3, 11, 2, a)
        rep = verify_certificate(cert.to_dict(), full=True)
        assert rep.ok, rep.failed()
    for elems in ((5, 29, 139), (5, 37, 133)):
        cert = prop5_certify(ie.make_triple(*elems))
        assert cert.hypotheses_ok and cert.witnesses_ok
        assert verify_certificate(cert.to_dict(), full=True).ok
    res = flat_family_check(1, 1)
    assert (res.set_min, res.set_max) == (-1, 1)
    found = {(c.p, c.q, c.r) for c in find_triples(3, 20, 30)}
    assert {(3, 11, 2), (3, 11, 29)} <= found
    return "thm3, prop5, flat, search"


CHECKS: dict[str, Callable[[random.Random, int], str]] = {
    "modmath": check_modmath,
    "identities": check_identities,
    "engines": check_engines,
    "theorems": check_theorems,
}


def run_selftest(scale: int = 20, seed: int = 0) -> list[tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS.items():
        rng = random.Random(f"{seed}:{name}")
        try:
            results.append((name, True, fn(rng, scale)))
        except AssertionError as exc:
            results.append((name, False, f"assertion failed: {exc}"))
    return results
