"""Exact integer and modular arithmetic.

Everything here works on Python ints, so arbitrary precision comes for free.
The group orders that show up in this package are totients of prime powers,
whose factorizations are known in closed form; the general factoring routine
(trial division plus Pollard rho) only has to deal with ``p - 1`` style
numbers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "NotAUnitError",
    "PrimePowerModulus",
    "DlogAnswer",
    "lnr",
    "is_prime",
    "primes_upto",
    "factorize",
    "totient_factorization",
    "mult_order",
    "is_primitive_root",
    "dlog_prime_power",
    "dlog_composite",
    "crt_general",
    "legendre_minus_two",
    "totient",
]


class NotAUnitError(ValueError):
    """Raised when an operation needs a unit modulo m and did not get one."""


def lnr(n: int, m: int) -> int:
    """Least nonnegative residue of ``n`` modulo ``m``."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    return n % m


# ---------------------------------------------------------------------------
# primality and factoring

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# The first 12 primes as Miller-Rabin bases are a deterministic test below
# 3.3e24 (Sorenson & Webster), which covers all of 2^64.
_DETERMINISTIC_BOUND = 3317044064679887385961981
_EXTRA_ROUNDS = 32


def _mr_composite_witness(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic for ``n < 3.3e24`` (so for every 64-bit input). Above that,
    32 extra bases drawn from a generator seeded by ``n`` are tried on top of
    the fixed ones, so a composite slips through with probability below
    ``4**-32``; the answer for a given ``n`` never changes between runs.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        if _mr_composite_witness(n, d, s, a):
            return False
    if n < _DETERMINISTIC_BOUND:
        return True
    rng = random.Random(n)
    for _ in range(_EXTRA_ROUNDS):
        if _mr_composite_witness(n, d, s, rng.randrange(2, n - 1)):
            return False
    return True


def primes_upto(n: int) -> list[int]:
    """All primes <= n (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@lru_cache(maxsize=4096)
def _factorize_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    _factor_into(n, out)
    return tuple(sorted(out.items()))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{prime: exponent}`` of ``n >= 1``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    return dict(_factorize_cached(n))


def _merge(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out = dict(a)
    for p, e in b.items():
        out[p] = out.get(p, 0) + e
    return out


def totient_factorization(m: int) -> dict[int, int]:
    """Factorization of Euler's phi(m), assembled from the factors of m."""
    out: dict[int, int] = {}
    for p, e in factorize(m).items():
        if e > 1:
            out = _merge(out, {p: e - 1})
        if p > 2:
            out = _merge(out, factorize(p - 1))
    return out


def totient(m: int) -> int:
    result = m
    for p in factorize(m):
        result = result // p * (p - 1)
    return result


def _product(factors: dict[int, int]) -> int:
    out = 1
    for p, e in factors.items():
        out *= p**e
    return out


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class PrimePowerModulus:
    """The modulus ``prime ** exponent`` with its totient precomputed."""

    prime: int
    exponent: int = 1
    value: int = field(init=False)
    totient: int = field(init=False)

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise ValueError(f"exponent must be >= 1, got {self.exponent}")
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        object.__setattr__(self, "value", self.prime**self.exponent)
        object.__setattr__(
            self, "totient", self.prime ** (self.exponent - 1) * (self.prime - 1)
        )

    def totient_factors(self) -> dict[int, int]:
        out = factorize(self.prime - 1) if self.prime > 2 else {}
        if self.exponent > 1:
            out = _merge(out, {self.prime: self.exponent - 1})
        return out


@dataclass(frozen=True)
class DlogAnswer:
    """Smallest exponent solving a discrete log, plus the order of the base.

    Every solution is ``exponent + k * order``.
    """

    exponent: int
    order: int


# ---------------------------------------------------------------------------
# orders, primitive roots, discrete logs


def _order_from_multiple(g: int, m: int, n: int, n_factors: dict[int, int]) -> int:
    """Order of g mod m given that g**n == 1 and the factorization of n."""
    order = n
    for ell in n_factors:
        while order % ell == 0 and pow(g, order // ell, m) == 1:
            order //= ell
    return order


def _check_unit(g: int, m: int) -> None:
    if math.gcd(g, m) != 1:
        raise NotAUnitError(f"{g} is not a unit modulo {m}")


def mult_order(g: int, m: int, group_factors: dict[int, int] | None = None) -> int:
    """Multiplicative order of ``g`` modulo ``m``.

    ``group_factors`` may carry a factorization of any multiple of the order
    (phi(m) by default); the order is found by stripping primes from it.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    _check_unit(g, m)
    if group_factors is None:
        group_factors = totient_factorization(m)
    return _order_from_multiple(g % m, m, _product(group_factors), group_factors)


def is_primitive_root(g: int, m: PrimePowerModulus) -> bool:
    _check_unit(g, m.value)
    return mult_order(g, m.value, m.totient_factors()) == m.totient


def _bsgs(g: int, h: int, m: int, n: int) -> int | None:
    """Solve g**x == h (mod m) for 0 <= x < n, where g has order n."""
    step = math.isqrt(n - 1) + 1
    table: dict[int, int] = {}
    e = 1
    for j in range(step):
        table.setdefault(e, j)
        e = e * g % m
    giant = pow(g, -step, m)
    y = h % m
    for i in range(step):
        j = table.get(y)
        if j is not None:
            return i * step + j
        y = y * giant % m
    return None


def _pohlig_hellman(g: int, h: int, m: int, order: int, order_factors: dict[int, int]) -> int | None:
    residues: list[tuple[int, int]] = []
    for ell, e in order_factors.items():
        ell_e = ell**e
        cofactor = order // ell_e
        g_sub = pow(g, cofactor, m)  # order ell**e
        h_sub = pow(h, cofactor, m)
        gamma = pow(g_sub, ell ** (e - 1), m)  # order ell
        x = 0
        for k in range(e):
            hk = pow(pow(g_sub, -x, m) * h_sub % m, ell ** (e - 1 - k), m)
            digit = _bsgs(gamma, hk, m, ell)
            if digit is None:
                return None
            x += digit * ell**k
        residues.append((x, ell_e))
    x, mod = 0, 1
    for r, n in residues:
        solved = crt_general(x, mod, r, n)
        assert solved is not None  # prime-power moduli are coprime
        x, mod = solved
    return x


def dlog_prime_power(base: int, target: int, m: PrimePowerModulus) -> DlogAnswer | None:
    """Discrete log of ``target`` to ``base`` modulo a prime power.

    Returns None when ``target`` is not in the subgroup generated by ``base``.
    Pohlig-Hellman over the factored order of ``base``, with baby-step
    giant-step on each prime-order piece.
    """
    mod = m.value
    _check_unit(base, mod)
    _check_unit(target, mod)
    base, target = base % mod, target % mod
    order = mult_order(base, mod, m.totient_factors())
    order_factors = factorize(order)
    x = _pohlig_hellman(base, target, mod, order, order_factors)
    if x is None or pow(base, x, mod) != target:
        return None
    return DlogAnswer(exponent=x % order, order=order)


def dlog_composite(base: int, target: int, modulus: int) -> DlogAnswer | None:
    """Discrete log modulo a composite: per prime power, then CRT-combined."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    _check_unit(base, modulus)
    _check_unit(target, modulus)
    x, order = 0, 1
    for prime, e in factorize(modulus).items():
        part = dlog_prime_power(base, target, PrimePowerModulus(prime, e))
        if part is None:
            return None
        solved = crt_general(x, order, part.exponent, part.order)
        if solved is None:
            return None
        x, order = solved
    return DlogAnswer(exponent=x, order=order)


def crt_general(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    """Solve x == r1 (mod m1), x == r2 (mod m2) for arbitrary moduli.

    Returns ``(x, lcm(m1, m2))`` with ``0 <= x < lcm``, or None when
    ``gcd(m1, m2)`` does not divide ``r1 - r2``.
    """
    if m1 < 1 or m2 < 1:
        raise ValueError("moduli must be >= 1")
    g = math.gcd(m1, m2)
    diff = r2 - r1
    if diff % g:
        return None
    lcm = m1 // g * m2
    k = diff // g * pow(m1 // g, -1, m2 // g) % (m2 // g)
    return (r1 + m1 * k) % lcm, lcm


def legendre_minus_two(p: int) -> int:
    """Legendre symbol (-2 | p) for an odd prime p."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return -1 if ((p - 1) // 2 + (p * p - 1) // 8) % 2 else 1
