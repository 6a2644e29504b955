"""Bounded search for prime triples meeting the Theorem 3 hypotheses.

The recipe: pick p = 3 or 7 (mod 8); then q must match p mod 8, have
gcd(q - 1, (p - 1)/2) = 1 and be a primitive root mod p^2; finally r must be
a primitive root mod both p^2 and q^2. Finite bounds replace the Dirichlet
existence argument, so an empty result just means "nothing below the bound".
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

from .modmath import PrimePowerModulus, is_prime, is_primitive_root, primes_upto, totient
from .theorems import thm3_precheck

__all__ = [
    "TripleCandidate",
    "find_q_candidates",
    "find_r_candidates",
    "find_triples",
    "primitive_root_count_mod_p2",
    "to_json_lines",
]


@dataclass(frozen=True)
class TripleCandidate:
    p: int
    q: int
    r: int
    q_mod_8: int
    q_mod_half: int  # q mod (p-1)/2
    q_mod_p2: int
    r_mod_p2: int
    r_mod_q2: int
    q_primitive_mod_p2: bool
    r_primitive_mod_p2: bool
    r_primitive_mod_q2: bool

    @classmethod
    def build(cls, p: int, q: int, r: int) -> "TripleCandidate":
        return cls(
            p=p,
            q=q,
            r=r,
            q_mod_8=q % 8,
            q_mod_half=q % ((p - 1) // 2),
            q_mod_p2=q % (p * p),
            r_mod_p2=r % (p * p),
            r_mod_q2=r % (q * q),
            q_primitive_mod_p2=_prim_sq(q, p),
            r_primitive_mod_p2=_prim_sq(r, p),
            r_primitive_mod_q2=_prim_sq(r, q),
        )

    def to_dict(self) -> dict:
        return {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v) for k, v in asdict(self).items()}


def _prim_sq(g: int, prime: int) -> bool:
    return g % prime != 0 and is_primitive_root(g, PrimePowerModulus(prime, 2))


def _check_p(p: int) -> None:
    if not is_prime(p) or p % 8 not in (3, 7):
        raise ValueError(f"p must be a prime = 3 or 7 (mod 8), got {p}")


def find_q_candidates(p: int, qmax: int) -> list[int]:
    _check_p(p)
    half = (p - 1) // 2
    out = []
    for q in primes_upto(qmax):
        if q <= p or q % 8 != p % 8:
            continue
        # gcd(q-1, p-1) = 2 reduces to this since p-1 = 2*half with half odd
        if math.gcd(q - 1, half) != 1:
            continue
        if _prim_sq(q, p):
            out.append(q)
    return out


def find_r_candidates(p: int, q: int, rmax: int) -> list[int]:
    _check_p(p)
    if not (is_prime(q) and q > p and q % 8 == p % 8 and math.gcd(p - 1, q - 1) == 2 and _prim_sq(q, p)):
        raise ValueError(f"({p}, {q}) does not satisfy the conditions on p and q")
    return [r for r in primes_upto(rmax) if r not in (p, q) and _prim_sq(r, p) and _prim_sq(r, q)]


def find_triples(pmax: int, qmax: int, rmax: int) -> list[TripleCandidate]:
    out = []
    for p in primes_upto(pmax):
        if p % 8 not in (3, 7):
            continue
        for q in find_q_candidates(p, qmax):
            for r in find_r_candidates(p, q, rmax):
                cand = TripleCandidate.build(p, q, r)
                if not thm3_precheck(p, q, r).all_pass:
                    raise AssertionError(f"search emitted a triple failing the precheck: {(p, q, r)}")
                out.append(cand)
    return out


def primitive_root_count_mod_p2(p: int) -> int:
    """Number of primitive roots modulo p^2 for an odd prime p: (p-1) phi(p-1)."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return (p - 1) * totient(p - 1)


def to_json_lines(cands: list[TripleCandidate]) -> str:
    return "".join(json.dumps(c.to_dict(), sort_keys=True) + "\n" for c in cands)
