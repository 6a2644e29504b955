"""Replay checks for serialized certificates.

Works on the JSON dictionaries directly and recomputes every congruence from
the stored exponents. Deliberately independent of :mod:`unitcyclo.theorems`:
only the modular helpers and the point-query coefficient routine are shared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ._io import parse_fraction, parse_int
from .iepoly import chi, coeff_at, coeff_set, make_triple, window_sum
from .modmath import is_prime, legendre_minus_two

__all__ = ["VerifyReport", "verify_certificate", "verify_thm3", "verify_prop5", "verify_thm1"]


@dataclass
class VerifyReport:
    kind: str
    checks: dict[str, bool] = field(default_factory=dict)
    info: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "ok": self.ok, "checks": dict(self.checks), "info": dict(self.info)}


def _ints(d: dict, *keys: str) -> list[int]:
    return [parse_int(d[k]) for k in keys]


def _pow_gt(base: int, exponent: int, bound: int) -> bool:
    x = 1
    for _ in range(exponent):
        x *= base
        if x > bound:
            return True
    return False


def _phi_prime_power(p: int, e: int) -> int:
    return p ** (e - 1) * (p - 1)


def verify_thm3(d: dict, full: bool = False, max_cells: int = 10**8) -> VerifyReport:
    p, q, r, a, b, c, i, j = _ints(d, "p", "q", "r", "a", "b", "c", "i", "j")
    P, Q = p**a, q**b
    phi_P, phi_Q = _phi_prime_power(p, a), _phi_prime_power(q, b)
    rep = VerifyReport("thm3")
    ck = rep.checks
    ck["primes"] = all(is_prime(x) for x in (p, q, r)) and len({p, q, r}) == 3
    ck["stored_P_Q"] = parse_int(d["P"]) == P and parse_int(d["Q"]) == Q
    ck["Q_is_2_mod_P"] = Q % P == 2 % P
    ck["R_is_half_mod_PQ"] = pow(r, c, P * Q) == (P * Q - 1) // 2
    ck["P_lt_Q"] = P < Q
    ck["P_lt_R"] = _pow_gt(r, c, P)
    ck["P_Q_odd"] = P % 2 == 1 and Q % 2 == 1
    ck["i_solves"] = pow(r, i, P) == (P - 1) // 2
    ck["j_solves"] = pow(r, j, Q) == (Q - 1) // 2
    ck["c_matches_i"] = (c - i) % phi_P == 0
    ck["c_matches_j"] = (c - j) % phi_Q == 0
    # i is even exactly when -2 is a square mod p, and likewise for j and q
    ck["i_parity_legendre"] = (i % 2 == 0) == (legendre_minus_two(p) == 1)
    ck["j_parity_legendre"] = (j % 2 == 0) == (legendre_minus_two(q) == 1)
    ck["parities_agree"] = i % 2 == j % 2
    if full:
        R = r**c
        t = make_triple(P, Q, R)
        res = coeff_set(t, max_cells=max_cells)
        stated = (-(P - 1) // 2, (P + 1) // 2)
        reflected = (-(P + 1) // 2, (P - 1) // 2)
        got = (res.set_min, res.set_max)
        ck["set_size_P_plus_1"] = res.diameter + 1 == P + 1
        ck["diameter_equals_P"] = res.diameter == P
        ck["set_matches_interval"] = got in (stated, reflected)
        rep.info["set"] = [res.set_min, res.set_max]
        rep.info["orientation"] = "stated" if got == stated else "reflected" if got == reflected else None
    return rep


def _chi_claims(t, p, ell, C, q_signed, r_signed, m, rr) -> dict[str, bool]:
    out = {}
    out["ell_minus_i_in"] = all(chi(t, ell - i) == 1 for i in range(C))
    out["ell_plus_i_out"] = all(chi(t, ell + i) == 0 for i in range(1, p))
    for name, shift in (("ell_minus_r_out", -r_signed), ("ell_plus_r_out", r_signed), ("ell_minus_q_out", -q_signed)):
        out[name] = all(chi(t, ell + shift + i) == 0 for i in range(1 - C, p))
    out["window_m_is_C"] = window_sum(t, m) == C
    out["window_shifts_zero"] = (
        window_sum(t, m + rr) == 0 and window_sum(t, m - rr) == 0 and window_sum(t, m - q_signed) == 0
    )
    return out


def _prop5_witness_checks(p: int, qq: int, rr: int, u: int, C: int, rep: VerifyReport) -> tuple[int, int]:
    t = make_triple(p, qq, rr)
    x_q, x_r = u * qq % p, u * rr % p
    q_sign = 1 if x_q < p - x_q else -1
    r_sign = 1 if x_r < p - x_r else -1
    ell = (C - 1) * u * qq * rr
    m = ell + p - C
    for name, ok in _chi_claims(t, p, ell, C, q_sign * qq, r_sign * rr, m, rr).items():
        rep.checks[f"chi:{name}"] = ok
    # Lemma 1 read off at the two sign choices for r
    if q_sign > 0:
        plus, minus = m, m + rr
    else:
        plus, minus = m + qq + rr, m + qq
    a_plus, a_minus = coeff_at(t, plus), coeff_at(t, minus)
    rep.checks["witness_plus_ge_C"] = a_plus >= C
    rep.checks["witness_minus_le_minus_C"] = a_minus <= -C
    return a_plus, a_minus


def verify_prop5(d: dict, full: bool = False, max_cells: int = 10**8) -> VerifyReport:
    p, qq, rr = _ints(d, "p", "q_role", "r_role")
    rep = VerifyReport("prop5")
    ck = rep.checks
    u = pow(qq * rr, -1, p)
    v = pow(p * rr, -1, qq)
    x_q, x_r = u * qq % p, u * rr % p
    mu = min(x_q, x_r, p - x_q, p - x_r)
    C = mu // u
    ck["p_smallest"] = p < qq and p < rr
    ck["stored_quantities"] = [u, v, mu, C] == _ints(d, "u", "v", "mu", "C")
    ck["u_le_mu"] = u <= mu
    ck["q_gt_p2"] = qq > p * p
    ck["v_large"] = v * p * p > qq * (p * p - 1)
    if not all(ck.values()):
        return rep
    a_plus, a_minus = _prop5_witness_checks(p, qq, rr, u, C, rep)
    if d.get("witness_plus") is not None:
        ck["stored_witness_values"] = (
            parse_int(d["witness_plus"][1]) == a_plus and parse_int(d["witness_minus"][1]) == a_minus
        )
    if full:
        res = coeff_set(make_triple(p, qq, rr), max_cells=max_cells)
        ck["set_contains_minus_C_to_C"] = res.set_min <= -C and res.set_max >= C
    return rep


def verify_thm1(d: dict, witnesses: bool = True, max_r_digits: int = 2_000_000) -> VerifyReport:
    p, q, r, a = _ints(d, "p", "q", "r", "a")
    i1, j1, k1, t2, k2, j2, c, dd, slack = _ints(d, "i1", "j1", "k1", "t2", "k2", "j2", "c", "d", "slack_exponent")
    eps: Fraction = parse_fraction(d["epsilon"])
    rep = VerifyReport("thm1")
    ck = rep.checks
    P = p**a
    phi_P = _phi_prime_power(p, a)
    b = k1 * phi_P - i1
    Q = q**b
    phi_Q = _phi_prime_power(q, b)
    bound = (Fraction(1, 4) - eps) * P
    xq, xr = pow(q, i1, P), pow(r, j1, P)
    ck["primes"] = all(is_prime(x) for x in (p, q, r)) and len({p, q, r}) == 3
    ck["epsilon_range"] = 0 < eps < Fraction(1, 4)
    ck["lemma4_product_one"] = xq * xr % P == 1
    ck["lemma4_spread"] = min(xq, P - xq, xr, P - xr) > bound
    ck["stored_Q"] = parse_int(d["Q"]) == Q and parse_int(d["b"]) == b
    ck["Q_exceeds_P_slack"] = Q > P**slack
    ck["c_form"] = c == k2 * phi_P - j1 and k2 > 0 and c > 0
    ck["d_is_gcd"] = dd == math.gcd(phi_P, phi_Q)
    ck["j2_form"] = j2 == j1 + dd * t2
    ck["k2_solves"] = (k2 * phi_P + dd * t2) % phi_Q == 0
    ck["R_times_r_j2_is_one_mod_Q"] = pow(r, c + j2, Q) == 1
    y_R = pow(P, -1, Q)
    v = y_R * pow(r, j2, Q) % Q
    ck["v_in_top_interval"] = v * P * P > Q * (P * P - 1)
    R_P = pow(r, c, P)
    u = pow(Q * R_P, -1, P)
    ck["u_is_one"] = u == 1
    x_Q, x_R = Q % P, R_P
    C = min(x_Q, x_R, P - x_Q, P - x_R)
    ck["x_R_is_q_power"] = x_R == xq
    ck["x_Q_is_r_power"] = x_Q == xr
    ck["C_exceeds_bound"] = C > bound and C == parse_int(d["C"])
    ck["v_matches_stored"] = v == parse_int(d["v"])
    ck["P_smallest"] = P < Q and _pow_gt(r, c, P)
    rep.info["C"] = C
    if witnesses:
        if int(c * math.log10(r)) + 1 > max_r_digits:
            rep.info["witnesses"] = "skipped: R too large to expand"
        else:
            R = r**c
            a_plus, a_minus = _prop5_witness_checks(P, Q, R, u, C, rep)
            rep.info["witness_values"] = [a_plus, a_minus]
            if d.get("witness_plus") is not None:
                ck["stored_witness_values"] = (
                    parse_int(d["witness_plus"]) == a_plus and parse_int(d["witness_minus"]) == a_minus
                )
    return rep


def verify_certificate(d: dict, full: bool = False, max_cells: int = 10**8) -> VerifyReport:
    kind = d.get("kind")
    if kind == "thm3":
        return verify_thm3(d, full=full, max_cells=max_cells)
    if kind == "prop5":
        return verify_prop5(d, full=full, max_cells=max_cells)
    if kind == "thm1":
        return verify_thm1(d)
    raise ValueError(f"unknown certificate kind {kind!r}")
