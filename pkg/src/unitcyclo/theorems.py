"""Constructions that produce triples with prescribed coefficient sets.

Each constructor returns a certificate: the exponents it picked together with
the congruences those exponents are supposed to satisfy. Certificates
serialize to JSON (integers as decimal strings) and are re-checked by
:mod:`unitcyclo.verify`, which shares nothing with this module beyond the
arithmetic helpers.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from ._io import fraction_str, int_str, parse_fraction
from .iepoly import (
    DEFAULT_MAX_CELLS,
    ConsistencyError,
    ResourceCapError,
    Triple,
    chi,
    coeff_at,
    coeff_set,
    make_triple,
    window_sum,
)
from .modmath import (
    PrimePowerModulus,
    crt_general,
    dlog_prime_power,
    is_prime,
    is_primitive_root,
    legendre_minus_two,
    mult_order,
)

log = logging.getLogger(__name__)

__all__ = [
    "HypothesisError",
    "Prop4Report",
    "prop4_check",
    "Thm3Precheck",
    "thm3_precheck",
    "Thm3Certificate",
    "thm3_construct",
    "Prop5Certificate",
    "prop5_certify",
    "prop5_for_roles",
    "Lemma4Witness",
    "lemma4_search",
    "Thm1Certificate",
    "thm1_construct",
    "FlatResult",
    "flat_family_check",
    "certificate_to_dict",
]

# R is only expanded to a full integer below this many decimal digits
DEFAULT_MAX_R_DIGITS = 2_000_000


class HypothesisError(ValueError):
    """The inputs do not meet the hypotheses a construction relies on."""


def _stringify(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return int_str(obj)
    if isinstance(obj, Fraction):
        return fraction_str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _digits_estimate(base: int, exponent: int) -> int:
    return int(exponent * math.log10(base)) + 1


# ---------------------------------------------------------------------------
# Proposition 4


@dataclass
class Prop4Report:
    elements: tuple[int, int, int]
    q_role: int
    r_role: int
    p_smallest: bool
    p_q_odd: bool
    q_congruence: bool
    r_congruence: bool
    stated: tuple[int, int] | None
    reflected: tuple[int, int] | None
    computed: tuple[int, int] | None = None
    matched: str | None = None

    @property
    def hypotheses_ok(self) -> bool:
        return self.p_smallest and self.p_q_odd and self.q_congruence and self.r_congruence

    def to_dict(self) -> dict:
        d = asdict(self)
        d["hypotheses_ok"] = self.hypotheses_ok
        for key in ("stated", "reflected", "computed"):
            if d[key] is not None:
                d[key] = list(d[key])
        d["elements"] = [int_str(e) for e in self.elements]
        d["q_role"] = int_str(self.q_role)
        d["r_role"] = int_str(self.r_role)
        return d


def _prop4_roles(p: int, qq: int, rr: int) -> tuple[bool, bool, bool, bool]:
    pq = p * qq
    return (
        p < qq and p < rr,
        p % 2 == 1 and qq % 2 == 1,
        qq % p == 2 % p,
        pq % 2 == 1 and rr % pq == (pq - 1) // 2,
    )


def prop4_check(t: Triple, max_cells: int = DEFAULT_MAX_CELLS) -> Prop4Report:
    """Check the congruence hypotheses and compare against the computed set.

    Both larger elements are tried in the q role. The expected interval
    ``[-(p-1)/2, (p+1)/2]`` and its reflection are both recorded; ``matched``
    says which one the actual coefficients follow.
    """
    p = t.p
    roles = [(t.q, t.r), (t.r, t.q)]
    chosen = roles[0]
    for qq, rr in roles:
        if all(_prop4_roles(p, qq, rr)):
            chosen = (qq, rr)
            break
    flags = _prop4_roles(p, *chosen)
    stated = reflected = None
    if p % 2 == 1:
        stated = (-(p - 1) // 2, (p + 1) // 2)
        reflected = (-(p + 1) // 2, (p - 1) // 2)
    report = Prop4Report(t.elements, chosen[0], chosen[1], *flags, stated, reflected)
    if report.hypotheses_ok:
        try:
            res = coeff_set(t, max_cells=max_cells)
        except ResourceCapError:
            return report
        report.computed = (res.set_min, res.set_max)
        if report.computed == stated:
            report.matched = "stated"
        elif report.computed == reflected:
            report.matched = "reflected"
    return report


# ---------------------------------------------------------------------------
# Theorem 3


@dataclass
class Thm3Precheck:
    p: int
    q: int
    r: int
    same_class_mod8: bool
    gcd_is_two: bool
    q_primitive_mod_p2: bool
    r_primitive_mod_p2: bool
    r_primitive_mod_q2: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.same_class_mod8
            and self.gcd_is_two
            and self.q_primitive_mod_p2
            and self.r_primitive_mod_p2
            and self.r_primitive_mod_q2
        )

    def failures(self) -> list[str]:
        names = ("same_class_mod8", "gcd_is_two", "q_primitive_mod_p2", "r_primitive_mod_p2", "r_primitive_mod_q2")
        return [n for n in names if not getattr(self, n)]


def _primitive_mod_square(g: int, prime: int) -> bool:
    if g % prime == 0:
        return False
    return is_primitive_root(g, PrimePowerModulus(prime, 2))


def thm3_precheck(p: int, q: int, r: int) -> Thm3Precheck:
    for x in (p, q, r):
        if not is_prime(x):
            raise ValueError(f"{x} is not prime")
    if len({p, q, r}) != 3:
        raise ValueError("p, q, r must be distinct")
    if p >= q:
        raise ValueError(f"need p < q, got p={p}, q={q}")
    return Thm3Precheck(
        p,
        q,
        r,
        same_class_mod8=p % 8 == q % 8 and p % 8 in (3, 7),
        gcd_is_two=math.gcd(p - 1, q - 1) == 2,
        q_primitive_mod_p2=_primitive_mod_square(q, p),
        r_primitive_mod_p2=_primitive_mod_square(r, p),
        r_primitive_mod_q2=_primitive_mod_square(r, q),
    )


@dataclass
class Thm3Certificate:
    """Exponents a, b, c with P = p^a, Q = q^b, R = r^c meeting the Prop. 4 congruences."""

    p: int
    q: int
    r: int
    a: int
    b: int
    c: int
    P: int
    Q: int
    i: int
    j: int
    phi_P: int
    phi_Q: int
    legendre_p: int
    legendre_q: int
    i_parity: int
    j_parity: int
    lift: int = 0

    @property
    def parities_agree(self) -> bool:
        return self.i_parity == self.j_parity

    def R(self, max_digits: int = DEFAULT_MAX_R_DIGITS) -> int:
        if _digits_estimate(self.r, self.c) > max_digits:
            raise ResourceCapError(f"R = {self.r}^{self.c} exceeds {max_digits} digits")
        return self.r**self.c

    def triple(self, max_digits: int = DEFAULT_MAX_R_DIGITS) -> Triple:
        return make_triple(self.P, self.Q, self.R(max_digits))

    def to_dict(self) -> dict:
        d = _stringify(asdict(self))
        d["kind"] = "thm3"
        d["parities_agree"] = self.parities_agree
        return d


def _exceeds(base: int, exponent: int, bound: int) -> bool:
    """base**exponent > bound, without building base**exponent when it is huge."""
    if base < 2:
        return 1 > bound
    x = 1
    for _ in range(exponent):
        x *= base
        if x > bound:
            return True
    return False


def thm3_construct(p: int, q: int, r: int, a: int, lift: int = 0) -> Thm3Certificate:
    """Exponents b, c making (p^a, q^b, r^c) satisfy Prop. 4's congruences.

    b and c are the smallest exponents with Q > P and R > P; ``lift`` then
    adds that many periods lcm(phi(P), phi(Q)) to c, for larger R.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    pre = thm3_precheck(p, q, r)
    if not pre.all_pass:
        raise HypothesisError(f"hypotheses fail for ({p}, {q}, {r}): {', '.join(pre.failures())}")
    mod_P = PrimePowerModulus(p, a)
    P, phi_P = mod_P.value, mod_P.totient

    ans = dlog_prime_power(q, 2, mod_P)
    if ans is None:
        raise ConsistencyError(f"2 is not a power of {q} modulo {P}")
    b = ans.exponent
    while b < 1 or not _exceeds(q, b, P):
        b += ans.order
    mod_Q = PrimePowerModulus(q, b)
    Q, phi_Q = mod_Q.value, mod_Q.totient

    ans_i = dlog_prime_power(r, (P - 1) // 2, mod_P)
    ans_j = dlog_prime_power(r, (Q - 1) // 2, mod_Q)
    if ans_i is None or ans_j is None:
        raise ConsistencyError("r is not a primitive root as the precheck claimed")
    i, j = ans_i.exponent, ans_j.exponent
    solved = crt_general(i, phi_P, j, phi_Q)
    if solved is None:
        raise ConsistencyError(f"parities of i={i} and j={j} disagree")
    c, period = solved
    while c < 1 or not _exceeds(r, c, P):
        c += period
    c += lift * period
    return Thm3Certificate(
        p=p,
        q=q,
        r=r,
        a=a,
        b=b,
        c=c,
        P=P,
        Q=Q,
        i=i,
        j=j,
        phi_P=phi_P,
        phi_Q=phi_Q,
        legendre_p=legendre_minus_two(p),
        legendre_q=legendre_minus_two(q),
        i_parity=i % 2,
        j_parity=j % 2,
        lift=lift,
    )


# ---------------------------------------------------------------------------
# Proposition 5


@dataclass
class Prop5Certificate:
    elements: tuple[int, int, int]
    p: int
    q_role: int
    r_role: int
    u: int
    v: int
    w: int
    x_q: int
    x_r: int
    mu: int
    C: int
    u_le_mu: bool
    q_gt_p2: bool
    v_large: bool
    a_param: int | None = None
    ell: int | None = None
    q_prime_sign: int | None = None
    r_prime_sign: int | None = None
    witness_plus: tuple[int, int] | None = None
    witness_minus: tuple[int, int] | None = None
    chi_claims: dict[str, bool] = field(default_factory=dict)
    alternatives: list[dict] = field(default_factory=list)

    @property
    def hypotheses_ok(self) -> bool:
        return self.u_le_mu and self.q_gt_p2 and self.v_large

    @property
    def witnesses_ok(self) -> bool:
        if self.witness_plus is None or self.witness_minus is None:
            return False
        return (
            self.witness_plus[1] >= self.C
            and self.witness_minus[1] <= -self.C
            and all(self.chi_claims.values())
        )

    def failures(self) -> list[str]:
        names = {"u_le_mu": "u <= mu", "q_gt_p2": "q > p^2", "v_large": "v > q - q/p^2"}
        return [text for key, text in names.items() if not getattr(self, key)]

    def to_dict(self) -> dict:
        d = _stringify(asdict(self))
        d["kind"] = "prop5"
        d["hypotheses_ok"] = self.hypotheses_ok
        d["witnesses_ok"] = self.witnesses_ok
        d["chi_claims"] = dict(self.chi_claims)
        return d


def _role_quantities(p: int, qq: int, rr: int) -> dict:
    u = pow(qq * rr, -1, p)
    v = pow(p * rr, -1, qq)
    w = pow(p * qq, -1, rr)
    x_q, x_r = u * qq % p, u * rr % p
    mu = min(x_q, x_r, p - x_q, p - x_r)
    return dict(
        u=u,
        v=v,
        w=w,
        x_q=x_q,
        x_r=x_r,
        mu=mu,
        C=mu // u,
        u_le_mu=u <= mu,
        q_gt_p2=qq > p * p,
        # v > q - q/p^2, cleared of the fraction
        v_large=v * p * p > qq * (p * p - 1),
    )


def witness_indices(p: int, qq: int, rr: int, u: int, C: int, q_sign: int) -> tuple[int, int, int, int]:
    """(a, ell, plus index, minus index) of the two extreme coefficients."""
    a = (C - 1) * u
    ell = a * qq * rr
    m = ell + p - C
    if q_sign > 0:
        return a, ell, m, m + rr
    return a, ell, m + qq + rr, m + qq


def _chi_claims(t: Triple, p: int, ell: int, C: int, q_signed: int, r_signed: int, m: int, rr: int) -> dict[str, bool]:
    return {
        "ell_minus_i_in": all(chi(t, ell - i) == 1 for i in range(C)),
        "ell_plus_i_out": all(chi(t, ell + i) == 0 for i in range(1, p)),
        "ell_minus_r_out": all(chi(t, ell - r_signed + i) == 0 for i in range(-C + 1, p)),
        "ell_plus_r_out": all(chi(t, ell + r_signed + i) == 0 for i in range(-C + 1, p)),
        "ell_minus_q_out": all(chi(t, ell - q_signed + i) == 0 for i in range(-C + 1, p)),
        "window_m_is_C": window_sum(t, m) == C,
        "window_shifts_zero": window_sum(t, m + rr) == 0
        and window_sum(t, m - rr) == 0
        and window_sum(t, m - q_signed) == 0,
    }


def prop5_for_roles(t: Triple, q_role: int, r_role: int, evaluate: bool = True) -> Prop5Certificate:
    """Prop. 5 quantities with ``q_role`` in the q position, plus witnesses if it applies."""
    p = t.p
    if {q_role, r_role} != {t.q, t.r}:
        raise ValueError("roles must be the two larger elements")
    quant = _role_quantities(p, q_role, r_role)
    cert = Prop5Certificate(elements=t.elements, p=p, q_role=q_role, r_role=r_role, **quant)
    if not (cert.hypotheses_ok and evaluate):
        return cert
    u, C = cert.u, cert.C
    q_sign = 1 if cert.x_q < p - cert.x_q else -1
    r_sign = 1 if cert.x_r < p - cert.x_r else -1
    a, ell, plus, minus = witness_indices(p, q_role, r_role, u, C, q_sign)
    m = ell + p - C
    cert.a_param, cert.ell = a, ell
    cert.q_prime_sign, cert.r_prime_sign = q_sign, r_sign
    cert.chi_claims = _chi_claims(t, p, ell, C, q_sign * q_role, r_sign * r_role, m, r_role)
    cert.witness_plus = (plus, coeff_at(t, plus))
    cert.witness_minus = (minus, coeff_at(t, minus))
    return cert


def prop5_certify(t: Triple) -> Prop5Certificate:
    """Try each larger element as q; the first that meets the hypotheses wins."""
    certs = [prop5_for_roles(t, t.q, t.r, evaluate=False), prop5_for_roles(t, t.r, t.q, evaluate=False)]
    chosen = next((c for c in certs if c.hypotheses_ok), certs[0])
    if chosen.hypotheses_ok:
        chosen = prop5_for_roles(t, chosen.q_role, chosen.r_role)
    chosen.alternatives = [
        {
            "q_role": int_str(c.q_role),
            "v": int_str(c.v),
            "q_gt_p2": c.q_gt_p2,
            "v_large": c.v_large,
            "u_le_mu": c.u_le_mu,
        }
        for c in certs
    ]
    return chosen


# ---------------------------------------------------------------------------
# Lemma 4


@dataclass(frozen=True)
class Lemma4Witness:
    i: int
    j: int
    x_q: int  # <q^i>_P
    x_r: int  # <r^j>_P
    P: int

    @property
    def spread(self) -> int:
        return min(self.x_q, self.P - self.x_q, self.x_r, self.P - self.x_r)


def _check_epsilon(epsilon: Fraction) -> Fraction:
    epsilon = parse_fraction(epsilon)
    if not 0 < epsilon < Fraction(1, 4):
        raise ValueError(f"epsilon must lie in (0, 1/4), got {epsilon}")
    return epsilon


def lemma4_search(p: int, q: int, r: int, a: int, epsilon) -> Lemma4Witness | None:
    """Smallest i (then smallest j) with <q^i r^j>_P = 1 and all four residues far from 0.

    "Far" means ``min(<q^i>, P - <q^i>, <r^j>, P - <r^j>) > (1/4 - epsilon) P``.
    Since r^j must be the inverse of q^i, only i is enumerated; membership
    of that inverse in the subgroup generated by r is a discrete log.
    """
    epsilon = _check_epsilon(epsilon)
    if math.gcd(q, p) != 1 or math.gcd(r, p) != 1:
        raise ValueError("q and r must be coprime to p")
    mod_P = PrimePowerModulus(p, a)
    P = mod_P.value
    bound = (Fraction(1, 4) - epsilon) * P
    order_q = mult_order(q, P, mod_P.totient_factors()) if P > 1 else 1
    x = 1
    for i in range(order_q):
        y = pow(x, -1, P)
        if min(x, P - x, y, P - y) > bound:
            ans = dlog_prime_power(r, y, mod_P)
            if ans is not None:
                wit = Lemma4Witness(i=i, j=ans.exponent, x_q=x, x_r=y, P=P)
                assert pow(q, wit.i, P) * pow(r, wit.j, P) % P == 1 and wit.spread > bound
                return wit
        x = x * q % P
    return None


# ---------------------------------------------------------------------------
# Theorem 1


@dataclass
class Thm1Certificate:
    p: int
    q: int
    r: int
    a: int
    epsilon: Fraction
    slack_exponent: int
    i1: int
    j1: int
    k1: int
    b: int
    t2: int
    j2: int
    k2: int
    c: int
    d: int
    P: int
    Q: int
    phi_P: int
    phi_Q: int
    u: int
    v: int
    x_Q: int
    x_R: int
    C: int
    q_prime_sign: int
    r_prime_sign: int
    lift: int = 0
    witness_plus: int | None = None  # coefficient values; indices follow from R
    witness_minus: int | None = None
    chi_claims: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def slack_warning(self) -> bool:
        return self.slack_exponent < 6

    @property
    def r_digits(self) -> int:
        return _digits_estimate(self.r, self.c)

    def R(self, max_digits: int = DEFAULT_MAX_R_DIGITS) -> int:
        if self.r_digits > max_digits:
            raise ResourceCapError(f"R = {self.r}^{self.c} exceeds {max_digits} digits")
        return self.r**self.c

    def triple(self, max_digits: int = DEFAULT_MAX_R_DIGITS) -> Triple:
        return make_triple(self.P, self.Q, self.R(max_digits))

    def witness_index_pair(self, R: int) -> tuple[int, int]:
        _, _, plus, minus = witness_indices(self.P, self.Q, R, self.u, self.C, self.q_prime_sign)
        return plus, minus

    def to_dict(self) -> dict:
        d = _stringify(asdict(self))
        d["kind"] = "thm1"
        d["slack_warning"] = self.slack_warning
        d["chi_claims"] = dict(self.chi_claims)
        return d


def thm1_construct(
    p: int,
    q: int,
    r: int,
    a: int,
    epsilon,
    slack_exponent: int = 6,
    *,
    lift: int = 0,
    max_t: int | None = None,
    evaluate_witnesses: bool = True,
    max_r_digits: int = DEFAULT_MAX_R_DIGITS,
) -> Thm1Certificate:
    """Exponents b, c so that (p^a, q^b, r^c) has every |n| <= C as a coefficient.

    Follows the Lemma 4 pair (i1, j1) through Q = q^(k1 phi(P) - i1) with
    Q > P^slack, then scans t = 0, 1, ... for <y_R r^(j1 + d t)>_Q in
    (Q - Q/P^2, Q) and solves for k2 so that R = r^(k2 phi(P) - j1) makes
    that residue the Prop. 5 parameter v.

    Raises HypothesisError when Lemma 4 finds nothing at this ``a`` or the
    scan over t is exhausted.
    """
    epsilon = _check_epsilon(epsilon)
    if slack_exponent < 2:
        raise ValueError("slack_exponent must be >= 2")
    for x in (p, q, r):
        if not is_prime(x):
            raise ValueError(f"{x} is not prime")
    if len({p, q, r}) != 3:
        raise ValueError("p, q, r must be distinct primes")
    notes: list[str] = []
    if slack_exponent < 6:
        log.warning("slack exponent %d is below 6; fine for desk-scale runs only", slack_exponent)
        notes.append(f"reduced slack: Q > P^{slack_exponent} instead of P^6")

    wit = lemma4_search(p, q, r, a, epsilon)
    if wit is None:
        raise HypothesisError(f"no Lemma 4 witness at a={a}, epsilon={epsilon}")
    i1, j1 = wit.i, wit.j
    mod_P = PrimePowerModulus(p, a)
    P, phi_P = mod_P.value, mod_P.totient

    target = P**slack_exponent
    k1 = 1
    while k1 * phi_P - i1 < 1 or not _exceeds(q, k1 * phi_P - i1, target):
        k1 += 1
    b = k1 * phi_P - i1
    mod_Q = PrimePowerModulus(q, b)
    Q, phi_Q = mod_Q.value, mod_Q.totient
    d = math.gcd(phi_P, phi_Q)
    if d != math.gcd(p - 1, q - 1):
        notes.append(f"gcd(phi(P), phi(Q)) = {d} differs from gcd(p-1, q-1) = {math.gcd(p - 1, q - 1)}")

    y_R = pow(P, -1, Q)
    step = pow(r, d, Q)
    horizon = mult_order(step, Q, mod_Q.totient_factors())
    if max_t is not None:
        horizon = min(horizon, max_t)
    val = y_R * pow(r, j1, Q) % Q
    P2 = P * P
    t2 = None
    for t in range(horizon):
        if val * P2 > Q * (P2 - 1):
            t2 = t
            break
        val = val * step % Q
    if t2 is None:
        raise HypothesisError(f"no t in [0, {horizon}) puts the residue in (Q - Q/P^2, Q)")
    j2 = j1 + d * t2

    # k * phi(P) + d * t2 == 0 (mod phi(Q)); d divides both sides
    period = phi_Q // d
    k2 = (-t2) * pow(phi_P // d, -1, period) % period if period > 1 else 0
    while k2 < 1 or k2 * phi_P - j1 < 1 or not _exceeds(r, k2 * phi_P - j1, P):
        k2 += period
    k2 += lift * period
    c = k2 * phi_P - j1

    R_mod_P, R_mod_Q = pow(r, c, P), pow(r, c, Q)
    u = pow(Q * R_mod_P, -1, P)
    v = pow(P * R_mod_Q, -1, Q)
    x_Q, x_R = u * Q % P, u * R_mod_P % P
    C = min(x_Q, x_R, P - x_Q, P - x_R) // u
    if u != 1:
        raise ConsistencyError(f"expected u = 1, got {u}")
    if v != val:
        raise ConsistencyError("v does not match the residue found in the t scan")
    if not (Q > P2 and v * P2 > Q * (P2 - 1) and C > (Fraction(1, 4) - epsilon) * P):
        raise ConsistencyError("Prop. 5 hypotheses fail for the constructed triple")

    cert = Thm1Certificate(
        p=p,
        q=q,
        r=r,
        a=a,
        epsilon=epsilon,
        slack_exponent=slack_exponent,
        i1=i1,
        j1=j1,
        k1=k1,
        b=b,
        t2=t2,
        j2=j2,
        k2=k2,
        c=c,
        d=d,
        P=P,
        Q=Q,
        phi_P=phi_P,
        phi_Q=phi_Q,
        u=u,
        v=v,
        x_Q=x_Q,
        x_R=x_R,
        C=C,
        q_prime_sign=1 if x_Q < P - x_Q else -1,
        r_prime_sign=1 if x_R < P - x_R else -1,
        lift=lift,
        notes=notes,
    )
    if evaluate_witnesses:
        if cert.r_digits > max_r_digits:
            cert.notes.append(f"witnesses not evaluated: R has about {cert.r_digits} digits")
        else:
            _evaluate_thm1_witnesses(cert)
    return cert


def _evaluate_thm1_witnesses(cert: Thm1Certificate) -> None:
    R = cert.r**cert.c
    t = make_triple(cert.P, cert.Q, R)
    p5 = prop5_for_roles(t, cert.Q, R)
    if (p5.u, p5.v, p5.C) != (cert.u, cert.v, cert.C):
        raise ConsistencyError("Prop. 5 quantities of the expanded triple disagree with the residues")
    assert p5.witness_plus is not None and p5.witness_minus is not None
    cert.witness_plus = p5.witness_plus[1]
    cert.witness_minus = p5.witness_minus[1]
    cert.chi_claims = p5.chi_claims


# ---------------------------------------------------------------------------
# the flat family {3^a, 11^b, 2^c}


@dataclass
class FlatResult:
    a: int
    b: int
    c: int
    P: int
    Q: int
    set_min: int
    set_max: int
    method: str

    def to_dict(self) -> dict:
        return {
            "a": int_str(self.a),
            "b": int_str(self.b),
            "c": int_str(self.c),
            "P": int_str(self.P),
            "Q": int_str(self.Q),
            "R": f"2^{self.c}",
            "set": list(range(self.set_min, self.set_max + 1)),
            "method": self.method,
        }


def flat_family_check(a: int, b: int, max_cells: int = DEFAULT_MAX_CELLS) -> FlatResult:
    """Coefficient set of (3^a, 11^b, 2^c) with c the order of 2 mod 3^a 11^b."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    P, Q = 3**a, 11**b
    c = mult_order(2, P * Q)
    t = make_triple(P, Q, 2**c)
    dense = t.f_deg + 1 <= max_cells
    res = coeff_set(t, max_cells=max_cells)
    return FlatResult(a, b, c, P, Q, res.set_min, res.set_max, "dense" if dense else "blocks")


def certificate_to_dict(cert) -> dict:
    return cert.to_dict()
