"""Arithmetic of the Coxeter case: admissible primes, eigenvalue classes, hypotheses."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import prod
from typing import Optional

from .polynomial import QuadraticNumber, cyclotomic
from .rootsystem import (
    CartanType,
    build_root_system,
    coxeter_element,
    coxeter_number,
    root_phi_map,
    torus_order,
    twisted_coxeter_order,
)

_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}

_BAD_PRIMES = {
    "A": (),
    "B": (2,),
    "C": (2,),
    "D": (2,),
    "G": (2, 3),
    "F": (2, 3),
    "E6": (2, 3),
    "E7": (2, 3),
    "E8": (2, 3, 5),
}


def reflection_degrees(t: CartanType) -> tuple[int, ...]:
    n = t.rank
    if t.family == "A":
        return tuple(range(2, n + 2))
    if t.family in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    if t.family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    return _DEGREES[f"{t.family}{n}"]


def _twisted_weyl_order(t: CartanType) -> int:
    """|W^F| for twisted types (the Weyl group of the relative root system)."""
    f, n = t.family, t.rank
    if t.twist == 3:
        return 12
    if f == "A":
        k = (n + 1) // 2
        return 2**k * _factorial(k)
    if f == "D":
        return 2 ** (n - 1) * _factorial(n - 1)
    return {"E6": 1152, "B2": 2, "G2": 2, "F4": 16}[f"{f}{n}"]


def _factorial(k: int) -> int:
    return prod(range(1, k + 1))


def weyl_order(t: CartanType) -> int:
    if isinstance(t, str):
        t = CartanType.parse(t)
    if t.twist == 1:
        return prod(reflection_degrees(t))
    return _twisted_weyl_order(t)


def weyl_order_bruteforce(t: CartanType) -> int:
    """|W^F| by enumerating W as permutations of the roots (small ranks only)."""
    if isinstance(t, str):
        t = CartanType.parse(t)
    rs = build_root_system(t)
    index = rs.root_index
    gens = []
    for i in rs.simple_roots:
        gens.append(tuple(index[rs.reflect(i, r)] for r in rs.roots))
    identity = tuple(range(len(rs.roots)))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                x = tuple(g[w[k]] for k in range(len(w)))
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    phi = root_phi_map(rs)
    pi = tuple(index[phi[r]] for r in rs.roots)
    # w is F-stable iff pi w = w pi as permutations of the roots
    return sum(1 for w in seen if all(pi[w[k]] == w[pi[k]] for k in range(len(w))))


def good_prime(t: CartanType, p: int) -> bool:
    if isinstance(t, str):
        t = CartanType.parse(t)
    key = t.family if t.family in "ABCDFG" else f"E{t.rank}"
    return p not in _BAD_PRIMES[key]


class Hypothesis(enum.Enum):
    NO_RESTRICTION = "NoRestriction"
    GOOD_PRIME = "GoodPrime"
    GOOD_PRIME_PLUS_HLM = "GoodPrimePlusHLM"
    NOT_COVERED = "NotCovered"

    def __str__(self) -> str:
        return self.value


def theorem_hypotheses(t: CartanType) -> Hypothesis:
    """Which hypothesis on p the torsion-freeness result needs for this type.

    2F4 is absent from the theorem's list and is reported as NOT_COVERED.
    """
    if isinstance(t, str):
        t = CartanType.parse(t)
    f, n, tw = t.family, t.rank, t.twist
    if f == "A":
        return Hypothesis.NO_RESTRICTION
    if f in "BC" and n == 2:
        return Hypothesis.NO_RESTRICTION
    if f == "D" and (n == 4 or tw in (2, 3)):
        return Hypothesis.NO_RESTRICTION
    if f == "G":
        return Hypothesis.NO_RESTRICTION
    if f == "F":
        return Hypothesis.NOT_COVERED if tw == 2 else Hypothesis.GOOD_PRIME
    if f in "BCD" or (f == "E" and n == 6):
        return Hypothesis.GOOD_PRIME
    return Hypothesis.GOOD_PRIME_PLUS_HLM


# --- Coxeter-case parameters ------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def prime_power_base(q: int) -> Optional[int]:
    """p if q = p^k with k >= 1, else None."""
    if q < 2:
        return None
    p = next(k for k in range(2, q + 1) if q % k == 0)
    while q % p == 0:
        q //= p
    return p if q == 1 else None


def multiplicative_order(a: int, ell: int) -> Optional[int]:
    a %= ell
    if a == 0:
        return None
    x, k = a, 1
    while x != 1:
        x = x * a % ell
        k += 1
    return k


@dataclass(frozen=True)
class CoxeterCaseParams:
    """A concrete instance: q (or Q = q^2 for 2B2, 2G2, 2F4) and the prime ell."""

    cartan_type: CartanType
    q: int
    ell: int

    @classmethod
    def of(cls, t, q: int, ell: int) -> "CoxeterCaseParams":
        return cls(CartanType.parse(t) if isinstance(t, str) else t, q, ell)

    @property
    def delta(self) -> int:
        return self.cartan_type.delta

    @cached_property
    def h(self) -> int:
        ch = coxeter_number(self.cartan_type)
        if ch.h is not None:
            return ch.h
        return twisted_coxeter_order(build_root_system(self.cartan_type))

    @property
    def p(self) -> Optional[int]:
        return prime_power_base(self.q)

    @property
    def classes(self) -> int:
        return self.h // self.delta


@dataclass(frozen=True)
class AdmissibilityReport:
    params: CoxeterCaseParams
    ell_prime: bool
    q_prime_power: bool
    ell_ne_p: bool
    weyl_order: int
    ell_coprime_to_weyl: bool
    polynomial: str
    polynomial_value: int
    ell_divides: bool
    q_order: Optional[int]
    expected_order: int
    primitive: bool
    reasons: tuple[str, ...] = ()

    @property
    def admissible(self) -> bool:
        return (
            self.ell_prime
            and self.q_prime_power
            and self.ell_ne_p
            and self.ell_coprime_to_weyl
            and self.ell_divides
            and self.primitive
        )

    def to_json(self) -> dict:
        t = self.params.cartan_type
        return {
            "type": str(t),
            "q": self.params.q,
            "ell": self.params.ell,
            "h": self.params.h,
            "delta": self.params.delta,
            "ell_prime": self.ell_prime,
            "q_prime_power": self.q_prime_power,
            "ell_ne_p": self.ell_ne_p,
            "weyl_order": self.weyl_order,
            "ell_coprime_to_weyl": self.ell_coprime_to_weyl,
            "polynomial": self.polynomial,
            "polynomial_value": self.polynomial_value,
            "ell_divides": self.ell_divides,
            "q_order": self.q_order,
            "expected_order": self.expected_order,
            "primitive": self.primitive,
            "admissible": self.admissible,
            "reasons": list(self.reasons),
        }


def sqrt_q(Q: int, radicand: int) -> QuadraticNumber:
    """q = d^m sqrt(d) for Q = d^(2m+1)."""
    k, rest = 0, Q
    while rest % radicand == 0:
        rest //= radicand
        k += 1
    if rest != 1 or k % 2 == 0:
        raise ValueError(f"Q = {Q} is not an odd power of {radicand}")
    return QuadraticNumber.of(0, radicand ** ((k - 1) // 2), radicand)


@lru_cache(maxsize=None)
def _coxeter_torus(t: CartanType):
    rs = build_root_system(t)
    return torus_order(rs, coxeter_element(rs))


def governing_value(params: CoxeterCaseParams) -> tuple[str, int]:
    """(polynomial, value): Phi_h(q), or |T_c| for the Suzuki and Ree types."""
    t = params.cartan_type
    if t.very_twisted:
        poly = _coxeter_torus(t)
        value = poly(sqrt_q(params.q, t.radicand))
        if not value.is_rational() or value.a.denominator != 1:
            raise ValueError(f"torus order at Q={params.q} is not a rational integer: {value}")
        return str(poly), int(value.a)
    poly = cyclotomic(params.h)
    return f"Φ{params.h}(q) = {poly}", poly(params.q)


def coxeter_case_check(params: CoxeterCaseParams) -> AdmissibilityReport:
    """Itemised admissibility of (q, ell); never raises on failure."""
    t = params.cartan_type
    reasons = []
    ell_prime = is_prime(params.ell)
    if not ell_prime:
        reasons.append(f"ell = {params.ell} is not prime")
    p = params.p
    q_pp = p is not None and (not t.very_twisted or p == t.radicand)
    if not q_pp:
        expect = f"an odd power of {t.radicand}" if t.very_twisted else "a prime power"
        reasons.append(f"q = {params.q} is not {expect}")
    ell_ne_p = p is None or params.ell != p
    if not ell_ne_p:
        reasons.append("ell equals the defining characteristic")
    w = weyl_order(t)
    coprime = w % params.ell != 0 if params.ell > 1 else False
    if not coprime:
        reasons.append(f"ell divides |W^F| = {w}")
    try:
        poly, value = governing_value(params)
    except ValueError as exc:
        poly, value = "", 0
        reasons.append(str(exc))
    divides = params.ell > 1 and value != 0 and value % params.ell == 0
    if not divides:
        reasons.append(f"ell does not divide {value}")
    # q (or Q = q^2 for the very twisted types) must have the full order in k^x
    base = params.q
    expected = params.classes if t.very_twisted else params.h
    order = multiplicative_order(base, params.ell) if ell_prime and params.q % params.ell else None
    primitive = order == expected
    if not primitive:
        what = "Q" if t.very_twisted else "q"
        reasons.append(f"{what} has order {order} modulo ell, expected {expected}")
    return AdmissibilityReport(
        params, ell_prime, q_pp, ell_ne_p, w, coprime, poly, value, divides, order, expected, primitive, tuple(reasons)
    )


@dataclass(frozen=True)
class EigenvalueClass:
    j: int
    residue: int


class NotAdmissible(ValueError):
    pass


def eigenvalue_classes(params: CoxeterCaseParams) -> list[EigenvalueClass]:
    """Residues of q^(j delta) mod ell for j = 0 .. h/delta - 1."""
    report = coxeter_case_check(params)
    if not report.admissible:
        raise NotAdmissible("; ".join(report.reasons))
    t = params.cartan_type
    # for the very twisted types q^(2j) = Q^j
    step = params.q if t.very_twisted else pow(params.q, params.delta, params.ell)
    out = [EigenvalueClass(j, pow(step, j, params.ell)) for j in range(params.classes)]
    if len({c.residue for c in out}) != len(out):
        raise AssertionError("eigenvalue residues are not distinct")
    return out


def ell_part(n: int, ell: int) -> int:
    out = 1
    while n % ell == 0:
        n //= ell
        out *= ell
    return out


def exceptional_multiplicity(params: CoxeterCaseParams) -> int:
    """(|T_ell| - 1) / (h/delta): multiplicity of the exceptional node."""
    report = coxeter_case_check(params)
    if not report.admissible:
        raise NotAdmissible("; ".join(report.reasons))
    order = ell_part(report.polynomial_value, params.ell)
    m, rem = divmod(order - 1, params.classes)
    if rem:
        raise AssertionError("h/delta does not divide |T_ell| - 1")
    return m


def admissible_primes(t, q: int, bound: int) -> list[int]:
    return [ell for ell in range(2, bound + 1) if is_prime(ell) and coxeter_case_check(CoxeterCaseParams.of(t, q, ell)).admissible]
