from __future__ import annotations

from math import gcd

import pytest
import sympy

from coxblock.blockarith import (
    CoxeterCaseParams,
    Hypothesis,
    NotAdmissible,
    admissible_primes,
    coxeter_case_check,
    eigenvalue_classes,
    exceptional_multiplicity,
    good_prime,
    multiplicative_order,
    theorem_hypotheses,
    weyl_order,
    weyl_order_bruteforce,
)
from coxblock.polynomial import cyclotomic
from coxblock.rootsystem import CartanType

P = CoxeterCaseParams.of


@pytest.mark.parametrize("name,order", [("A2", 6), ("F4", 1152), ("G2", 12), ("E8", 696729600), ("D5", 1920)])
def test_weyl_orders(name, order):
    assert weyl_order(CartanType.parse(name)) == order


@pytest.mark.parametrize(
    "name", ["A3", "B3", "C3", "D4", "G2", "F4", "2A2", "2A3", "2A4", "2A5", "2D4", "2D5", "3D4", "2B2", "2G2", "2F4"]
)
def test_weyl_order_against_enumeration(name):
    assert weyl_order(name) == weyl_order_bruteforce(name)


def test_good_primes():
    assert good_prime("A5", 2)
    assert not good_prime("F4", 3)
    assert good_prime("E8", 7)
    assert not good_prime("E8", 5)


# Hypotheses of the torsion-freeness result, one entry per type it names.
HYPOTHESES = {
    "A4": "NoRestriction", "2A5": "NoRestriction", "B2": "NoRestriction", "C2": "NoRestriction",
    "2B2": "NoRestriction", "D4": "NoRestriction", "2D5": "NoRestriction", "3D4": "NoRestriction",
    "G2": "NoRestriction", "2G2": "NoRestriction",
    "B3": "GoodPrime", "C5": "GoodPrime", "D6": "GoodPrime", "E6": "GoodPrime", "2E6": "GoodPrime",
    "F4": "GoodPrime",
    "E7": "GoodPrimePlusHLM", "E8": "GoodPrimePlusHLM",
    "2F4": "NotCovered",
}


@pytest.mark.parametrize("name,expected", sorted(HYPOTHESES.items()))
def test_theorem_hypotheses(name, expected):
    assert str(theorem_hypotheses(name)) == expected


def test_f4_fixture_admissible():
    report = coxeter_case_check(P("F4", 2, 13))
    assert report.admissible, report.reasons
    assert report.polynomial_value == 13 == cyclotomic(12)(2)
    assert report.q_order == 12 == multiplicative_order(2, 13)
    assert 1152 % 13 != 0


def test_f4_cyclotomic_divisibility():
    q, ell, h = 2, 13, 12
    assert (q**h - 1) % cyclotomic(h)(q) == 0
    assert cyclotomic(h)(q) % ell == 0
    for d in sympy.divisors(h)[:-1]:
        assert cyclotomic(d)(q) % ell != 0


def test_ree_fixture_admissible():
    report = coxeter_case_check(P("2G2", 27, 19))
    assert report.admissible, report.reasons
    assert report.polynomial_value == 27 - 9 + 1 == 19


def test_inadmissible_cases_are_itemised():
    report = coxeter_case_check(P("A1", 3, 2))
    assert not report.admissible
    assert not report.ell_coprime_to_weyl
    assert report.reasons
    assert not coxeter_case_check(P("F4", 6, 13)).admissible  # q not a prime power
    assert not coxeter_case_check(P("F4", 2, 7)).admissible
    assert not coxeter_case_check(P("2G2", 9, 19)).admissible  # even power of 3
    assert not coxeter_case_check(P("F4", 13, 13)).admissible


def test_eigenvalue_classes():
    classes = eigenvalue_classes(P("F4", 2, 13))
    assert [c.residue for c in classes] == [1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7]
    assert classes[0].residue == 1
    ree = eigenvalue_classes(P("2G2", 27, 19))
    assert len(ree) == 6 == len({c.residue for c in ree})
    with pytest.raises(NotAdmissible):
        eigenvalue_classes(P("A1", 3, 2))


@pytest.mark.parametrize("name,q", [("A3", 4), ("B3", 3), ("D4", 3), ("E6", 2), ("2A4", 3), ("3D4", 2), ("2E6", 2), ("E8", 2)])
def test_order_of_q_and_distinct_residues(name, q):
    for ell in admissible_primes(name, q, 2000):
        params = P(name, q, ell)
        assert multiplicative_order(q, ell) == params.h
        res = [c.residue for c in eigenvalue_classes(params)]
        assert len(set(res)) == len(res) == params.h // params.delta


def test_exceptional_multiplicity_matches_fixtures():
    assert exceptional_multiplicity(P("F4", 2, 13)) == 1
    assert exceptional_multiplicity(P("2G2", 27, 19)) == 3


def test_admissible_primes():
    assert admissible_primes("F4", 2, 200) == [13]
    assert admissible_primes("2G2", 27, 100) == [19]
    assert admissible_primes("2B2", 8, 100) == [5]
    assert admissible_primes("2F4", 8, 100) == [37]
    for ell in admissible_primes("E8", 3, 5000):
        assert gcd(ell, weyl_order("E8")) == 1
