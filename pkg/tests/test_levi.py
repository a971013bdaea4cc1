from __future__ import annotations

import pytest

from coxblock.nilpotent.levi import ChainWitness, lemma32_check, levi_datum
from coxblock.rootsystem import CartanType, build_root_system

T = CartanType.parse


def rs_of(name):
    return build_root_system(T(name))


def test_levi_datum_examples():
    rs = rs_of("E7")
    full = levi_datum(rs, rs.simple_roots)
    assert full.u_I == ()
    e6 = levi_datum(rs, {1, 2, 3, 4, 5, 6})
    assert e6.label == "E6" and len(e6.u_I) == 27
    a1 = levi_datum(rs_of("A3"), {2})
    assert a1.label == "A1" and len(a1.u_I) == 5
    assert len(levi_datum(rs_of("D5"), {1, 3, 4}).u_I) == 20 - 4  # Levi A1+A2
    with pytest.raises(ValueError):
        levi_datum(rs_of("A3"), {4})


def test_negative_control_fails_only_cond_iii():
    report = lemma32_check(rs_of("A3"), (2, 0, 2), {2})
    assert report.failures() == ["cond_iii"]
    assert report.levi_label == "A1:[1,1]"
    assert report.dim_ambient == 10 and report.dim_levi == 0 and report.u_I == 5


def test_c4_chain_witness():
    # Bourbaki order: the long simple root is node 4.
    report = lemma32_check(rs_of("C4"), (2, 2, 0, 2), {3, 4})
    assert report.passed
    assert report.witnesses == (ChainWitness((1, 2), (3,), 2),)


def test_e6_two_singleton_chains():
    report = lemma32_check(rs_of("E6"), (2, 0, 0, 2, 0, 2), {2, 3, 4, 5})
    assert report.passed
    assert {(w.component, w.path, w.beta) for w in report.witnesses} == {((1,), (3,), 1), ((6,), (5,), 6)}


def test_e7a5_chain_of_length_two():
    report = lemma32_check(rs_of("E7"), (0, 0, 0, 2, 0, 0, 2), {1, 2, 3, 4, 5, 6})
    assert report.passed
    assert report.witnesses == (ChainWitness((7,), (5, 6), 7),)
    assert (report.dim_ambient, report.dim_levi, report.u_I) == (112, 58, 27)


def test_cond_ii_detects_non_two_outside_I():
    report = lemma32_check(rs_of("A3"), (2, 0, 2), {1})
    assert not report.cond_ii


def test_cond_i_detects_invalid_levi_diagram():
    report = lemma32_check(rs_of("A4"), (2, 1, 0, 2), {2, 3})
    assert not report.cond_i


def test_empty_chain_is_vacuous():
    # Regular orbit induced from the zero orbit of the torus.
    report = lemma32_check(rs_of("B3"), (2, 2, 2), set())
    assert report.passed
    assert all(w.path == () and w.beta is None for w in report.witnesses)


def test_report_json_shape():
    j = lemma32_check(rs_of("A3"), (2, 0, 2), {2}).to_json()
    assert set(j) >= {"cond_i", "cond_ii", "cond_iii", "uI_in_u2", "dim_identity", "witnesses", "passed"}
    assert j["passed"] is False
