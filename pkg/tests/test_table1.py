from __future__ import annotations

import time

import pytest

from coxblock.data import default_data
from coxblock.nilpotent.table1 import (
    expand_weights,
    instantiate,
    instantiate_row,
    row_instances,
    verify_instance,
    verify_table1,
)


def _row(row_id):
    return next(r for r in default_data().table1 if r.row_id == row_id)


def test_templates():
    assert instantiate("2A{2*n}", 3) == "2A6"
    assert instantiate("[1];[{2*n-1}]", 4) == "[1];[7]"
    assert expand_weights("2^3,0") == (2, 2, 2, 0)
    assert expand_weights("2^0,1,1") == (1, 1)
    with pytest.raises(ValueError):
        instantiate("{n**2}", 2)
    with pytest.raises(ValueError):
        instantiate("A{n}", None)


def test_full_verification_passes_quickly():
    start = time.perf_counter()
    report = verify_table1(2, 8)
    elapsed = time.perf_counter() - start
    assert report.passed, [r.problems for r in report.rows if not r.passed]
    assert elapsed < 10
    for row in report.rows:
        if row.group == "-":
            lemma = row.lemma
            assert lemma.uI_in_u2 and lemma.dim_identity
            assert lemma.dim_ambient == lemma.dim_levi + 2 * lemma.u_I


def test_all_instances_generated():
    instances = row_instances(default_data().table1, 2, 8)
    keys = {i.key for i in instances}
    assert "2A2-2A2n[n=2]" in keys and "2A2-2A2n[n=8]" in keys
    assert "B2-Cn[n=2]" not in keys and "B2-Cn[n=3]" in keys
    assert "D4-E8" in keys


def test_twisted_a_row():
    inst = instantiate_row(_row("2A2-2A2n"), 3)
    assert inst.ambient_type == "2A6"
    assert inst.ambient_weights == (2, 2, 1, 1, 2, 2)
    assert inst.ambient_label == "[1,6]"
    assert verify_instance(inst).passed


def test_b_row():
    inst = instantiate_row(_row("B2-Bn"), 4)
    assert inst.ambient_weights == (2, 2, 2, 0)
    assert inst.ambient_label == "[1];[7]"
    assert verify_instance(inst).passed


def test_e7a5_branch_resolved_by_dimension():
    report = verify_table1()
    assert report.group_resolution() == {"E7a5": "E6-E7a5:branch0"}
    rows = {r.key: r for r in report.rows}
    good, bad = rows["E6-E7a5:branch0"], rows["E6-E7a5:branch2"]
    assert good.passed and good.lemma.dim_ambient == 112 == 58 + 2 * 27
    assert not bad.passed and not bad.ambient_consistent


def test_degenerate_c2_is_reported_not_raised():
    report = verify_instance(instantiate_row(_row("B2-Cn"), 2))
    assert not report.passed
    assert any("[];[1,1]" in p for p in report.problems)


def test_json_is_deterministic():
    a = verify_table1(2, 4).to_json()
    b = verify_table1(2, 4, workers=4).to_json()
    assert a == b
    assert a["schema_version"] == 1
