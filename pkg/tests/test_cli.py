from __future__ import annotations

import ast
import inspect
import io
import json
from pathlib import Path

import pytest

from coxblock import cli

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def no_env_override(monkeypatch):
    monkeypatch.delenv("COXBLOCK_DATA", raising=False)


def test_verify_table1_all_pass():
    code, text = run("verify-table1", "--max-rank", "6")
    assert code == 0
    assert text.rstrip().endswith("instances)") and "overall: pass" in text


def test_verify_table1_json():
    code, text = run("verify-table1", "--max-n", "3", "--format", "json")
    payload = json.loads(text)
    assert code == 0 and payload["schema_version"] == 1 and payload["passed"]
    assert payload["groups"]["E7a5"]["resolved"] == "E6-E7a5:branch0"


def test_lemma32_negative_control(capsys):
    code, text = run("lemma32", "--type", "A3", "--weights", "2,0,2", "--subset", "2")
    assert code == 1
    flagged = [line for line in text.splitlines() if "<-- fails" in line]
    assert len(flagged) == 1 and "cond_iii" in flagged[0]


def test_lemma32_json_pass():
    code, text = run("lemma32", "--type", "E6", "--weights", "2,0,0,2,0,2", "--subset", "2,3,4,5", "--format", "json")
    assert code == 0 and json.loads(text)["passed"]


def test_tree_dot_matches_golden():
    code, text = run("tree", "--type", "F4", "--q", "2", "--ell", "13", "--emit", "dot")
    assert code == 0
    assert text == (GOLDEN / "F4.dot").read_text(encoding="utf-8")
    code, text = run("tree", "--type", "2G2", "--q", "27", "--ell", "19", "--emit", "dot")
    assert code == 0 and text == (GOLDEN / "2G2.dot").read_text(encoding="utf-8")


def test_tree_rejects_non_coxeter_case(capsys):
    code, _ = run("tree", "--type", "F4", "--q", "2", "--ell", "7")
    assert code == 1
    assert "not a Coxeter case" in capsys.readouterr().err


def test_tree_unknown_series(capsys):
    code, _ = run("tree", "--type", "E8", "--q", "2", "--ell", "31")
    assert code == 2
    assert "--data-dir" in capsys.readouterr().err


def test_coxeter_and_primes():
    code, text = run("coxeter", "--type", "2G2")
    assert code == 0 and "q^2 - √3q + 1" in text
    code, text = run("coxeter", "--type", "F4", "--format", "json")
    payload = json.loads(text)
    assert payload["h"] == 12 and payload["char_poly"]["coefficients"] == [1, 0, -1, 0, 1]
    code, text = run("primes", "--type", "F4", "--q", "2", "--bound", "100", "--format", "json")
    assert json.loads(text)["primes"] == [13]
    assert run("primes", "--type", "A1", "--q", "3", "--ell", "2")[0] == 1


def test_orbits():
    code, text = run("orbits", "--type", "G2")
    assert code == 0 and len(text.splitlines()) == 5
    code, text = run("orbits", "--type", "E6", "--name", "D4(a1)", "--format", "json")
    assert json.loads(text)["orbits"] == [{"label": "D4(a1)", "weights": [0, 0, 0, 2, 0, 0], "dimension": 58}]
    code, text = run("orbits", "--type", "A3", "--weights", "2,0,2")
    assert code == 0 and text.startswith("[1,3]")
    assert run("orbits", "--type", "A3", "--weights", "1,0,0")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["coxeter", "--type", "E9"],
        ["lemma32", "--type", "A3", "--weights", "2,x,2"],
        ["lemma32", "--type", "A3", "--weights", "2,0"],
        ["lemma32", "--type", "A3", "--weights", "2,0,2", "--subset", "7"],
        ["orbits", "--type", "E6", "--name", "nonsense"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2
    assert capsys.readouterr().err


def test_missing_data_dir(capsys):
    assert run("coxeter", "--type", "A2", "--data-dir", "/nonexistent/dir")[0] == 2
    assert "hint" in capsys.readouterr().err


def test_flag_beats_environment(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv("COXBLOCK_DATA", "/nonexistent/dir")
    assert run("coxeter", "--type", "A2")[0] == 2
    good = tmp_path / "empty"
    good.mkdir()
    assert run("coxeter", "--type", "A2", "--data-dir", str(good))[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-table1", "--max-n", "4", "--format", "json"],
        ["tree", "--type", "2G2", "--q", "27", "--ell", "19", "--emit", "json"],
        ["coxeter", "--type", "3D4", "--format", "json"],
    ],
)
def test_output_is_deterministic(argv):
    assert run(*argv) == run(*argv)


# Library entry points each command is expected to delegate to.
DELEGATES = {
    "cmd_verify_table1": ["verify_table1"],
    "cmd_lemma32": ["lemma32_check"],
    "cmd_orbits": ["diagram_from_label", "lookup_orbit", "diagram_label", "all_diagrams", "orbit_dimension_unchecked"],
    "cmd_coxeter": ["coxeter_element", "coxeter_number", "char_poly", "torus_order", "weyl_order"],
    "cmd_primes": ["admissible_primes", "coxeter_case_check"],
    "cmd_tree": ["coxeter_case_check", "bind_roots_of_unity", "exceptional_multiplicity", "build_hlm_tree", "serialize_tree"],
}


def test_cli_is_a_thin_layer():
    tree = ast.parse(inspect.getsource(cli))
    arithmetic = (ast.Mult, ast.Div, ast.FloorDiv, ast.Mod, ast.Pow, ast.Sub)
    offenders = [
        node.lineno for node in ast.walk(tree) if isinstance(node, ast.BinOp) and isinstance(node.op, arithmetic)
    ]
    assert offenders == []
    for name, delegates in DELEGATES.items():
        source = inspect.getsource(getattr(cli, name))
        for fn in delegates:
            assert fn in source, (name, fn)
