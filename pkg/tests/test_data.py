from __future__ import annotations

import shutil

import pytest

from coxblock import data as datamod
from coxblock.brauer import build_hlm_tree, series_from_data
from coxblock.data import DataError, bundled_dir, load_data, resolve_data_dir, write_checksums


@pytest.fixture
def override(tmp_path):
    d = tmp_path / "data"
    d.mkdir()
    return d


def test_default_load_is_valid():
    bundle = load_data(use_env=False)
    assert set(bundle.orbits) == {"G2", "F4", "E6", "E7", "E8"}
    assert len(bundle.table1) == 11
    assert set(bundle.series) == {"F4", "2G2"}
    assert bundle.fixtures["F4"].ell == 13
    assert [r.node for r in bundle.planar["2G2"]] == ["exc"]


def test_truncated_orbit_table_reports_location(override):
    text = (bundled_dir() / datamod.ORBITS_FILE).read_text(encoding="utf-8")
    cut = text.index("F4\tB2\t")
    (override / datamod.ORBITS_FILE).write_text(text[: cut + 6], encoding="utf-8")
    with pytest.raises(DataError) as info:
        load_data(override, use_env=False)
    err = info.value
    assert err.path == override / datamod.ORBITS_FILE
    assert err.line == text[: cut].count("\n") + 1
    assert f"{datamod.ORBITS_FILE}:{err.line}:" in str(err)


def test_wrong_dimension_is_caught(override):
    text = (bundled_dir() / datamod.ORBITS_FILE).read_text(encoding="utf-8")
    (override / datamod.ORBITS_FILE).write_text(text.replace("G2\tA1\t0,1\t6", "G2\tA1\t0,1\t7"), encoding="utf-8")
    with pytest.raises(DataError, match="stated dimension 7"):
        load_data(override, use_env=False)


def test_checksum_mismatch(override):
    shutil.copy(bundled_dir() / datamod.PLANAR_FILE, override / datamod.PLANAR_FILE)
    write_checksums(override)
    with open(override / datamod.PLANAR_FILE, "a", encoding="utf-8") as fh:
        fh.write("# edited\n")
    with pytest.raises(DataError, match="checksum mismatch"):
        load_data(override, use_env=False)


def test_missing_directory():
    with pytest.raises(DataError, match="does not exist"):
        load_data("/nonexistent/coxblock-data", use_env=False)


def test_extra_series_file_is_merged(override):
    (override / "series_2B2.tsv").write_text(
        "# Suzuki groups, ell | q^2 - sqrt2 q + 1\n"
        "2B2\t1\t1\t0\t0\tSt_G;1_G\n"
        "2B2\tc1\t8\t1\t2\t²B2[a]\n"
        "2B2\tc2\t8\t3\t3\t²B2[b]\n",
        encoding="utf-8",
    )
    bundle = load_data(override, use_env=False)
    assert set(bundle.series) == {"F4", "2G2", "2B2"}
    tree = build_hlm_tree(series_from_data("2B2", bundle), 1, "2B2")
    assert len(tree.nodes) == 5


def test_extra_series_overlap_rejected(override):
    (override / "series_bad.tsv").write_text("A3\t1\t1\t0\t0\ta;b\nA3\tx\t2\t1\t1\tc\n", encoding="utf-8")
    with pytest.raises(DataError) as info:
        load_data(override, use_env=False)
    assert info.value.line == 2


def test_extra_series_cannot_redefine(override):
    (override / "series_f4.tsv").write_text("F4\t1\t1\t0\t0\ta\n", encoding="utf-8")
    with pytest.raises(DataError, match="already defined"):
        load_data(override, use_env=False)


def test_flag_wins_over_environment(monkeypatch, tmp_path):
    monkeypatch.setenv(datamod.ENV_VAR, str(tmp_path / "from-env"))
    assert resolve_data_dir(str(tmp_path / "from-flag")) == tmp_path / "from-flag"
    assert resolve_data_dir(None) == tmp_path / "from-env"
    monkeypatch.delenv(datamod.ENV_VAR)
    assert resolve_data_dir(None) is None


def test_environment_override_is_used(monkeypatch, override):
    text = (bundled_dir() / datamod.FIXTURES_FILE).read_text(encoding="utf-8")
    (override / datamod.FIXTURES_FILE).write_text(text.replace("F4\t2\t13\t1\t4", "F4\t2\t13\t2\t4"), encoding="utf-8")
    monkeypatch.setenv(datamod.ENV_VAR, str(override))
    assert load_data().fixtures["F4"].m_exc == 2
    assert load_data(use_env=False).fixtures["F4"].m_exc == 1


def test_regenerated_table_matches_bundle():
    import importlib.util
    from pathlib import Path

    script = Path(__file__).resolve().parents[1] / "scripts" / "generate_data.py"
    spec = importlib.util.spec_from_file_location("generate_data", script)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    assert module.render() == (bundled_dir() / datamod.ORBITS_FILE).read_text(encoding="utf-8")
