# -*- coding: utf-8 -*-
"""
tests.test_cli.py - Landscape-Atlas
Created by NCagle
2025-02-22
      _
   __(.)<
~~~⋱___)~~~

╔═══════════╗
║ CLI Tests ║
╚═══════════╝
Tests for the landscape-atlas command line.

✅ Commands
    - counts, build, lookup, render, stats, verify, export, audit
✅ Exit codes
    - 1 verification failure, 2 usage, 3 capacity, 4 I/O
"""
import json

import pytest

from landscape_atlas.atlas.verify import CheckResult
from landscape_atlas.main import main, parse_fitness
from landscape_atlas.utils.errors import DomainError


pytestmark = pytest.mark.cli


@pytest.fixture(autouse=True)
def in_tmp_dir(tmp_path, monkeypatch):
    """Run every command from an empty directory: no config file, no default atlas."""
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _run(*argv: str) -> int:
    return main(["--no-progress", *argv])


"""
╔══════════╗
║ Commands ║
╚══════════╝
"""
def test_counts(capsys):
    assert _run("counts", "--n", "4") == 0
    out = capsys.readouterr().out
    assert "20922789888000" in out
    assert "5315654681981355" in out
    assert "54486432000" in out


def test_build_writes_default_path(in_tmp_dir, capsys):
    assert _run("build", "--n", "2") == 0
    assert "14 classes, 75 rankings" in capsys.readouterr().out
    assert (in_tmp_dir / "data" / "atlas" / "atlas_n2.jsonl").exists()


def test_build_with_out(in_tmp_dir):
    out = in_tmp_dir / "nested" / "one.jsonl"
    assert _run("build", "--n", "1", "--out", str(out)) == 0
    header = json.loads(out.read_text(encoding="utf-8").splitlines()[0])
    assert header["dimensions"] == {"1": {"classes": 2, "rankings": 3}}


def test_lookup(atlas_2d_file, capsys):
    assert _run("lookup", "--n", "2", "--fitness", "4.0,1.0,9.0,3.0", "--atlas", str(atlas_2d_file)) == 0
    out = capsys.readouterr().out
    assert "ranks CADB" in out
    assert "injective" in out
    assert "best-improvement" in out and "first-improvement" in out


def test_lookup_builds_in_memory_without_atlas(capsys):
    assert _run("lookup", "--n", "2", "--fitness", "2,3,4,1") == 0
    out = capsys.readouterr().out
    assert "1 strict" in out
    assert "(13/3)" in out


def test_render_fitness_to_stdout(capsys):
    assert _run("render", "--n", "2", "--fitness", "2,3,4,1") == 0
    assert capsys.readouterr().out.startswith("digraph landscape {")


def test_render_class_to_file(atlas_2d_file, in_tmp_dir):
    out = in_tmp_dir / "dot" / "class3.dot"
    assert _run("render", "--n", "2", "--class-id", "3", "--atlas", str(atlas_2d_file), "--out", str(out)) == 0
    assert out.read_text(encoding="utf-8").startswith("digraph class_3 {")


def test_stats(atlas_2d_file, in_tmp_dir, capsys):
    assert _run("stats", "--n", "2", "--atlas", str(atlas_2d_file), "--csv-dir", str(in_tmp_dir / "csv")) == 0
    out = capsys.readouterr().out
    assert "n=2: 14 classes" in out
    assert (in_tmp_dir / "csv" / "n2_best_success.csv").exists()
    assert (in_tmp_dir / "csv" / "n2_first_ert.csv").exists()


def test_verify_fast(capsys):
    assert _run("verify", "--level", "fast") == 0
    out = capsys.readouterr().out
    assert "❌" not in out
    assert "0 failed" in out


def test_export_and_audit(atlas_2d_file, in_tmp_dir, capsys):
    out = in_tmp_dir / "atlas.csv"
    assert _run("export", "--atlas", str(atlas_2d_file), "--out", str(out)) == 0
    assert out.exists()
    assert _run("audit", "--atlas", str(atlas_2d_file)) == 0
    assert "❌" not in capsys.readouterr().out


def test_parse_fitness():
    assert parse_fitness("1,2.5,-3") == [1.0, 2.5, -3.0]
    with pytest.raises(DomainError):
        parse_fitness("1,,2")


"""
╔════════════╗
║ Exit Codes ║
╚════════════╝
"""
def test_capacity_exit_code(capsys):
    assert _run("build", "--n", "4") == 3
    assert "error:" in capsys.readouterr().err


def test_counts_are_not_capped():
    assert _run("counts", "--n", "5") == 0


@pytest.mark.parametrize("argv", [
    ("lookup", "--n", "2", "--fitness", "a,b,c,d"),
    ("lookup", "--n", "2", "--fitness", "1,2,3"),
    ("render", "--n", "2"),
    ("--workers", "0", "counts", "--n", "2"),
    ("--tie-epsilon", "1e-300", "render", "--n", "2", "--fitness", "1e300,1,2,3"),
])
def test_usage_exit_code(argv):
    assert _run(*argv) == 2


def test_missing_atlas_file(in_tmp_dir):
    assert _run("lookup", "--n", "2", "--fitness", "1,2,3,4", "--atlas", str(in_tmp_dir / "absent.jsonl")) == 4


def test_corrupt_atlas_file(in_tmp_dir):
    path = in_tmp_dir / "bad.jsonl"
    path.write_text("not json\n", encoding="utf-8")
    assert _run("stats", "--n", "2", "--atlas", str(path)) == 4


def test_save_failure_exit_code(mocker):
    mocker.patch("landscape_atlas.main.AtlasManager.save", side_effect=OSError("read-only"))
    assert _run("build", "--n", "1") == 4


def test_reported_results_do_not_fail(mocker, capsys):
    mocker.patch(
        "landscape_atlas.main.run_checks",
        return_value=[CheckResult("ok", True), CheckResult("tally", True, "1", "2", reported=True)],
    )
    assert _run("verify") == 0
    out = capsys.readouterr().out
    assert "2 passed, 0 failed, 1 reported" in out


def test_verification_failure_exit_code(mocker, capsys):
    mocker.patch(
        "landscape_atlas.main.run_checks",
        return_value=[CheckResult("ok", True), CheckResult("broken", False, "1", "2")],
    )
    assert _run("verify") == 1
    captured = capsys.readouterr()
    assert "1 passed, 1 failed" in captured.out
    assert "broken" in captured.err


def test_config_file_errors(in_tmp_dir):
    path = in_tmp_dir / "config.json"
    path.write_text(json.dumps({"colour": "blue"}), encoding="utf-8")
    assert main(["--config", str(path), "counts", "--n", "2"]) == 2


def test_missing_command():
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2
