import json
import subprocess
import sys

import pytest

from conftest import SCRIPTED_HOOK, fixture_path
from droidmut.cli import main


def run(*args):
    return main([str(a) for a in args])


def test_profile_omni(tmp_path, capsysbinary):
    out = tmp_path / "pfp.json"
    assert run("profile", fixture_path("omni"), "-o", out) == 0
    doc = json.loads(out.read_bytes())
    assert len(doc["entries"]) == 35
    assert run("profile", fixture_path("omni"), "--operators", "NullIntent") == 0
    doc = json.loads(capsysbinary.readouterr().out)
    assert [e["operator_id"] for e in doc["entries"]] == ["NullIntent"]


def test_full_pipeline(tmp_path):
    out = tmp_path / "run"
    assert run("mutate", fixture_path("omni"), "--seed", 42, "--out-dir", out) == 0
    manifest = json.loads((out / "mutants_manifest.json").read_bytes())
    assert len(manifest["mutants"]) == 35 and manifest["seed"] == 42
    assert all((out / m["artifact"]).is_dir() for m in manifest["mutants"])

    script = tmp_path / "script.json"
    script.write_text(json.dumps({"NullIntent-1": "crash", "SDKVersion-1": "stillborn"}))
    hook = f"{sys.executable} {SCRIPTED_HOOK}"
    assert run("verify", out, "--compile", f"{hook} compile {script} {{mutant_dir}}",
               "--launch", f"{hook} launch {script} {{mutant_dir}}", "--max-parallel", 4) == 0
    outcomes = json.loads((out / "outcomes.json").read_bytes())["outcomes"]
    assert len(outcomes) == 35

    tests_file = tmp_path / "tests.json"
    tests_file.write_text(json.dumps({"InvalidColor-1": {"any_test_failed": True}}))
    assert run("verify", out, "--compile", f"{hook} compile {script} {{mutant_dir}}",
               "--tests", tests_file, "-o", tmp_path / "killed.json") == 0

    csv_path = tmp_path / "report.csv"
    assert run("report", out, "--format", "csv", "-o", csv_path) == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "operator,generated,stillborn,trivial"
    assert "TOTAL,35,1,1" in lines
    assert run("report", out, "--outcomes", tmp_path / "killed.json", "--format", "json",
               "-o", tmp_path / "r.json") == 0
    doc = json.loads((tmp_path / "r.json").read_bytes())
    assert doc["totals"]["killed"] == 1 and doc["totals"]["SM"] == 1


def test_mutate_twice_identical(tmp_path):
    for name in ("a", "b"):
        assert run("mutate", fixture_path("basic"), "--seed", 42, "--out-dir", tmp_path / name,
                   "--mode", "patch") == 0
    for f in (tmp_path / "a").rglob("*"):
        if f.is_file():
            assert f.read_bytes() == (tmp_path / "b" / f.relative_to(tmp_path / "a")).read_bytes()


def test_config_file_and_override(tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"seed": 5, "operators": ["WrongStringResource"],
                                  "out_dir": str(tmp_path / "cfg-out"), "mode": "patch"}))
    assert run("--config", config, "mutate", fixture_path("basic"), "--seed", 0) == 0
    manifest = json.loads((tmp_path / "cfg-out" / "mutants_manifest.json").read_bytes())
    assert manifest["seed"] == 0 and manifest["mode"] == "PatchFile"
    assert {m["operator_id"] for m in manifest["mutants"]} == {"WrongStringResource"}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"sede": 1}))
    assert run("--config", bad, "catalog") == 2


@pytest.mark.parametrize("args", [
    ["profile", "/nonexistent/project"],
    ["profile", str(fixture_path("omni")), "--operators", "Bogus"],
])
def test_errors_exit_2(args):
    assert run(*args) == 2


def test_diagnostics_exit_2(tmp_path):
    assert run("profile", fixture_path("malformed"), "-o", tmp_path / "p.json") == 2
    assert json.loads((tmp_path / "p.json").read_bytes())["diagnostics"]


def test_verify_requires_clone_and_hook(tmp_path):
    out = tmp_path / "run"
    run("mutate", fixture_path("single_activity"), "--out-dir", out, "--mode", "patch")
    assert run("verify", out, "--compile", "true") == 2
    out2 = tmp_path / "run2"
    run("mutate", fixture_path("single_activity"), "--out-dir", out2)
    assert run("verify", out2) == 2
    assert run("verify", out2, "--compile", "/no/such/hook {mutant_dir}") == 2


def test_console_script_catalog():
    proc = subprocess.run([sys.executable, "-m", "droidmut.cli", "catalog"], capture_output=True, check=True)
    assert len(json.loads(proc.stdout)["operators"]) == 35
