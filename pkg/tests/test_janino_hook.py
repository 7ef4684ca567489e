import shutil
import subprocess
import sys

import pytest

from conftest import BUILDABLE, HOOKS, fixture_path, java_available

pytestmark = pytest.mark.skipif(not java_available(), reason="no Java runtime for the compile hook")


def build(path):
    proc = subprocess.run([sys.executable, str(HOOKS / "janino_compile.py"), str(path)],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout


@pytest.mark.parametrize("name", BUILDABLE)
def test_originals_build(name):
    code, out = build(fixture_path(name))
    assert code == 0, out
    assert out.strip() == "BUILD OK"


def test_malformed_fails():
    code, out = build(fixture_path("malformed"))
    assert code == 1 and out.startswith("BUILD FAILED")


def copy(name, tmp_path):
    dst = tmp_path / name
    shutil.copytree(fixture_path(name), dst)
    return dst


def test_unreachable_code_rejected(tmp_path):
    root = copy("single_activity", tmp_path)
    [src] = root.rglob("*.java")
    text = src.read_text()
    brace = text.rindex("}", 0, text.rindex("}"))
    src.write_text(text[:brace] + "        return;\n        System.out.println();\n    " + text[brace:])
    code, out = build(root)
    assert code == 1
    assert "unreachable" in out.lower() or "not reachable" in out.lower()


@pytest.mark.parametrize("old,new,message", [
    ("don\\'t", "don't", "apostrophe"),
    ("@string/app_name", "@string/missing_name", "no resource"),
])
def test_resource_errors(tmp_path, old, new, message):
    root = copy("notes", tmp_path)
    targets = [p for p in (root / "res").rglob("*.xml") if old in p.read_text()]
    targets += [root / "AndroidManifest.xml"] if old in (root / "AndroidManifest.xml").read_text() else []
    assert targets
    for p in targets:
        p.write_text(p.read_text().replace(old, new, 1))
    code, out = build(root)
    assert code == 1 and message in out


def test_invalid_color_literal(tmp_path):
    root = copy("notes", tmp_path)
    colors = root / "res" / "values" / "colors.xml"
    colors.write_text(colors.read_text().replace("#3F51B5", "#3F51BZ"))
    code, out = build(root)
    assert code == 1 and "color" in out
