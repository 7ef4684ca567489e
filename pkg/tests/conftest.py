import shutil
import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
ROOT = TESTS.parent
FIXTURES = TESTS / "fixtures"
HOOKS = ROOT / "hooks"
SCRIPTED_HOOK = TESTS / "hooks" / "scripted_hook.py"

# fixtures whose original tree builds with the Janino hook
BUILDABLE = ("omni", "notes", "basic", "single_activity", "final_cursor")
ALL_FIXTURES = BUILDABLE + ("malformed",)

sys.path.insert(0, str(TESTS))


def fixture_path(name):
    return FIXTURES / name


def java_available():
    try:
        import jdk4py  # noqa: F401
        return True
    except ImportError:
        return shutil.which("java") is not None


def janino_command():
    return f"{sys.executable} {HOOKS / 'janino_compile.py'} {{mutant_dir}}"


@pytest.fixture
def write_tree(tmp_path):
    """Create a small project from {relative_path: text or bytes}."""

    def make(files, name="app"):
        root = tmp_path / name
        for rel, content in files.items():
            p = root / rel
            p.parent.mkdir(parents=True, exist_ok=True)
            if isinstance(content, str):
                content = content.encode()
            p.write_bytes(content)
        return root

    return make


MANIFEST_TEMPLATE = """<?xml version="1.0" encoding="utf-8"?>
<manifest xmlns:android="http://schemas.android.com/apk/res/android" package="com.example.t">
    <application>
{activities}
    </application>
</manifest>
"""


def manifest_with(*names, launcher=None):
    parts = []
    for n in names:
        if n == launcher:
            parts.append(
                f'        <activity android:name="{n}">\n'
                "            <intent-filter>\n"
                '                <action android:name="android.intent.action.MAIN" />\n'
                '                <category android:name="android.intent.category.LAUNCHER" />\n'
                "            </intent-filter>\n"
                "        </activity>"
            )
        else:
            parts.append(f'        <activity android:name="{n}" />')
    return MANIFEST_TEMPLATE.format(activities="\n".join(parts))


# (criterion, passed, detail) recorded by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
