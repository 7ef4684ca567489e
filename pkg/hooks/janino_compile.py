#!/usr/bin/env python3
"""Compile hook for small Android source trees, usable without the Android SDK.

It performs the resource checks that make real builds fail (malformed XML,
dangling @type/name references, unescaped apostrophes in strings, invalid
color literals), generates R.java from the resources, and compiles every
Java source against the Android API stubs in ``android_stubs/`` using the
Janino compiler.

    janino_compile.py MUTANT_DIR [--java PATH] [--toolchain DIR]

Exit status 0 means the tree builds; 1 means it does not (errors on stdout).
"""

import argparse
import os
import re
import shutil
import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET
from pathlib import Path

HERE = Path(__file__).resolve().parent
ANDROID_NS = "{http://schemas.android.com/apk/res/android}"
SKIP_DIRS = {"build", "gen", "bin", ".git"}
COLOR_RE = re.compile(r"#(?:[0-9a-fA-F]{3,4}|[0-9a-fA-F]{6}|[0-9a-fA-F]{8})")
REF_RE = re.compile(r"@\+?(\w+)/(\w+)")


class BuildError(Exception):
    pass


def find_java(explicit=None):
    if explicit:
        return explicit
    try:
        import jdk4py
        return str(jdk4py.JAVA)
    except ImportError:
        found = shutil.which("java")
        if found is None:
            raise BuildError("no Java runtime: install jdk4py or put java on PATH")
        return found


def walk(root, suffix):
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames[:] = sorted(d for d in dirnames if d not in SKIP_DIRS)
        for name in sorted(filenames):
            if name.endswith(suffix):
                yield Path(dirpath) / name


def parse(path):
    try:
        return ET.parse(path).getroot()
    except ET.ParseError as exc:
        raise BuildError(f"{path}: {exc}") from None


def check_string_value(path, name, text):
    in_quotes = False
    escaped = False
    for ch in text:
        if escaped:
            escaped = False
        elif ch == "\\":
            escaped = True
        elif ch == '"':
            in_quotes = not in_quotes
        elif ch == "'" and not in_quotes:
            raise BuildError(f"{path}: string {name}: apostrophe not preceded by \\")


def collect_resources(root):
    """Resource names by type, plus every reference that must resolve."""
    res = {"id": set(), "layout": set(), "string": set(), "color": set(), "drawable": set()}
    refs = []
    for path in walk(root, ".xml"):
        rel = path.relative_to(root).as_posix()
        if "/res/" not in "/" + rel:
            continue
        folder = path.parent.name
        tree = parse(path)
        if folder.startswith("layout"):
            res["layout"].add(path.stem)
        elif folder.startswith("drawable"):
            res["drawable"].add(path.stem)
        for el in tree.iter():
            if folder.startswith("values"):
                if el.tag == "string":
                    text = "".join(el.itertext())
                    check_string_value(path, el.get("name"), text)
                    res["string"].add(el.get("name"))
                    if text.startswith(("@", "?")) and text != "@null":
                        refs.append((path, text))
                elif el.tag == "color":
                    value = (el.text or "").strip()
                    if not (COLOR_RE.fullmatch(value) or REF_RE.fullmatch(value)):
                        raise BuildError(f"{path}: color {el.get('name')}: invalid value {value!r}")
                    if value.startswith("@"):
                        refs.append((path, value))
                    res["color"].add(el.get("name"))
                elif el.tag == "item" and el.get("type") == "id":
                    res["id"].add(el.get("name"))
            for attr, value in el.attrib.items():
                if value.startswith("@+id/"):
                    res["id"].add(value[5:])
                elif value.startswith("@") and not value.startswith("@android:") and value != "@null":
                    refs.append((path, value))
                elif value.startswith("#") and not COLOR_RE.fullmatch(value):
                    raise BuildError(f"{path}: invalid color {value!r}")
    return res, refs


def check_manifest(root, res, refs):
    manifests = sorted(walk(root, "AndroidManifest.xml"), key=lambda p: p.relative_to(root).as_posix())
    if not manifests:
        raise BuildError("AndroidManifest.xml missing")
    manifest = parse(manifests[0])
    package = manifest.get("package")
    if not package:
        raise BuildError("manifest has no package attribute")
    for el in manifest.iter():
        for attr, value in el.attrib.items():
            if value.startswith("@") and not value.startswith("@android:"):
                refs.append((manifests[0], value))
        for attr in ("minSdkVersion", "targetSdkVersion", "maxSdkVersion"):
            value = el.get(ANDROID_NS + attr)
            if el.tag == "uses-sdk" and value is not None and not value.isdigit():
                raise BuildError(f"uses-sdk {attr} is not an integer: {value!r}")
    return package


def check_refs(res, refs):
    for path, value in refs:
        m = REF_RE.fullmatch(value)
        if m is None or m.group(1) not in res or m.group(2) not in res[m.group(1)]:
            raise BuildError(f"{path}: no resource found that matches {value!r}")


def r_java(package, res):
    lines = [f"package {package};", "", "public final class R {"]
    next_id = 0x7F010000
    for kind in sorted(res):
        lines.append(f"    public static final class {kind} {{")
        for name in sorted(res[kind]):
            lines.append(f"        public static final int {name} = {next_id};")
            next_id += 1
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def compile_tree(root, java, toolchain):
    res, refs = collect_resources(root)
    package = check_manifest(root, res, refs)
    check_refs(res, refs)
    sources = [str(p) for p in walk(root, ".java")]
    jars = [str(toolchain / "janino-3.1.9.jar"), str(toolchain / "commons-compiler-3.1.9.jar")]
    with tempfile.TemporaryDirectory() as tmp:
        r_file = Path(tmp) / "R.java"
        r_file.write_text(r_java(package, res))
        out = Path(tmp) / "classes"
        out.mkdir()
        # client-compiler flags roughly halve JVM start-up for these short runs
        cmd = [java, "-XX:TieredStopAtLevel=1", "-XX:+UseSerialGC", "-cp", os.pathsep.join(jars),
               "org.codehaus.commons.compiler.samples.CompilerDemo",
               "-d", str(out), "-sourcepath", str(HERE / "android_stubs")] + sources + [str(r_file)]
        proc = subprocess.run(cmd, stdout=subprocess.PIPE, stderr=subprocess.STDOUT, text=True)
        if proc.returncode != 0:
            raise BuildError(proc.stdout.strip() or f"compiler exited with {proc.returncode}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("mutant_dir")
    ap.add_argument("--java")
    ap.add_argument("--toolchain", default=str(HERE / "toolchain"))
    args = ap.parse_args(argv)
    try:
        compile_tree(Path(args.mutant_dir), find_java(args.java), Path(args.toolchain))
    except BuildError as exc:
        print(f"BUILD FAILED: {exc}")
        return 1
    print("BUILD OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
