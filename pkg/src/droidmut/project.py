"""Ingest an Android project tree into an immutable, classified source model."""

from __future__ import annotations

import enum
import fnmatch
import hashlib
import json
import os
import re
from bisect import bisect_right
from dataclasses import asdict, dataclass, field
from pathlib import Path
from types import MappingProxyType

from .errors import NoManifest, NotADirectory, ParseFailure
from .syntax.java import SyntaxView, parse_java
from .syntax.xml import XmlView, parse_xml

ANDROID_NS_NAME = "android:name"
GENERATED_DIRS = ("build", "gen", "bin")

_STRINGS_RE = re.compile(r"(^|/)res/values[^/]*/strings\.xml$")
_COLORS_RE = re.compile(r"(^|/)res/values[^/]*/colors\.xml$")
_LAYOUT_RE = re.compile(r"(^|/)res/layout[^/]*/.+\.xml$")
_RES_RE = re.compile(r"(^|/)res/")


class FileKind(str, enum.Enum):
    JAVA_SOURCE = "JavaSource"
    MANIFEST = "Manifest"
    STRINGS_RESOURCE = "StringsResource"
    LAYOUT_RESOURCE = "LayoutResource"
    COLOR_RESOURCE = "ColorResource"
    OTHER_RESOURCE = "OtherResource"
    UNCLASSIFIED = "Unclassified"


XML_KINDS = frozenset(
    {FileKind.MANIFEST, FileKind.STRINGS_RESOURCE, FileKind.LAYOUT_RESOURCE, FileKind.COLOR_RESOURCE}
)


def line_starts(content: bytes):
    starts = [0]
    pos = content.find(b"\n")
    while pos >= 0:
        if pos + 1 < len(content):
            starts.append(pos + 1)
        pos = content.find(b"\n", pos + 1)
    return tuple(starts)


@dataclass(frozen=True)
class SourceFile:
    relative_path: str
    kind: FileKind
    content: bytes = field(repr=False)
    line_index: tuple = field(repr=False)

    def line_col(self, offset):
        """1-based line and column of a byte offset."""
        line = bisect_right(self.line_index, offset)
        return line, offset - self.line_index[line - 1] + 1


@dataclass(frozen=True)
class Diagnostic:
    path: str
    message: str

    def __str__(self):
        return f"{self.path}: {self.message}"


@dataclass(frozen=True)
class SourceModel:
    root: str
    files: tuple
    java_views: MappingProxyType
    xml_views: MappingProxyType
    activity_registry: tuple
    id_registry: tuple
    manifest_path: str
    package: str = ""
    main_activity: str | None = None
    diagnostics: tuple = ()

    def file(self, relative_path) -> SourceFile:
        for f in self.files:
            if f.relative_path == relative_path:
                return f
        raise KeyError(relative_path)

    def files_of_kind(self, kind):
        return [f for f in self.files if f.kind == kind]

    def qualify_activity(self, name):
        """Resolve a manifest activity name against the manifest package."""
        if name.startswith("."):
            return f"{self.package}{name}" if self.package else name[1:]
        if "." not in name and self.package:
            return f"{self.package}.{name}"
        return name

    def serialize(self) -> bytes:
        """Deterministic JSON rendering of the whole model (views included)."""
        doc = {
            "root": self.root,
            "manifest": self.manifest_path,
            "package": self.package,
            "main_activity": self.main_activity,
            "activity_registry": list(self.activity_registry),
            "id_registry": list(self.id_registry),
            "files": [
                {
                    "path": f.relative_path,
                    "kind": f.kind.value,
                    "sha256": hashlib.sha256(f.content).hexdigest(),
                    "lines": len(f.line_index),
                }
                for f in self.files
            ],
            "java_views": {k: asdict(v) for k, v in sorted(self.java_views.items())},
            "xml_views": {k: asdict(v) for k, v in sorted(self.xml_views.items())},
            "diagnostics": [str(d) for d in self.diagnostics],
        }
        return json.dumps(doc, sort_keys=True, default=str).encode()


def classify(relative_path, manifest_path):
    name = relative_path.rsplit("/", 1)[-1]
    if name == "AndroidManifest.xml":
        return FileKind.MANIFEST if relative_path == manifest_path else FileKind.OTHER_RESOURCE
    if name.endswith(".java"):
        return FileKind.JAVA_SOURCE
    if _STRINGS_RE.search(relative_path):
        return FileKind.STRINGS_RESOURCE
    if _COLORS_RE.search(relative_path):
        return FileKind.COLOR_RESOURCE
    if _LAYOUT_RE.search(relative_path):
        return FileKind.LAYOUT_RESOURCE
    if _RES_RE.search(relative_path):
        return FileKind.OTHER_RESOURCE
    return FileKind.UNCLASSIFIED


def _excluded(relative_path, excludes, default_excludes):
    parts = relative_path.split("/")
    if default_excludes and any(p in GENERATED_DIRS for p in parts[:-1]):
        return True
    for pattern in excludes:
        if fnmatch.fnmatchcase(relative_path, pattern):
            return True
        # a bare directory pattern like "libs" or "libs/" excludes the subtree
        stripped = pattern.rstrip("/")
        if stripped and (relative_path == stripped or relative_path.startswith(stripped + "/")):
            return True
    return False


def walk_files(root: Path, excludes=(), default_excludes=True):
    """Project-relative POSIX paths of all included files, sorted."""
    found = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        rel_dir = Path(dirpath).relative_to(root).as_posix()
        for name in filenames:
            rel = name if rel_dir == "." else f"{rel_dir}/{name}"
            if not _excluded(rel, excludes, default_excludes):
                found.append(rel)
    return sorted(found)


def _manifest_facts(view: XmlView):
    package = ""
    activities = []
    main = None
    for idx, el in enumerate(view.elements):
        if el.tag_name == "manifest":
            package = el.get("package", "")
        elif el.tag_name == "activity":
            name = el.get(ANDROID_NS_NAME)
            if name is not None:
                activities.append(name)
                if main is None and launcher_filter(view, idx) is not None:
                    main = name
    return package, tuple(activities), main


def launcher_filter(view: XmlView, activity_index):
    """Index of the MAIN/LAUNCHER intent-filter under an activity element, or None."""
    for child in view.children(activity_index):
        if view.elements[child].tag_name != "intent-filter":
            continue
        actions = set()
        categories = set()
        for grandchild in view.children(child):
            el = view.elements[grandchild]
            if el.tag_name == "action":
                actions.add(el.get(ANDROID_NS_NAME))
            elif el.tag_name == "category":
                categories.add(el.get(ANDROID_NS_NAME))
        if "android.intent.action.MAIN" in actions and "android.intent.category.LAUNCHER" in categories:
            return child
    return None


def scan_project(root, excludes=(), default_excludes=True) -> SourceModel:
    """Read, classify and parse every included file under ``root``.

    Per-file parse failures are recorded in ``diagnostics`` and the file is
    kept as Unclassified.
    """
    root_path = Path(root)
    if not root_path.is_dir():
        raise NotADirectory(str(root))
    paths = walk_files(root_path, excludes, default_excludes)
    manifests = [p for p in paths if p.rsplit("/", 1)[-1] == "AndroidManifest.xml"]
    if not manifests:
        raise NoManifest(f"no AndroidManifest.xml under {root}")
    manifest_path = manifests[0]

    files = []
    java_views = {}
    xml_views = {}
    diagnostics = []
    for rel in paths:
        content = (root_path / rel).read_bytes()
        kind = classify(rel, manifest_path)
        try:
            if kind == FileKind.JAVA_SOURCE:
                java_views[rel] = parse_java(_Probe(rel, content))
            elif kind in XML_KINDS:
                xml_views[rel] = parse_xml(_Probe(rel, content))
        except ParseFailure as exc:
            diagnostics.append(Diagnostic(rel, str(exc)))
            kind = FileKind.UNCLASSIFIED
        files.append(SourceFile(rel, kind, content, line_starts(content)))

    package, activities, main = "", (), None
    if manifest_path in xml_views:
        package, activities, main = _manifest_facts(xml_views[manifest_path])
    ids = sorted({name for view in java_views.values() for name, _ in view.r_id_refs})
    return SourceModel(
        root=str(root_path),
        files=tuple(files),
        java_views=MappingProxyType(java_views),
        xml_views=MappingProxyType(xml_views),
        activity_registry=activities,
        id_registry=tuple(ids),
        manifest_path=manifest_path,
        package=package,
        main_activity=main,
        diagnostics=tuple(diagnostics),
    )


@dataclass(frozen=True)
class _Probe:
    relative_path: str
    content: bytes
