"""Turn profile entries into first-order mutants and materialize them."""

from __future__ import annotations

import difflib
import hashlib
import json
import random
import re
import shutil
import string
from dataclasses import dataclass
from pathlib import Path

from .errors import IoFailure, PatchConflict, TransformationFailure
from .operators import INVALID_PATH_PREFIX, LARGE_BITMAP_DIMENSION, MUTANT_SUFFIX, SLEEP_MS, operator_by_id
from .pfp import PfpEntry, _logical_chars
from .project import GENERATED_DIRS, Diagnostic, SourceModel
from .syntax.spans import Span

CLONE = "Clone"
PATCH_FILE = "PatchFile"
MODES = (CLONE, PATCH_FILE)

SLEEP_SNIPPET = (
    f"try {{ Thread.sleep({SLEEP_MS}); }} catch (InterruptedException droidmutInterrupted) {{ }}"
)
_XML_UNIT_RE = re.compile(
    r"\\u[0-9a-fA-F]{4}|\\.|&[#\w]+;|%(?:\d+\$)?[-#+ 0,(]*\d*(?:\.\d+)?[a-zA-Z%]|.", re.DOTALL
)
_PRIMITIVE_DEFAULTS = {
    "boolean": "false", "int": "0", "long": "0", "short": "0", "byte": "0",
    "char": "0", "float": "0", "double": "0",
}


def _b(text: str) -> bytes:
    return text.encode("latin-1")


def _s(data: bytes) -> str:
    return data.decode("latin-1")


def _chars(text: str) -> str:
    """Byte-per-char text as real characters, so edits never split a UTF-8 sequence."""
    return _b(text).decode("utf-8", "surrogateescape")


def _unchars(text: str) -> str:
    return _s(text.encode("utf-8", "surrogateescape"))


@dataclass(frozen=True)
class Edit:
    file: str
    span: Span
    original: bytes
    replacement: bytes

    def to_dict(self):
        return {
            "file": self.file,
            "start": self.span.start,
            "end": self.span.end,
            "original": self.original.decode("utf-8", "surrogateescape"),
            "replacement": self.replacement.decode("utf-8", "surrogateescape"),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            d["file"],
            Span(d["file"], d["start"], d["end"]),
            d["original"].encode("utf-8", "surrogateescape"),
            d["replacement"].encode("utf-8", "surrogateescape"),
        )


@dataclass(frozen=True)
class Patch:
    edits: tuple

    def __post_init__(self):
        prev = None
        for e in self.edits:
            if len(e.original) != len(e.span):
                raise ValueError(f"edit original bytes do not cover {e.span}")
            if prev is not None and prev.file == e.file:
                if e.span.start < prev.span.end or (e.span.start == prev.span.start and not len(prev.span)):
                    raise ValueError(f"overlapping edits at {e.span}")
            if prev is not None and (prev.file, prev.span.start) > (e.file, e.span.start):
                raise ValueError("edits must be sorted by (file, start)")
            prev = e

    @property
    def files(self):
        return sorted({e.file for e in self.edits})

    def apply_to(self, path, content: bytes) -> bytes:
        """Apply the edits of one file; PatchConflict if its bytes drifted."""
        out = content
        for e in reversed([e for e in self.edits if e.file == path]):
            if out[e.span.start:e.span.end] != e.original:
                raise PatchConflict(f"{path}: bytes at {e.span.start}-{e.span.end} do not match the patch")
            out = out[:e.span.start] + e.replacement + out[e.span.end:]
        return out

    def revert(self, path, content: bytes) -> bytes:
        """Inverse of ``apply_to``."""
        out = content
        shift = 0
        located = []
        for e in (e for e in self.edits if e.file == path):
            start = e.span.start + shift
            located.append((start, e))
            shift += len(e.replacement) - len(e.original)
        for start, e in reversed(located):
            end = start + len(e.replacement)
            if out[start:end] != e.replacement:
                raise PatchConflict(f"{path}: mutated bytes at {start}-{end} do not match the patch")
            out = out[:start] + e.original + out[end:]
        return out

    def to_list(self):
        return [e.to_dict() for e in self.edits]


@dataclass(frozen=True)
class Mutant:
    mutant_id: str
    operator_id: str
    source_entry: str
    patch: Patch
    summary: str

    def to_dict(self):
        return {
            "mutant_id": self.mutant_id,
            "operator_id": self.operator_id,
            "source_entry": self.source_entry,
            "summary": self.summary,
            "files": self.patch.files,
            "edits": self.patch.to_list(),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["mutant_id"], d["operator_id"], d["source_entry"],
                   Patch(tuple(Edit.from_dict(e) for e in d["edits"])), d["summary"])


def entry_rng(seed: int, entry: PfpEntry) -> random.Random:
    """Random stream for one entry: depends only on the seed and the entry key."""
    digest = hashlib.sha256(f"{seed}:{entry.stable_key}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


# ---------------------------------------------------------------------------
# transformations: each returns a list of (start, end, replacement) in the
# entry's file


def _insert_after(aux, text, content):
    if aux["wrap"]:
        stmt = _s(content[aux["stmt_start"]:aux["stmt_end"]])
        return [(aux["stmt_start"], aux["stmt_end"], "{ " + stmt + " " + text + " }")]
    return [(aux["insert_offset"], aux["insert_offset"], " " + text)]


def _insert_before(aux, text, content):
    if aux["wrap"]:
        stmt = _s(content[aux["stmt_start"]:aux["stmt_end"]])
        return [(aux["stmt_start"], aux["stmt_end"], "{ " + text + " " + stmt + " }")]
    return [(aux["insert_offset"], aux["insert_offset"], text + " ")]


def _prefix_literal(text, prefix):
    quote = '"""' if text.startswith('"""') else '"'
    if not text.startswith(quote):
        raise TransformationFailure(f"expected a string literal, found {text[:20]!r}")
    if quote == '"""':
        nl = text.index("\n") + 1
        return text[:nl] + prefix + text[nl:]
    return quote + prefix + text[1:]


def reverse_string_value(value: str) -> str:
    """Reverse an Android string resource value, keeping escapes and entities whole."""
    if "<" in value:
        return value + MUTANT_SUFFIX
    reversed_value = "".join(reversed(_XML_UNIT_RE.findall(value)))
    if reversed_value == value:
        return value + MUTANT_SUFFIX
    return reversed_value


def complement_color(value: str) -> str:
    digits = "".join(format(15 - int(ch, 16), "x") for ch in value[1:])
    # keep the literal's letter case; digits alone carry none
    return "#" + (digits.upper() if any(c.isupper() for c in value) else digits)


def _default_return(return_type):
    rt = (return_type or "void").strip()
    if rt == "void":
        return "{ }"
    return "{ return " + _PRIMITIVE_DEFAULTS.get(rt, "null") + "; }"


def _transform(entry: PfpEntry, model: SourceModel, rng: random.Random):
    op = entry.operator_id
    aux = entry.aux
    content = model.file(entry.file).content
    t = entry.target
    text = _s(t.slice(content))

    if op in ("ActivityNotDefined", "MissingPermissionManifest"):
        return [(t.start, t.end, "")]
    if op == "InvalidActivityName":
        name = _chars(text)
        candidates = [k for k in range(len(name) - 1) if name[k] != name[k + 1]]
        if not candidates:
            raise TransformationFailure("no adjacent characters to swap")
        k = rng.choice(candidates)
        return [(t.start, t.end, _unchars(name[:k] + name[k + 1] + name[k] + name[k + 2:]))]
    if op == "InvalidLabel":
        alphabet = string.ascii_letters + string.digits
        label = text
        while label == text:
            label = "".join(rng.choice(alphabet) for _ in range(operator_by_id(op).params["length"]))
        return [(t.start, t.end, label)]
    if op == "WrongMainActivity":
        filt = text
        offset = aux["insert_offset"]
        if aux["to_self_closing"]:
            insertion = (offset, offset + 2, ">" + filt + "</activity>")
        else:
            insertion = (offset, offset, filt)
        return sorted([(t.start, t.end, ""), insertion])
    if op == "SDKVersion":
        params = operator_by_id(op).params
        choices = [v for v in range(params["low"], params["high"] + 1) if v != aux["original"]]
        return [(t.start, t.end, str(rng.choice(choices)))]
    if op == "WrongStringResource":
        return [(t.start, t.end, _unchars(reverse_string_value(_chars(text))))]
    if op == "InvalidColor":
        return [(t.start, t.end, complement_color(text))]

    if op == "DifferentActivityIntentDefinition":
        return [(t.start, t.end, aux["replacement"] + ".class")]
    if op == "InvalidKeyIntentPutExtra":
        if not text.endswith('"'):
            raise TransformationFailure("key is not a plain string literal")
        return [(t.start, t.end, text[:-1] + MUTANT_SUFFIX + '"')]
    if op == "NullIntent":
        return [(t.start, t.end, "null")]
    if op == "NullValueIntentPutExtra":
        return [(t.start, t.end, operator_by_id(op).params["replacement"])]
    if op in ("NotParcelable", "NotSerializable"):
        return [(s, e, "") for s, e in aux["delete"]]
    if op == "NullGPSLocation":
        return [(aux["insert_offset"], aux["insert_offset"], f" {aux['var']} = null;")]
    if op in ("NullBackEndServiceReturn", "NullBluetoothAdapter", "FindViewByIdReturnsNull"):
        return _insert_after(aux, f"{aux['var']} = null;", content)
    if op == "ViewComponentNotVisible":
        return _insert_after(aux, f"{aux['var']}.setVisibility(android.view.View.GONE);", content)
    if op == "LengthyBackEndService":
        return _insert_after(aux, SLEEP_SNIPPET, content)
    if op in ("ClosingNullCursor", "NullInputStream", "NullOutputStream"):
        return _insert_before(aux, f"{aux['var']} = null;", content)
    if op == "BluetoothAdapterAlwaysEnabled":
        return [(t.start, t.end, "true")]
    if op in ("InvalidURI", "InvalidFilePath"):
        return [(t.start, t.end, _prefix_literal(text, INVALID_PATH_PREFIX))]
    if op == "InvalidIndexQueryParameter":
        (a0, a1), (b0, b1) = aux["swap"]
        return [(a0, a1, _s(content[b0:b1])), (b0, b1, _s(content[a0:a1]))]
    if op == "InvalidSQLQuery":
        units = _logical_chars(_chars(text[1:-1]))
        if not units:
            raise TransformationFailure("empty SQL literal")
        return [(t.start, t.end, '"' + _unchars("".join(units[:-1])) + '"')]
    if op == "InvalidDate":
        return [(t.start, t.end, f"new {aux['class_name']}(0)")]
    if op == "BuggyGUIListener":
        return [(t.start, t.end, _default_return(aux["return_type"]))]
    if op == "InvalidIDFindView":
        m = re.search(r"[A-Za-z_$][\w$]*\s*$", text)
        return [(t.start + m.start(), t.start + m.end(), aux["replacement"])]
    if op in ("LengthyGUICreation", "LengthyGUIListener"):
        return [(aux["insert_offset"], aux["insert_offset"], " " + SLEEP_SNIPPET)]
    if op == "LongConnectionTimeOut":
        params = operator_by_id(op).params
        new = f"{text.strip()} * {params['factor']}" if aux["literal"] else str(params["fallback"])
        return [(t.start, t.end, new)]
    if op == "OOMLargeImage":
        return [(s, e, str(LARGE_BITMAP_DIMENSION)) for s, e in aux["dims"]]
    raise TransformationFailure(f"no transformation for {op}")


def _summary(entry, model, edits):
    src = model.file(entry.file)
    line, col = src.line_col(entry.target.start)
    first = edits[0]

    def clip(data):
        s = _s(data).replace("\n", "\\n")
        return s if len(s) <= 40 else s[:37] + "..."

    more = f" (+{len(edits) - 1} edits)" if len(edits) > 1 else ""
    return f"{entry.operator_id} {entry.file}:{line}:{col} '{clip(first.original)}' -> '{clip(first.replacement)}'{more}"


def plan_mutant(entry: PfpEntry, model: SourceModel, seed: int, mutant_id: str) -> Mutant:
    content = model.file(entry.file).content
    raw = _transform(entry, model, entry_rng(seed, entry))
    edits = []
    for start, end, replacement in sorted(raw, key=lambda r: (r[0], r[1])):
        if not 0 <= start <= end <= len(content):
            raise TransformationFailure(f"edit span {start}-{end} outside {entry.file}")
        edits.append(Edit(entry.file, Span(entry.file, start, end), content[start:end], _b(replacement)))
    if all(e.original == e.replacement for e in edits):
        raise TransformationFailure("transformation produced no change")
    try:
        patch = Patch(tuple(edits))
    except ValueError as exc:
        raise TransformationFailure(str(exc)) from None
    return Mutant(mutant_id, entry.operator_id, entry.stable_key, patch, _summary(entry, model, edits))


def plan_mutants(pfp, model: SourceModel, seed: int, diagnostics=None):
    """One mutant per profile entry, numbered per operator in profile order.

    Entries whose transformation fails are skipped; a Diagnostic is appended
    to ``diagnostics`` when a list is given. Numbering counts skipped
    entries too, so ids stay stable.
    """
    counters = {}
    mutants = []
    for entry in pfp:
        counters[entry.operator_id] = counters.get(entry.operator_id, 0) + 1
        mutant_id = f"{entry.operator_id}-{counters[entry.operator_id]}"
        try:
            mutants.append(plan_mutant(entry, model, seed, mutant_id))
        except (TransformationFailure, KeyError, UnicodeEncodeError) as exc:
            if diagnostics is not None:
                diagnostics.append(Diagnostic(entry.file, f"{mutant_id} skipped: {exc}"))
    return mutants


# ---------------------------------------------------------------------------
# materialization


def unified_diff(path: str, before: bytes, after: bytes, context=3) -> bytes:
    """A unified diff of one file, accepted by ``patch -p1``."""
    a = before.splitlines(keepends=True)
    b = after.splitlines(keepends=True)
    out = [f"--- a/{path}\n".encode(), f"+++ b/{path}\n".encode()]

    def emit(prefix, line):
        out.append(prefix + line)
        if not line.endswith(b"\n"):
            out.append(b"\n\\ No newline at end of file\n")

    for group in difflib.SequenceMatcher(None, a, b, autojunk=False).get_grouped_opcodes(context):
        i1, i2, j1, j2 = group[0][1], group[-1][2], group[0][3], group[-1][4]
        a_len, b_len = i2 - i1, j2 - j1
        a_start = i1 + 1 if a_len else i1
        b_start = j1 + 1 if b_len else j1
        out.append(f"@@ -{a_start},{a_len} +{b_start},{b_len} @@\n".encode())
        for tag, x1, x2, y1, y2 in group:
            if tag == "equal":
                for line in a[x1:x2]:
                    emit(b" ", line)
                continue
            for line in a[x1:x2]:
                emit(b"-", line)
            for line in b[y1:y2]:
                emit(b"+", line)
    return b"".join(out)


def patch_text(mutant: Mutant, model: SourceModel) -> bytes:
    chunks = []
    for path in mutant.patch.files:
        before = model.file(path).content
        chunks.append(unified_diff(path, before, mutant.patch.apply_to(path, before)))
    return b"".join(chunks)


def _ignore_generated(directory, names):
    return [n for n in names if n in GENERATED_DIRS]


def materialize(mutant: Mutant, model: SourceModel, out_dir, mode=CLONE) -> Path:
    """Write one mutant as a project clone or as a unified-diff file.

    Clone mode copies the project root (generated build directories are
    left out) and applies the patch against the copied bytes.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    out_dir = Path(out_dir)
    try:
        if mode == PATCH_FILE:
            out_dir.mkdir(parents=True, exist_ok=True)
            target = out_dir / f"{mutant.mutant_id}.patch"
            target.write_bytes(patch_text(mutant, model))
            return target
        target = out_dir / mutant.mutant_id
        if target.exists():
            shutil.rmtree(target)
        shutil.copytree(model.root, target, ignore=_ignore_generated, symlinks=True)
        for path in mutant.patch.files:
            file_path = target / path
            file_path.write_bytes(mutant.patch.apply_to(path, file_path.read_bytes()))
        return target
    except OSError as exc:
        raise IoFailure(f"cannot materialize {mutant.mutant_id} under {out_dir}: {exc}") from exc


# ---------------------------------------------------------------------------
# run manifest


def manifest_document(mutants, model: SourceModel, seed, mode, artifacts=None, diagnostics=()):
    artifacts = artifacts or {}
    records = []
    for m in mutants:
        record = m.to_dict()
        if m.mutant_id in artifacts:
            record["artifact"] = artifacts[m.mutant_id]
        records.append(record)
    return {
        "format_version": 1,
        "root": model.root,
        "seed": seed,
        "mode": mode,
        "mutants": records,
        "diagnostics": [str(d) for d in diagnostics],
    }


def dump_document(doc) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()


def write_manifest(path, doc):
    try:
        Path(path).write_bytes(dump_document(doc))
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def read_manifest(path):
    doc = json.loads(Path(path).read_bytes())
    return doc, [Mutant.from_dict(r) for r in doc["mutants"]]
