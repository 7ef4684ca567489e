"""Potential Failure Profile extraction.

A profile entry pairs one catalog operator with one location where that
operator can be applied. Every entry becomes exactly one mutant, so the
detectors below also decide the concrete edit parameters (stored in
``aux``) that the mutation engine needs.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import UnknownOperator
from .operators import (
    BACKEND_METHODS,
    BACKEND_RECEIVER_MARKERS,
    LISTENER_METHODS,
    Category,
    operator_by_id,
    operator_ids,
)
from .project import ANDROID_NS_NAME, FileKind, SourceModel, launcher_filter
from .syntax.spans import Span

HEX_COLOR_RE = re.compile(rb"#(?:[0-9a-fA-F]{6}|[0-9a-fA-F]{8})")
R_ID_RE = re.compile(r"R\s*\.\s*id\s*\.\s*([A-Za-z_$][\w$]*)")
CLASS_LITERAL_RE = re.compile(r"([A-Za-z_$][\w$]*(?:\s*\.\s*[A-Za-z_$][\w$]*)*)\s*\.\s*class")
INT_RE = re.compile(r"[0-9][0-9_]*[lL]?")
SDK_ATTRIBUTES = ("android:minSdkVersion", "android:targetSdkVersion", "android:maxSdkVersion")
FILE_CLASSES = ("File", "FileInputStream", "FileOutputStream", "FileReader", "FileWriter", "RandomAccessFile")
FILE_OPENERS = ("openFileInput", "openFileOutput")
INPUT_MARKERS = ("InputStream", "Reader")
OUTPUT_MARKERS = ("OutputStream", "Writer", "PrintStream")


@dataclass(frozen=True)
class PfpConfig:
    """Detection switches. ``disabled`` removes operators from the run."""

    exclude_main_activity: bool = False
    disabled: frozenset = field(default_factory=frozenset)


@dataclass(frozen=True)
class PfpEntry:
    operator_id: str
    target: Span
    aux: dict
    stable_key: str

    @property
    def file(self):
        return self.target.file

    def to_record(self, model: Optional[SourceModel] = None):
        record = {
            "operator_id": self.operator_id,
            "file": self.target.file,
            "start": self.target.start,
            "end": self.target.end,
            "aux": self.aux,
            "stable_key": self.stable_key,
        }
        if model is not None:
            src = model.file(self.target.file)
            record["line"], record["column"] = src.line_col(self.target.start)
        return record

    @classmethod
    def from_record(cls, record):
        return cls(
            record["operator_id"],
            Span(record["file"], record["start"], record["end"]),
            record["aux"],
            record["stable_key"],
        )


def stable_key(operator_id, target: Span, aux):
    payload = json.dumps([operator_id, target.file, target.start, target.end, aux], sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()[:20]


@dataclass(frozen=True)
class _Hit:
    operator_id: str
    target: Span
    aux: dict
    owner: Optional[str] = None  # outermost Java class, for main-activity exclusion


# ---------------------------------------------------------------------------
# helpers over views


def _simple(type_name: str) -> str:
    base = type_name.split("<", 1)[0]
    return base.rsplit(".", 1)[-1]


def _text(model, span: Span) -> str:
    return span.slice(model.file(span.file).content).decode("latin-1")


def _is_literal(view, span: Span):
    for lit in view.string_literals:
        if lit.span == span:
            return lit
    return None


def _literals_within(view, span: Span):
    return [lit for lit in view.string_literals if span.contains(lit.span)]


def _simple_receiver(inv) -> Optional[str]:
    text = inv.receiver_text
    if text is None:
        return None
    if text.startswith("this."):
        text = text[5:].strip()
    return text if re.fullmatch(r"[A-Za-z_$][\w$]*", text) else None


def _receiver_decl(view, inv):
    name = _simple_receiver(inv)
    if name is None:
        return None
    return view.declared_var(name, inv.call_span.start, inv.enclosing_method, inv.enclosing_class)


def _statement(view, index):
    return None if index is None else view.statements[index]


def _decl_sites(view):
    """Local declarations and assignments that are standalone statements.

    Yields ``(var_name, init_span, statement, decl)`` where decl is the
    VarDecl describing the variable (None when unresolvable).
    """
    for decl in view.var_decls:
        if decl.kind != "local" or decl.init_span is None:
            continue
        stmt = _statement(view, decl.statement)
        if stmt is None:
            continue
        yield decl.name, decl.init_span, stmt, decl
    for asg in view.assignments:
        stmt = _statement(view, asg.statement)
        if stmt is None or stmt.kind != "expr":
            continue
        decl = view.declared_var(asg.lhs_name, asg.statement_span.start, asg.enclosing_method, asg.enclosing_class)
        yield asg.lhs_name, asg.rhs_span, stmt, decl


def _ends_with_call(view, init_span, names, receiver_check=None):
    for inv in view.invocations:
        if inv.method_name in names and init_span.contains(inv.call_span) and inv.call_span.end == init_span.end:
            if receiver_check is None or receiver_check(inv):
                return inv
    return None


def _after_statement(stmt):
    return {"insert_offset": stmt.span.end, "stmt_start": stmt.span.start, "stmt_end": stmt.span.end,
            "wrap": not stmt.block_level}


def _before_statement(stmt):
    return {"insert_offset": stmt.span.start, "stmt_start": stmt.span.start, "stmt_end": stmt.span.end,
            "wrap": not stmt.block_level}


def _is_backend_call(view, inv):
    if inv.method_name not in BACKEND_METHODS or inv.receiver_text is None:
        return False
    decl = _receiver_decl(view, inv)
    probe = decl.declared_type_name if decl is not None else inv.receiver_text
    return any(marker in probe for marker in BACKEND_RECEIVER_MARKERS)


def _owner_of(inv_like):
    return getattr(inv_like, "top_class", None)


# ---------------------------------------------------------------------------
# manifest / resource detectors


def _manifest(model):
    return model.xml_views.get(model.manifest_path)


def _activities(view):
    return [(i, el) for i, el in enumerate(view.elements)
            if el.tag_name == "activity" and el.attribute(ANDROID_NS_NAME) is not None]


def detect_activity_not_defined(model):
    view = _manifest(model)
    if view is None:
        return
    for idx, el in _activities(view):
        if launcher_filter(view, idx) is not None:
            continue
        yield _Hit("ActivityNotDefined", el.element_span, {"activity": el.get(ANDROID_NS_NAME)})


def detect_invalid_activity_name(model):
    view = _manifest(model)
    if view is None:
        return
    for idx, el in _activities(view):
        if launcher_filter(view, idx) is not None:
            continue
        attr = el.attribute(ANDROID_NS_NAME)
        value = attr.value
        if any(value[k] != value[k + 1] for k in range(len(value) - 1)):
            yield _Hit("InvalidActivityName", attr.value_span, {"activity": value})


def detect_invalid_label(model):
    view = _manifest(model)
    if view is None:
        return
    for el in view.elements:
        attr = el.attribute("android:label")
        if attr is not None:
            yield _Hit("InvalidLabel", attr.value_span, {"element": el.tag_name})


def detect_wrong_main_activity(model):
    view = _manifest(model)
    if view is None:
        return
    activities = _activities(view)
    if len(activities) < 2:
        return
    for pos, (idx, el) in enumerate(activities):
        filt = launcher_filter(view, idx)
        if filt is None:
            continue
        to_idx, to_el = activities[(pos + 1) % len(activities)]
        if to_el.self_closing:
            insert_offset = to_el.element_span.end - 2
        else:
            insert_offset = to_el.content_span.end
        yield _Hit(
            "WrongMainActivity",
            view.elements[filt].element_span,
            {
                "from_activity": el.get(ANDROID_NS_NAME),
                "to_activity": to_el.get(ANDROID_NS_NAME),
                "insert_offset": insert_offset,
                "to_self_closing": to_el.self_closing,
            },
        )


def detect_missing_permission(model):
    view = _manifest(model)
    if view is None:
        return
    for el in view.elements:
        if el.tag_name == "uses-permission":
            yield _Hit("MissingPermissionManifest", el.element_span, {"permission": el.get(ANDROID_NS_NAME)})


def detect_sdk_version(model):
    view = _manifest(model)
    if view is None:
        return
    for el in view.elements:
        if el.tag_name != "uses-sdk":
            continue
        for attr in el.attributes:
            if attr.name in SDK_ATTRIBUTES and attr.value.strip().isdigit():
                yield _Hit("SDKVersion", attr.value_span, {"attribute": attr.name, "original": int(attr.value)})


def detect_wrong_string_resource(model):
    for f in model.files_of_kind(FileKind.STRINGS_RESOURCE):
        view = model.xml_views[f.relative_path]
        for el in view.elements:
            if el.tag_name == "string" and el.content_span is not None:
                yield _Hit("WrongStringResource", el.content_span, {"name": el.get("name")})


def detect_invalid_color(model):
    for f in model.files:
        if f.kind == FileKind.LAYOUT_RESOURCE:
            view = model.xml_views[f.relative_path]
            for el in view.elements:
                for attr in el.attributes:
                    if HEX_COLOR_RE.fullmatch(attr.value.encode("latin-1")):
                        yield _Hit("InvalidColor", attr.value_span, {"attribute": attr.name})
        elif f.kind == FileKind.COLOR_RESOURCE:
            view = model.xml_views[f.relative_path]
            for el in view.elements:
                if el.tag_name != "color" or el.content_span is None:
                    continue
                raw = el.content_span.slice(f.content)
                stripped = raw.strip()
                if HEX_COLOR_RE.fullmatch(stripped):
                    start = el.content_span.start + raw.index(stripped)
                    yield _Hit("InvalidColor", Span(f.relative_path, start, start + len(stripped)),
                               {"name": el.get("name")})


# ---------------------------------------------------------------------------
# Java detectors; each takes (model, view)


def detect_intent_instantiations(model, view):
    for inst in view.instantiations:
        if _simple(inst.class_name) != "Intent" or inst.has_body:
            continue
        if not inst.chained:
            yield _Hit("NullIntent", inst.span, {}, inst.top_class)
        if len(model.activity_registry) < 2:
            continue
        for arg in inst.argument_spans:
            m = CLASS_LITERAL_RE.fullmatch(_text(model, arg))
            if m is None:
                continue
            current = re.sub(r"\s+", "", m.group(1))
            replacement = _next_activity(model, current)
            if replacement is not None:
                yield _Hit("DifferentActivityIntentDefinition", arg,
                           {"current": current, "replacement": replacement}, inst.top_class)


def _next_activity(model, current):
    qualified = sorted({model.qualify_activity(a) for a in model.activity_registry})
    simple_current = current.rsplit(".", 1)[-1]
    position = None
    for k, name in enumerate(qualified):
        if name == current or name.rsplit(".", 1)[-1] == simple_current:
            position = k
            break
    if position is None:
        return qualified[0]
    candidate = qualified[(position + 1) % len(qualified)]
    return candidate if candidate != qualified[position] else None


def detect_put_extra(model, view):
    for inv in view.invocations:
        if inv.method_name != "putExtra" or len(inv.argument_spans) != 2:
            continue
        key, value = inv.argument_spans
        if _is_literal(view, key) is not None:
            yield _Hit("InvalidKeyIntentPutExtra", key, {}, inv.top_class)
        yield _Hit("NullValueIntentPutExtra", value, {}, inv.top_class)


def _implements_removal(model, cls, iface):
    """Byte ranges that drop ``iface`` from the implements clause of ``cls``."""
    names = list(cls.implements_names)
    k = names.index(iface)
    spans = cls.implements_spans
    if len(names) == 1:
        content = model.file(cls.span.file).content
        start = cls.implements_clause_span.start
        while start > 0 and content[start - 1:start] in (b" ", b"\t", b"\r", b"\n"):
            start -= 1
        return [[start, cls.implements_clause_span.end]]
    if k < len(names) - 1:
        return [[spans[k].start, spans[k + 1].start]]
    return [[spans[k - 1].end, spans[k].end]]


def detect_not_parcelable_serializable(model, view):
    for cls in view.class_decls:
        if cls.implements_clause_span is None:
            continue
        if "Parcelable" in cls.implements_names:
            deletions = _implements_removal(model, cls, "Parcelable")
            for m in view.method_decls:
                if (m.enclosing_class == cls.name and m.override_span is not None
                        and m.name in operator_by_id("NotParcelable").params["parcelable_methods"]):
                    deletions.append([m.override_span.start, m.override_span.end])
            target = cls.implements_spans[list(cls.implements_names).index("Parcelable")]
            yield _Hit("NotParcelable", target, {"class": cls.name, "delete": sorted(deletions)}, cls.top_class)
        if "Serializable" in cls.implements_names:
            target = cls.implements_spans[list(cls.implements_names).index("Serializable")]
            yield _Hit("NotSerializable", target,
                       {"class": cls.name, "delete": _implements_removal(model, cls, "Serializable")},
                       cls.top_class)


def detect_gps_location(model, view):
    for m in view.method_decls:
        if (m.name == "onLocationChanged" and m.body_span is not None and len(m.parameter_types) == 1
                and _simple(m.parameter_types[0]) == "Location" and not m.parameter_final[0]):
            yield _Hit("NullGPSLocation", m.body_span,
                       {"var": m.parameter_names[0], "insert_offset": m.body_span.start + 1}, m.top_class)


def detect_method_bodies(model, view):
    for m in view.method_decls:
        if m.body_span is None:
            continue
        insert = {"method": m.name, "insert_offset": m.body_span.start + 1}
        if m.name == "onCreate":
            yield _Hit("LengthyGUICreation", m.body_span, insert, m.top_class)
        if m.name in LISTENER_METHODS:
            yield _Hit("LengthyGUIListener", m.body_span, insert, m.top_class)
            yield _Hit("BuggyGUIListener", m.body_span,
                       {"method": m.name, "return_type": m.return_type or "void"}, m.top_class)


def detect_backend(model, view):
    for inv in view.invocations:
        if not _is_backend_call(view, inv):
            continue
        stmt = _statement(view, inv.statement)
        if stmt is None or stmt.kind not in ("local", "expr"):
            continue
        yield _Hit("LengthyBackEndService", inv.call_span, _after_statement(stmt), inv.top_class)
    for name, init, stmt, decl in _decl_sites(view):
        if decl is not None and decl.is_final:
            continue
        inv = _ends_with_call(view, init, BACKEND_METHODS, lambda i: _is_backend_call(view, i))
        if inv is not None:
            yield _Hit("NullBackEndServiceReturn", stmt.span, {"var": name, **_after_statement(stmt)},
                       inv.top_class)


def detect_find_view(model, view):
    for name, init, stmt, decl in _decl_sites(view):
        inv = _ends_with_call(view, init, ("findViewById",))
        if inv is None:
            continue
        aux = {"var": name, **_after_statement(stmt)}
        if decl is None or not decl.is_final:
            yield _Hit("FindViewByIdReturnsNull", stmt.span, aux, inv.top_class)
        yield _Hit("ViewComponentNotVisible", Span(stmt.span.file, stmt.span.end, stmt.span.end),
                   aux, inv.top_class)
    if len(model.id_registry) < 2:
        return
    ids = list(model.id_registry)
    for inv in view.invocations:
        if inv.method_name != "findViewById" or len(inv.argument_spans) != 1:
            continue
        arg = inv.argument_spans[0]
        m = R_ID_RE.fullmatch(_text(model, arg))
        if m is None or m.group(1) not in ids:
            continue
        current = m.group(1)
        replacement = ids[(ids.index(current) + 1) % len(ids)]
        yield _Hit("InvalidIDFindView", arg, {"current": current, "replacement": replacement}, inv.top_class)


def detect_bluetooth(model, view):
    for inv in view.invocations:
        if inv.method_name != "isEnabled" or inv.argument_spans or inv.receiver_text is None:
            continue
        decl = _receiver_decl(view, inv)
        is_adapter = (decl is not None and _simple(decl.declared_type_name) == "BluetoothAdapter") or \
            re.sub(r"\s+", "", inv.receiver_text).endswith("BluetoothAdapter.getDefaultAdapter()")
        stmt = _statement(view, inv.statement)
        if is_adapter and not (stmt is not None and stmt.span.start == inv.call_span.start and stmt.kind == "expr"):
            yield _Hit("BluetoothAdapterAlwaysEnabled", inv.call_span, {}, inv.top_class)
    for name, init, stmt, decl in _decl_sites(view):
        if decl is None or decl.is_final or _simple(decl.declared_type_name) != "BluetoothAdapter":
            continue
        yield _Hit("NullBluetoothAdapter", stmt.span, {"var": name, **_after_statement(stmt)}, decl.top_class)


def detect_close_nullification(model, view):
    for inv in view.invocations:
        if inv.method_name != "close" or inv.argument_spans:
            continue
        decl = _receiver_decl(view, inv)
        stmt = _statement(view, inv.statement)
        if decl is None or stmt is None or stmt.kind != "expr" or stmt.span.start != inv.call_span.start:
            continue
        if decl.is_final or decl.kind in ("resource", "foreach"):
            continue
        type_name = _simple(decl.declared_type_name)
        if "Cursor" in type_name:
            op = "ClosingNullCursor"
        elif type_name.endswith(INPUT_MARKERS):
            op = "NullInputStream"
        elif type_name.endswith(OUTPUT_MARKERS):
            op = "NullOutputStream"
        else:
            continue
        yield _Hit(op, stmt.span, {"var": decl.name, **_before_statement(stmt)}, inv.top_class)


def _argument_type(view, model, arg: Span, offset, inv):
    text = _text(model, arg).strip()
    if _is_literal(view, arg) is not None:
        return "String"
    if re.fullmatch(r"-?[0-9][0-9_]*", text):
        return "int"
    m = re.fullmatch(r"new\s+([\w.$]+)\s*\[\s*\]\s*\{.*\}|new\s+([\w.$]+)\s*\[.*\]", text, re.DOTALL)
    if m:
        return (m.group(1) or m.group(2)) + "[]"
    if re.fullmatch(r"[A-Za-z_$][\w$]*", text) and text not in ("null", "true", "false", "this"):
        decl = view.declared_var(text, offset, inv.enclosing_method, inv.enclosing_class)
        if decl is not None:
            return re.sub(r"\s+", "", decl.declared_type_name)
    return None


def detect_query_calls(model, view):
    for inv in view.invocations:
        if inv.method_name == "query" and len(inv.argument_spans) >= 2:
            args = inv.argument_spans
            types = [_argument_type(view, model, a, inv.call_span.start, inv) for a in args]
            texts = [_text(model, a) for a in args]
            pair = None
            for i in range(len(args)):
                for j in range(i + 1, len(args)):
                    if types[i] is not None and types[i] == types[j] and texts[i] != texts[j]:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is not None:
                i, j = pair
                yield _Hit("InvalidIndexQueryParameter", inv.call_span,
                           {"swap": [[args[i].start, args[i].end], [args[j].start, args[j].end]],
                            "indexes": [i, j]}, inv.top_class)
        if inv.method_name in ("rawQuery", "execSQL") and inv.argument_spans:
            lits = _literals_within(view, inv.argument_spans[0])
            if lits and _logical_chars(lits[0].value[1:-1]):
                yield _Hit("InvalidSQLQuery", lits[0].span, {}, inv.top_class)


def _logical_chars(body: str):
    """Split a Java string-literal body into characters, keeping escapes whole."""
    return re.findall(r"\\u+[0-9a-fA-F]{4}|\\[0-7]{1,3}|\\.|.", body, re.DOTALL)


def detect_literals(model, view):
    for inv in view.invocations:
        if inv.method_name == "parse" and inv.receiver_text in ("Uri", "android.net.Uri") and inv.argument_spans:
            lits = _literals_within(view, inv.argument_spans[0])
            if lits:
                yield _Hit("InvalidURI", lits[0].span, {}, inv.top_class)
        if inv.method_name in FILE_OPENERS:
            for arg in inv.argument_spans:
                if _is_literal(view, arg) is not None:
                    yield _Hit("InvalidFilePath", arg, {"call": inv.method_name}, inv.top_class)
    for inst in view.instantiations:
        if _simple(inst.class_name) in FILE_CLASSES:
            for arg in inst.argument_spans:
                if _is_literal(view, arg) is not None:
                    yield _Hit("InvalidFilePath", arg, {"call": "new " + inst.class_name}, inst.top_class)


def detect_dates(model, view):
    for inst in view.instantiations:
        if inst.class_name not in ("Date", "java.util.Date") or inst.has_body:
            continue
        args = [_text(model, a).strip() for a in inst.argument_spans]
        if args == ["0"] or args == ["0L"]:
            continue
        yield _Hit("InvalidDate", inst.span, {"class_name": inst.class_name}, inst.top_class)


def detect_connection_timeout(model, view):
    for inv in view.invocations:
        if inv.method_name == "setConnectTimeout" and len(inv.argument_spans) == 1:
            arg = inv.argument_spans[0]
            literal = INT_RE.fullmatch(_text(model, arg).strip()) is not None
            yield _Hit("LongConnectionTimeOut", arg, {"literal": literal}, inv.top_class)


def _bitmap_dims(method, arity):
    if method == "createScaledBitmap" and arity == 4:
        return (1, 2)
    if method == "createBitmap":
        return {3: (0, 1), 4: (1, 2), 5: (3, 4), 6: (3, 4), 7: (3, 4)}.get(arity)
    return None


def detect_bitmaps(model, view):
    for inv in view.invocations:
        dims = _bitmap_dims(inv.method_name, len(inv.argument_spans))
        if dims is None:
            continue
        spans = [inv.argument_spans[k] for k in dims]
        if all(_text(model, s).strip() == "10000" for s in spans):
            continue
        yield _Hit("OOMLargeImage", inv.call_span, {"dims": [[s.start, s.end] for s in spans]}, inv.top_class)


_TEXT_DETECTORS = (
    detect_activity_not_defined,
    detect_invalid_activity_name,
    detect_invalid_label,
    detect_wrong_main_activity,
    detect_missing_permission,
    detect_sdk_version,
    detect_wrong_string_resource,
    detect_invalid_color,
)

_JAVA_DETECTORS = (
    detect_intent_instantiations,
    detect_put_extra,
    detect_not_parcelable_serializable,
    detect_gps_location,
    detect_method_bodies,
    detect_backend,
    detect_find_view,
    detect_bluetooth,
    detect_close_nullification,
    detect_query_calls,
    detect_literals,
    detect_dates,
    detect_connection_timeout,
    detect_bitmaps,
)


def _all_hits(model):
    for detector in _TEXT_DETECTORS:
        yield from detector(model)
    for path in sorted(model.java_views):
        view = model.java_views[path]
        for detector in _JAVA_DETECTORS:
            yield from detector(model, view)


def _main_activity_class(model):
    if model.main_activity is None:
        return None
    return model.qualify_activity(model.main_activity).rsplit(".", 1)[-1]


def extract_pfp(model: SourceModel, operators: Optional[Iterable[str]] = None,
                config: Optional[PfpConfig] = None):
    """Every applicable (operator, location) pair, ordered by file, offset, operator."""
    config = config or PfpConfig()
    known = set(operator_ids())
    selected = set(known if operators is None else operators)
    unknown = sorted(selected - known)
    if unknown:
        raise UnknownOperator(f"unknown operator(s): {', '.join(unknown)}")
    selected -= set(config.disabled)
    main_class = _main_activity_class(model) if config.exclude_main_activity else None
    guarded = {Category.ACTIVITY_INTENTS, Category.GUI}

    entries = {}
    for hit in _all_hits(model):
        if hit.operator_id not in selected:
            continue
        if (main_class is not None and hit.owner == main_class
                and operator_by_id(hit.operator_id).category in guarded):
            continue
        key = stable_key(hit.operator_id, hit.target, hit.aux)
        if key in entries:
            raise AssertionError(f"duplicate profile entry {hit.operator_id} at {hit.target}")
        entries[key] = PfpEntry(hit.operator_id, hit.target, hit.aux, key)
    return sorted(entries.values(),
                  key=lambda e: (e.target.file, e.target.start, e.operator_id, e.target.end, e.stable_key))


def profile_document(model, entries):
    return {
        "format_version": 1,
        "root": model.root,
        "entries": [e.to_record(model) for e in entries],
        "diagnostics": [str(d) for d in model.diagnostics],
    }
