"""Catalog of the Android-specific mutation operators.

Each entry records how an operator is detected (``AST`` over Java sources or
``Text`` over XML resources), its fault category, and the constants its
transformation uses.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from types import MappingProxyType

from .errors import NotFound


class Category(str, enum.Enum):
    ACTIVITY_INTENTS = "A/I"
    ANDROID_PROGRAMMING = "AP"
    BACK_END_SERVICES = "BES"
    CONNECTIVITY = "C"
    DATA = "D"
    DATABASE = "DB"
    GENERAL_PROGRAMMING = "GP"
    GUI = "GUI"
    IO = "I/O"
    NON_FUNCTIONAL = "NFR"


class Detection(str, enum.Enum):
    AST = "AST"
    TEXT = "Text"


SLEEP_MS = 5000
MUTANT_SUFFIX = "_mutant"
INVALID_PATH_PREFIX = "/invalid_path/"
LARGE_BITMAP_DIMENSION = 10000
LISTENER_METHODS = ("onClick", "onLongClick", "onItemClick", "onTouch", "onKey")
BACKEND_METHODS = ("execute", "openConnection", "getInputStream", "getResponse", "send")
BACKEND_RECEIVER_MARKERS = ("Http", "Url", "URL", "Client")


@dataclass(frozen=True)
class OperatorSpec:
    id: str
    category: Category
    detection: Detection
    description: str
    params: MappingProxyType = field(default_factory=lambda: MappingProxyType({}))

    def to_dict(self):
        return {
            "id": self.id,
            "category": self.category.value,
            "detection": self.detection.value,
            "description": self.description,
            "params": dict(self.params),
        }


def _op(id, category, detection, description, **params):
    return OperatorSpec(id, Category(category), Detection(detection), description, MappingProxyType(params))


_CATALOG = (
    _op("ActivityNotDefined", "A/I", "Text",
        "Delete an <activity> entry from the manifest (the launcher activity is left alone)"),
    _op("DifferentActivityIntentDefinition", "A/I", "AST",
        "Replace the X.class argument of an Intent instantiation with another declared activity",
        choice="lexicographically next activity in the registry", min_activities=2),
    _op("InvalidActivityName", "A/I", "Text",
        "Swap two adjacent characters in the android:name of a non-launcher activity",
        typo="adjacent swap at a seeded position"),
    _op("InvalidKeyIntentPutExtra", "A/I", "AST",
        "Change the literal key of an Intent.putExtra(key, value) call", suffix=MUTANT_SUFFIX),
    _op("InvalidLabel", "A/I", "Text",
        "Replace an android:label attribute in the manifest with a random string",
        length=8, alphabet="alphanumeric"),
    _op("NullIntent", "A/I", "AST", "Replace an Intent instantiation with null"),
    _op("NullValueIntentPutExtra", "A/I", "AST",
        "Replace the value argument of Intent.putExtra(key, value) with an empty Parcelable array",
        replacement="new android.os.Parcelable[0]"),
    _op("WrongMainActivity", "A/I", "Text",
        "Move the MAIN/LAUNCHER intent-filter to the next activity in declaration order",
        min_activities=2),
    _op("MissingPermissionManifest", "AP", "Text", "Remove a <uses-permission/> entry from the manifest"),
    _op("NotParcelable", "AP", "AST",
        "Remove 'implements Parcelable' and the @Override annotations of the Parcelable methods",
        parcelable_methods=("describeContents", "writeToParcel")),
    _op("NullGPSLocation", "AP", "AST",
        "Null the Location parameter at the start of onLocationChanged"),
    _op("SDKVersion", "AP", "Text",
        "Replace an SdkVersion attribute value with a different random API level",
        attributes=("android:minSdkVersion", "android:targetSdkVersion", "android:maxSdkVersion"),
        low=1, high=35),
    _op("WrongStringResource", "AP", "Text",
        "Reverse the value of a <string> resource (append a suffix when reversal is a no-op)",
        suffix=MUTANT_SUFFIX),
    _op("NullBackEndServiceReturn", "BES", "AST",
        "Assign null to a variable holding the result of a back-end service call",
        methods=BACKEND_METHODS, receiver_markers=BACKEND_RECEIVER_MARKERS),
    _op("BluetoothAdapterAlwaysEnabled", "C", "AST", "Replace a BluetoothAdapter.isEnabled() call with true"),
    _op("NullBluetoothAdapter", "C", "AST", "Assign null to a BluetoothAdapter variable after it is defined"),
    _op("InvalidURI", "D", "AST", "Prefix the literal passed to Uri.parse with an invalid path",
        prefix=INVALID_PATH_PREFIX),
    _op("ClosingNullCursor", "DB", "AST",
        "Assign null to a (non-final) cursor right before it is closed"),
    _op("InvalidIndexQueryParameter", "DB", "AST",
        "Swap two same-typed arguments of a query(...) call"),
    _op("InvalidSQLQuery", "DB", "AST",
        "Delete the last character of the SQL literal passed to rawQuery/execSQL",
        methods=("rawQuery", "execSQL")),
    _op("InvalidDate", "GP", "AST", "Replace a Date instantiation with the epoch, new Date(0)"),
    _op("NotSerializable", "GP", "AST", "Remove 'implements Serializable' from a class"),
    _op("BuggyGUIListener", "GUI", "AST", "Empty the body of a GUI listener method",
        methods=LISTENER_METHODS),
    _op("FindViewByIdReturnsNull", "GUI", "AST",
        "Assign null to a variable initialized from findViewById"),
    _op("InvalidColor", "GUI", "Text",
        "Replace a #RRGGBB/#AARRGGBB color in layout or color resources by its hex complement"),
    _op("InvalidIDFindView", "GUI", "AST",
        "Replace the R.id argument of findViewById with another referenced id", min_ids=2),
    _op("ViewComponentNotVisible", "GUI", "AST",
        "Hide a view obtained from findViewById",
        statement="<var>.setVisibility(android.view.View.GONE);"),
    _op("InvalidFilePath", "I/O", "AST",
        "Prefix a file path literal passed to a file constructor or opener",
        prefix=INVALID_PATH_PREFIX),
    _op("NullInputStream", "I/O", "AST", "Assign null to an input stream or reader right before it is closed"),
    _op("NullOutputStream", "I/O", "AST", "Assign null to an output stream or writer right before it is closed"),
    _op("LengthyBackEndService", "NFR", "AST", "Insert a long sleep right after a back-end service call",
        sleep_ms=SLEEP_MS),
    _op("LengthyGUICreation", "NFR", "AST", "Insert a long sleep at the start of onCreate",
        sleep_ms=SLEEP_MS),
    _op("LengthyGUIListener", "NFR", "AST", "Insert a long sleep at the start of a GUI listener method",
        sleep_ms=SLEEP_MS, methods=LISTENER_METHODS),
    _op("LongConnectionTimeOut", "NFR", "AST", "Multiply the argument of setConnectTimeout",
        factor=100, fallback=1000000),
    _op("OOMLargeImage", "NFR", "AST", "Set very large dimensions in createBitmap/createScaledBitmap",
        dimension=LARGE_BITMAP_DIMENSION),
)

NOT_IMPLEMENTED = ("InvalidMethodCallArgument", "NullMethodCallArgument", "InvalidViewFocus")

_BY_ID = MappingProxyType({spec.id: spec for spec in _CATALOG})


def catalog():
    """All implemented operators, grouped by category in the canonical order."""
    return list(_CATALOG)


def operator_ids():
    return [spec.id for spec in _CATALOG]


def operator_by_id(op_id) -> OperatorSpec:
    try:
        return _BY_ID[op_id]
    except KeyError:
        if op_id in NOT_IMPLEMENTED:
            raise NotFound(f"operator {op_id!r} is part of the catalog design but is not implemented") from None
        raise NotFound(f"unknown operator {op_id!r}") from None


def export_catalog(indent=2) -> str:
    """The catalog as a JSON document, for docs and report tooling."""
    doc = {"format_version": 1, "operators": [spec.to_dict() for spec in _CATALOG]}
    return json.dumps(doc, indent=indent, sort_keys=True, default=list)
