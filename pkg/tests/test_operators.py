import json
from collections import Counter

import pytest

from droidmut.errors import NotFound
from droidmut.operators import Category, Detection, catalog, export_catalog, operator_by_id

# published operator table, implemented rows only: (id, category, detection)
TABLE_1 = [
    ("ActivityNotDefined", "A/I", "Text"),
    ("DifferentActivityIntentDefinition", "A/I", "AST"),
    ("InvalidActivityName", "A/I", "Text"),
    ("InvalidKeyIntentPutExtra", "A/I", "AST"),
    ("InvalidLabel", "A/I", "Text"),
    ("NullIntent", "A/I", "AST"),
    ("NullValueIntentPutExtra", "A/I", "AST"),
    ("WrongMainActivity", "A/I", "Text"),
    ("MissingPermissionManifest", "AP", "Text"),
    ("NotParcelable", "AP", "AST"),
    ("NullGPSLocation", "AP", "AST"),
    ("SDKVersion", "AP", "Text"),
    ("WrongStringResource", "AP", "Text"),
    ("NullBackEndServiceReturn", "BES", "AST"),
    ("BluetoothAdapterAlwaysEnabled", "C", "AST"),
    ("NullBluetoothAdapter", "C", "AST"),
    ("InvalidURI", "D", "AST"),
    ("ClosingNullCursor", "DB", "AST"),
    ("InvalidIndexQueryParameter", "DB", "AST"),
    ("InvalidSQLQuery", "DB", "AST"),
    ("InvalidDate", "GP", "AST"),
    ("NotSerializable", "GP", "AST"),
    ("BuggyGUIListener", "GUI", "AST"),
    ("FindViewByIdReturnsNull", "GUI", "AST"),
    ("InvalidColor", "GUI", "Text"),
    ("InvalidIDFindView", "GUI", "AST"),
    ("ViewComponentNotVisible", "GUI", "AST"),
    ("InvalidFilePath", "I/O", "AST"),
    ("NullInputStream", "I/O", "AST"),
    ("NullOutputStream", "I/O", "AST"),
    ("LengthyBackEndService", "NFR", "AST"),
    ("LengthyGUICreation", "NFR", "AST"),
    ("LengthyGUIListener", "NFR", "AST"),
    ("LongConnectionTimeOut", "NFR", "AST"),
    ("OOMLargeImage", "NFR", "AST"),
]


def test_catalog_matches_table():
    got = [(s.id, s.category.value, s.detection.value) for s in catalog()]
    assert got == TABLE_1
    assert len(got) == 35 == len({s.id for s in catalog()})


def test_category_counts():
    counts = Counter(s.category.value for s in catalog())
    assert counts == {"A/I": 8, "AP": 5, "BES": 1, "C": 2, "D": 1, "DB": 3, "GP": 2, "GUI": 5, "I/O": 3, "NFR": 5}


def test_lookup():
    spec = operator_by_id("NullIntent")
    assert spec.category == Category.ACTIVITY_INTENTS and spec.detection == Detection.AST
    assert operator_by_id("ActivityNotDefined").detection == Detection.TEXT


@pytest.mark.parametrize("op", ["InvalidViewFocus", "NullMethodCallArgument", "InvalidMethodCallArgument"])
def test_starred_operators_rejected(op):
    with pytest.raises(NotFound, match="not implemented"):
        operator_by_id(op)


def test_unknown_operator():
    with pytest.raises(NotFound, match="unknown"):
        operator_by_id("Bogus")


def test_export_document():
    doc = json.loads(export_catalog())
    assert doc["format_version"] == 1
    assert [o["id"] for o in doc["operators"]] == [row[0] for row in TABLE_1]
    sleep = [o for o in doc["operators"] if o["id"] == "LengthyGUICreation"][0]
    assert sleep["params"] == {"sleep_ms": 5000}
    assert export_catalog() == export_catalog()
