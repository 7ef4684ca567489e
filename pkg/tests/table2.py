"""Published per-operator counts (GM, SM, TM) over 55 apps, copied by hand."""

ROWS = [
    ("WrongStringResource", 3394, 0, 14),
    ("NullIntent", 559, 3, 41),
    ("InvalidKeyIntentPutExtra", 459, 3, 11),
    ("NullValueIntentPutExtra", 459, 0, 14),
    ("InvalidIDFindView", 456, 4, 30),
    ("FindViewByIdReturnsNull", 413, 0, 40),
    ("ActivityNotDefined", 384, 1, 8),
    ("InvalidActivityName", 382, 0, 10),
    ("DifferentActivityIntentDefinition", 358, 2, 8),
    ("ViewComponentNotVisible", 347, 5, 7),
    ("MissingPermissionManifest", 229, 0, 8),
    ("InvalidFilePath", 220, 0, 1),
    ("InvalidLabel", 214, 0, 3),
    ("ClosingNullCursor", 179, 13, 5),
    ("LengthyGUICreation", 129, 0, 1),
    ("BuggyGUIListener", 122, 0, 2),
    ("LengthyGUIListener", 122, 0, 0),
    ("SDKVersion", 66, 0, 2),
    ("NullInputStream", 61, 0, 4),
    ("WrongMainActivity", 56, 0, 0),
    ("InvalidColor", 52, 0, 0),
    ("NullOutputStream", 45, 0, 2),
    ("InvalidDate", 40, 0, 0),
    ("InvalidSQLQuery", 33, 0, 2),
    ("NotSerializable", 15, 7, 0),
    ("NullBluetoothAdapter", 9, 0, 0),
    ("LengthyBackEndService", 8, 0, 0),
    ("NullBackEndServiceReturn", 8, 1, 0),
    ("NotParcelable", 7, 6, 0),
    ("InvalidIndexQueryParameter", 7, 1, 0),
    ("OOMLargeImage", 7, 4, 0),
    ("BluetoothAdapterAlwaysEnabled", 4, 0, 0),
    ("InvalidURI", 2, 0, 0),
    ("NullGPSLocation", 1, 0, 0),
    ("LongConnectionTimeOut", 0, 0, 0),
]
TOTALS = {"TNGM": 8847, "SM": 50, "TM": 213}


def synthesize(rows=ROWS):
    """A manifest and outcome list whose per-operator counts equal ``rows``."""
    from droidmut.verify import MutantOutcome, Status

    manifest = {"format_version": 1, "mutants": []}
    outcomes = []
    for op, gm, sm, tm in rows:
        for i in range(1, gm + 1):
            mid = f"{op}-{i}"
            manifest["mutants"].append({"mutant_id": mid, "operator_id": op})
            status = Status.STILLBORN if i <= sm else Status.TRIVIAL if i <= sm + tm else Status.LIVE
            outcomes.append(MutantOutcome(mid, status))
    return manifest, outcomes
