# Reading a per-operator report
#
# The report counts generated (GM), stillborn (SM) and trivial (TM) mutants
# per operator. Here we feed it outcomes shaped like the published numbers
# for 55 apps to see the totals and the three output formats.
#
#     python demos/table2_report.py

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import table2  # noqa: E402
from droidmut import build_report, parse, render  # noqa: E402

manifest, outcomes = table2.synthesize()
report = build_report(outcomes, manifest, include_operators=[row[0] for row in table2.ROWS])

print(render(report, "table").decode())
print(report.totals)  # {'TNGM': 8847, 'SM': 50, 'TM': 213}

# JSON and CSV round-trip exactly; the table is for people.

csv_bytes = render(report, "csv")
print(csv_bytes.decode().splitlines()[:3])
assert parse(csv_bytes, "csv") == report
assert parse(render(report, "json"), "json") == report

# Rates are pooled over one report. Averages across apps should be taken per
# app instead, which is what corpus_summary does (see corpus_run.py).

print({k: f"{v:.2%}" for k, v in report.rates.items()})
