import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import table2
from droidmut.errors import InconsistentManifest
from droidmut.report import MutationReport, ReportRow, build_report, corpus_summary, parse, render
from droidmut.verify import MutantOutcome, Status


def table2_report():
    manifest, outcomes = table2.synthesize()
    return build_report(outcomes, manifest, include_operators=[r[0] for r in table2.ROWS])


def test_table2_totals():
    report = table2_report()
    assert report.totals == table2.TOTALS
    got = [(r.operator_id, r.generated, r.stillborn, r.trivial) for r in report.rows]
    assert sorted(got) == sorted(table2.ROWS)
    assert got == sorted(table2.ROWS, key=lambda r: (-r[1], r[0]))
    assert report.rates["sm_rate"] == pytest.approx(50 / 8847)


def test_single_row_verbatim():
    manifest, outcomes = table2.synthesize([("WrongStringResource", 3394, 0, 14)])
    report = build_report(outcomes, manifest)
    assert report.rows == (ReportRow("WrongStringResource", 3394, 0, 14),)
    assert "WrongStringResource,3394,0,14" in render(report, "csv").decode().splitlines()
    line = [ln for ln in render(report, "table").decode().splitlines() if ln.startswith("WrongString")][0]
    assert line.split() == ["WrongStringResource", "3394", "0", "14"]


def test_empty_report():
    report = build_report([], {"mutants": []})
    assert report.rows == ()
    assert report.totals == {"TNGM": 0, "SM": 0, "TM": 0}
    assert report.rates == {}
    doc = json.loads(render(report, "json"))
    assert "sm_rate" not in doc and "tm_rate" not in doc
    assert "rate" not in render(report, "table").decode()


def test_csv_header():
    lines = render(table2_report(), "csv").decode().splitlines()
    assert lines[0] == "operator,generated,stillborn,trivial"
    assert lines[-2] == "TOTAL,8847,50,213"
    assert lines[-1] == "#format_version=1"


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_roundtrip(fmt):
    report = table2_report()
    assert parse(render(report, fmt), fmt) == report
    assert parse(render(report, fmt), fmt).totals == report.totals


def test_roundtrip_with_kills():
    outcomes = [MutantOutcome("A-1", Status.KILLED), MutantOutcome("A-2", Status.SURVIVED),
                MutantOutcome("B-1", Status.KILLED)]
    manifest = {"mutants": [{"mutant_id": o.mutant_id, "operator_id": o.mutant_id[0]} for o in outcomes]}
    report = build_report(outcomes, manifest)
    assert report.with_kills and report.mutation_score == pytest.approx(2 / 3)
    for fmt in ("json", "csv"):
        assert parse(render(report, fmt), fmt) == report
    assert "Mutation score" in render(report, "table").decode()


def test_order_is_gm_desc_then_id():
    report = MutationReport.from_rows([("B", 2, 0, 0), ("A", 2, 0, 0), ("C", 5, 1, 0)])
    assert [r.operator_id for r in report.rows] == ["C", "A", "B"]


def test_inconsistent_manifest():
    manifest = {"mutants": [{"mutant_id": "A-1", "operator_id": "A"}]}
    with pytest.raises(InconsistentManifest):
        build_report([MutantOutcome("B-1", Status.LIVE)], manifest)
    with pytest.raises(InconsistentManifest):
        build_report([MutantOutcome("A-1", Status.LIVE)] * 2, manifest)


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_permutation_invariant(rnd):
    manifest, outcomes = table2.synthesize(table2.ROWS[-12:])
    shuffled = list(outcomes)
    rnd.shuffle(shuffled)
    assert build_report(shuffled, manifest) == build_report(outcomes, manifest)


def test_render_is_deterministic():
    for fmt in ("table", "json", "csv"):
        assert render(table2_report(), fmt) == render(table2_report(), fmt)
    with pytest.raises(ValueError):
        render(table2_report(), "xml")


def test_corpus_summary_means_per_app_rates():
    a = MutationReport.from_rows([("X", 100, 1, 10)])
    b = MutationReport.from_rows([("X", 10, 1, 0)])
    empty = MutationReport.from_rows([])
    s = corpus_summary({"a": a, "b": b, "c": empty})
    assert s["apps"] == 3
    # per-app mean, not pooled: (0.01 + 0.1) / 2
    assert s["mean_sm_rate"] == pytest.approx(0.055)
    assert s["mean_tm_rate"] == pytest.approx(0.05)
