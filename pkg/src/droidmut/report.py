"""Per-operator aggregation of mutant outcomes (generated / stillborn / trivial)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from statistics import mean
from typing import Optional

from .errors import DocumentError, InconsistentManifest
from .verify import Status

FORMATS = ("table", "json", "csv")
CSV_HEADER = ["operator", "generated", "stillborn", "trivial"]


@dataclass(frozen=True)
class ReportRow:
    operator_id: str
    generated: int
    stillborn: int
    trivial: int
    killed: Optional[int] = None
    survived: Optional[int] = None


@dataclass(frozen=True)
class MutationReport:
    rows: tuple = ()
    with_kills: bool = False
    totals: dict = field(init=False, compare=False)

    def __post_init__(self):
        totals = {
            "TNGM": sum(r.generated for r in self.rows),
            "SM": sum(r.stillborn for r in self.rows),
            "TM": sum(r.trivial for r in self.rows),
        }
        if self.with_kills:
            totals["killed"] = sum(r.killed or 0 for r in self.rows)
            totals["survived"] = sum(r.survived or 0 for r in self.rows)
        object.__setattr__(self, "totals", totals)

    @classmethod
    def from_rows(cls, rows, with_kills=None):
        rows = [r if isinstance(r, ReportRow) else ReportRow(*r) for r in rows]
        if with_kills is None:
            with_kills = any(r.killed is not None for r in rows)
        rows.sort(key=lambda r: (-r.generated, r.operator_id))
        return cls(tuple(rows), with_kills)

    @property
    def rates(self):
        """sm_rate and tm_rate over TNGM; empty when nothing was generated."""
        t = self.totals
        if t["TNGM"] == 0:
            return {}
        return {"sm_rate": t["SM"] / t["TNGM"], "tm_rate": t["TM"] / t["TNGM"]}

    @property
    def mutation_score(self):
        if not self.with_kills:
            return None
        denom = self.totals["killed"] + self.totals["survived"]
        return self.totals["killed"] / denom if denom else None

    def row(self, operator_id):
        for r in self.rows:
            if r.operator_id == operator_id:
                return r
        raise KeyError(operator_id)


def _manifest_operators(manifest):
    if isinstance(manifest, dict):
        records = manifest["mutants"]
    else:
        records = manifest
    ops = {}
    for m in records:
        if isinstance(m, dict):
            ops[m["mutant_id"]] = m["operator_id"]
        else:
            ops[m.mutant_id] = m.operator_id
    return ops


def build_report(outcomes, manifest, include_operators=()) -> MutationReport:
    """Aggregate outcomes per operator; every manifest mutant counts as generated.

    ``include_operators`` adds zero rows for operators that produced nothing.
    """
    ops = _manifest_operators(manifest)
    counts = {op: [0, 0, 0, 0, 0] for op in include_operators}
    for op in ops.values():
        counts.setdefault(op, [0, 0, 0, 0, 0])[0] += 1
    seen = set()
    with_kills = False
    for o in outcomes:
        if o.mutant_id not in ops:
            raise InconsistentManifest(f"outcome for unknown mutant {o.mutant_id}")
        if o.mutant_id in seen:
            raise InconsistentManifest(f"duplicate outcome for {o.mutant_id}")
        seen.add(o.mutant_id)
        c = counts[ops[o.mutant_id]]
        if o.status == Status.STILLBORN:
            c[1] += 1
        elif o.status == Status.TRIVIAL:
            c[2] += 1
        elif o.status == Status.KILLED:
            c[3] += 1
            with_kills = True
        elif o.status == Status.SURVIVED:
            c[4] += 1
            with_kills = True
    rows = []
    for op, (gm, sm, tm, k, s) in counts.items():
        rows.append(ReportRow(op, gm, sm, tm, k if with_kills else None, s if with_kills else None))
    return MutationReport.from_rows(rows, with_kills)


# ---------------------------------------------------------------------------
# rendering


def _doc(report: MutationReport):
    rows = []
    for r in report.rows:
        d = {"operator": r.operator_id, "generated": r.generated, "stillborn": r.stillborn, "trivial": r.trivial}
        if report.with_kills:
            d["killed"] = r.killed
            d["survived"] = r.survived
        rows.append(d)
    doc = {"format_version": 1, "rows": rows, "totals": report.totals}
    doc.update(report.rates)
    if report.mutation_score is not None:
        doc["mutation_score"] = report.mutation_score
    return doc


def _table(report: MutationReport):
    headers = ["Operator", "GM", "SM", "TM"] + (["Killed", "Survived"] if report.with_kills else [])
    body = []
    for r in report.rows:
        cells = [r.operator_id, r.generated, r.stillborn, r.trivial]
        if report.with_kills:
            cells += [r.killed, r.survived]
        body.append([str(c) for c in cells])
    t = report.totals
    total = ["Total", t["TNGM"], t["SM"], t["TM"]] + ([t["killed"], t["survived"]] if report.with_kills else [])
    body.append([str(c) for c in total])
    widths = [max(len(row[i]) for row in [headers] + body) for i in range(len(headers))]

    def line(cells):
        first = cells[0].ljust(widths[0])
        return "  ".join([first] + [c.rjust(w) for c, w in zip(cells[1:], widths[1:])]).rstrip()

    out = [line(headers), line(["-" * w for w in widths])]
    out += [line(row) for row in body[:-1]]
    out += [line(["-" * w for w in widths]), line(body[-1])]
    rates = report.rates
    if rates:
        out.append(f"SM rate {rates['sm_rate']:.2%}   TM rate {rates['tm_rate']:.2%}")
    if report.mutation_score is not None:
        out.append(f"Mutation score {report.mutation_score:.2%}")
    return "\n".join(out) + "\n"


def _csv(report: MutationReport):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = CSV_HEADER + (["killed", "survived"] if report.with_kills else [])
    writer.writerow(header)
    for r in report.rows:
        row = [r.operator_id, r.generated, r.stillborn, r.trivial]
        if report.with_kills:
            row += [r.killed, r.survived]
        writer.writerow(row)
    t = report.totals
    writer.writerow(["TOTAL", t["TNGM"], t["SM"], t["TM"]] + ([t["killed"], t["survived"]] if report.with_kills else []))
    buf.write("#format_version=1\n")
    return buf.getvalue()


def render(report: MutationReport, fmt="table") -> bytes:
    if fmt == "table":
        return _table(report).encode()
    if fmt == "json":
        return (json.dumps(_doc(report), indent=2, sort_keys=True) + "\n").encode()
    if fmt == "csv":
        return _csv(report).encode()
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse(data: bytes, fmt) -> MutationReport:
    """Inverse of ``render`` for the json and csv formats."""
    text = data.decode()
    if fmt == "json":
        doc = json.loads(text)
        if doc.get("format_version") != 1:
            raise DocumentError("unsupported report format_version")
        kills = any("killed" in r for r in doc["rows"])
        rows = [ReportRow(r["operator"], r["generated"], r["stillborn"], r["trivial"],
                          r.get("killed"), r.get("survived")) for r in doc["rows"]]
        return MutationReport.from_rows(rows, kills)
    if fmt == "csv":
        lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
        reader = csv.reader(lines)
        header = next(reader)
        if header[:4] != CSV_HEADER:
            raise DocumentError(f"unexpected csv header {header}")
        kills = len(header) > 4
        rows = []
        for rec in reader:
            if rec[0] == "TOTAL":
                continue
            nums = [int(x) for x in rec[1:]]
            rows.append(ReportRow(rec[0], *nums))
        return MutationReport.from_rows(rows, kills)
    raise ValueError(f"format {fmt!r} cannot be parsed")


def corpus_summary(reports):
    """Mean per-app rates over ``{app_name: MutationReport}``.

    Apps with no generated mutants have no rates and are left out of the means.
    """
    rated = {app: r.rates for app, r in reports.items() if r.rates}
    summary = {
        "apps": len(reports),
        "mean_generated": mean(r.totals["TNGM"] for r in reports.values()) if reports else None,
    }
    if rated:
        summary["mean_sm_rate"] = mean(r["sm_rate"] for r in rated.values())
        summary["mean_tm_rate"] = mean(r["tm_rate"] for r in rated.values())
    return summary
