"""Closed-form evaluation table: one row per constant or special function, checked on its golden sample."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from ..errors import LerchkitError
from ..numeric import DEFAULT_OPTIONS, EvalOptions
from .cases import Status
from .runner import Verdict, evaluate_case, lookup

TABLE_ROWS = ("I06", "I14", "I15", "I16", "I18", "I19", "I20", "I21", "I27", "I30", "I31")


@dataclass
class TableRow:
    feature: str
    case_id: str
    residual: float | None
    verdict: str


def build_table(opts: EvalOptions = DEFAULT_OPTIONS) -> list:
    rows = []
    for short in TABLE_ROWS:
        case = lookup(short)
        try:
            res = evaluate_case(case, case.golden, opts)
        except LerchkitError:
            res = None
        if case.status is Status.QUARANTINED:
            verdict = Verdict.QUARANTINED
        elif res is None:
            verdict = Verdict.ERROR
        else:
            verdict = Verdict.PASS if res <= case.tolerance else Verdict.FAIL
        rows.append(TableRow(case.feature, case.id, res, verdict.value))
    return rows


def table_ok(rows) -> bool:
    return all(r.verdict in (Verdict.PASS.value, Verdict.QUARANTINED.value) for r in rows)


def render_table(rows, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"rows": [asdict(r) for r in rows]}, indent=2, allow_nan=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["feature", "case_id", "residual", "verdict"])
        for r in rows:
            writer.writerow([r.feature, r.case_id, "" if r.residual is None else repr(r.residual), r.verdict])
        return buf.getvalue()
    width = max(len(r.feature) for r in rows)
    lines = [f"{'feature':{width}s}  {'case':28s} {'residual':>10s}  verdict"]
    for r in rows:
        res = "-" if r.residual is None else f"{r.residual:.2e}"
        lines.append(f"{r.feature:{width}s}  {r.case_id:28s} {res:>10s}  {r.verdict}")
    return "\n".join(lines) + "\n"
