"""Residual evaluation, seeded sampling and suite reports."""

from __future__ import annotations

import cmath
import csv
import io
import fnmatch
import json
import math
from importlib import resources
from dataclasses import asdict, dataclass, field
from enum import Enum

import numpy as np

from ..errors import DomainError, LerchkitError
from ..numeric import DEFAULT_OPTIONS, EvalOptions, as_complex
from .cases import IdentityCase, Status, list_cases

SCHEMA_VERSION = 1
HUGE = 1e8
MAX_RESAMPLE = 1000
TWO_PI = 2 * math.pi


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    QUARANTINED = "QUARANTINED"
    ERROR = "ERROR"


class UnknownCaseError(DomainError):
    pass


def residual(lhs, rhs) -> float:
    """``|lhs - rhs| / max(1, |lhs|, |rhs|)``."""
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def _wrapped_log_residual(lhs, rhs) -> float:
    """Residual of principal logs with the ``2 pi i`` ambiguity removed."""
    la, lb = cmath.log(lhs), cmath.log(rhs)
    d = la - lb
    d -= 1j * TWO_PI * round(d.imag / TWO_PI)
    return abs(d) / max(1.0, abs(la), abs(lb))


def case_residual(case: IdentityCase, lhs: complex, rhs: complex) -> float:
    """Residual between the two sides, with the case's branch fallbacks.

    Product identities are compared in logarithmic form once either side
    exceeds 1e8 in magnitude. For identities whose sides are logarithms a
    difference close to a nonzero multiple of ``2 pi i`` means the two sides
    sit on different sheets; then ``exp`` of both sides is compared.
    """
    res = residual(lhs, rhs)
    if case.product and max(abs(lhs), abs(rhs)) > HUGE and lhs != 0 and rhs != 0:
        return _wrapped_log_residual(lhs, rhs)
    if case.log_form:
        d = lhs - rhs
        turns = round(d.imag / TWO_PI)
        if turns != 0 and abs(d - 1j * TWO_PI * turns) <= 1e-6 * max(1.0, abs(lhs), abs(rhs)):
            return min(res, residual(cmath.exp(lhs), cmath.exp(rhs)))
    return res


def lookup(case_id: str) -> IdentityCase:
    for case in list_cases():
        if case.id == case_id or case.id.split("-")[0] == case_id:
            return case
    raise UnknownCaseError(f"unknown case {case_id!r}")


def evaluate_case(case_id: str | IdentityCase, assignment: dict,
                  opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Residual of one case at one parameter assignment.

    Raises
    ------
    DomainError
        Missing parameters or an assignment the case rejects as too close
        to a singularity.
    LerchkitError
        Any evaluation failure on either side.
    """
    case = lookup(case_id) if isinstance(case_id, str) else case_id
    missing = set(case.param_names()) - set(assignment)
    if missing:
        raise DomainError(f"{case.id}: missing parameters {sorted(missing)}")
    if case.admissible is not None and not case.admissible(assignment):
        raise DomainError(f"{case.id}: assignment too close to a singularity")
    lhs = as_complex(case.lhs(assignment, opts))
    rhs = as_complex(case.rhs(assignment, opts))
    return case_residual(case, lhs, rhs)


def sample_assignments(case: IdentityCase, count: int, seed: int, index: int,
                       regime: str = "complex") -> list:
    """Seeded parameter draws, resampling inadmissible ones.

    The generator for case number ``index`` is seeded with
    ``SeedSequence([seed, index])`` so each case's samples do not depend on
    which other cases were selected.
    """
    rng = np.random.default_rng(np.random.SeedSequence([seed, index]))
    params = list(case.params)
    if regime == "real":
        override = {p.name: p for p in case.real_params or ()}
        params = [override.get(p.name, p) for p in params]
    out = []
    for _ in range(count):
        for _attempt in range(MAX_RESAMPLE):
            draw = {p.name: p.domain.sample(rng) for p in params}
            if case.admissible is None or case.admissible(draw):
                break
        else:
            raise DomainError(f"{case.id}: could not draw an admissible sample")
        out.append(draw)
    return out


@dataclass
class CaseRecord:
    id: str
    title: str
    status: str
    tol_class: str
    tolerance: float
    samples: int
    max_residual: float | None
    mean_residual: float | None
    golden_residual: float | None
    verdict: str
    error: str | None = None


@dataclass
class SuiteReport:
    seed: int
    samples_per_case: int
    regime: str
    options: dict
    cases: list = field(default_factory=list)

    @property
    def totals(self) -> dict:
        counts = {v.value: 0 for v in Verdict}
        for rec in self.cases:
            counts[rec.verdict] += 1
        return {"cases": len(self.cases), **{k.lower(): v for k, v in counts.items()}}

    @property
    def ok(self) -> bool:
        """True iff no ACTIVE case failed or errored."""
        return all(rec.verdict in (Verdict.PASS.value, Verdict.QUARANTINED.value) for rec in self.cases)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "seed": self.seed,
            "samples_per_case": self.samples_per_case,
            "regime": self.regime,
            "options": self.options,
            "cases": [asdict(rec) for rec in self.cases],
            "totals": self.totals,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"

    def to_text(self) -> str:
        lines = [f"seed {self.seed}, {self.samples_per_case} samples per case, regime {self.regime}",
                 f"{'case':32s} {'status':11s} {'tol':>7s} {'max res':>10s} {'golden':>10s}  verdict"]
        for rec in self.cases:
            lines.append(f"{rec.id:32s} {rec.status:11s} {rec.tolerance:7.0e} "
                         f"{_fmt(rec.max_residual):>10s} {_fmt(rec.golden_residual):>10s}  {rec.verdict}"
                         + (f"  ({rec.error})" if rec.error else ""))
        t = self.totals
        lines.append(f"{t['cases']} cases: {t['pass']} pass, {t['fail']} fail, "
                     f"{t['quarantined']} quarantined, {t['error']} error")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["case_id", "status", "tol_class", "samples", "max_residual",
                         "mean_residual", "golden_residual", "verdict"])
        for rec in self.cases:
            writer.writerow([rec.id, rec.status, rec.tol_class, rec.samples, _csv(rec.max_residual),
                             _csv(rec.mean_residual), _csv(rec.golden_residual), rec.verdict])
        return buf.getvalue()


def report_schema() -> dict:
    """JSON Schema (draft 2020-12) that :meth:`SuiteReport.to_json` output satisfies."""
    text = resources.files("lerchkit").joinpath("schema/report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _fmt(x):
    return "-" if x is None else f"{x:.2e}"


def _csv(x):
    return "" if x is None else repr(x)


def _key(assignment: dict):
    return tuple(sorted(assignment.items()))


def run_case(case: IdentityCase, samples: int, seed: int, index: int,
             opts: EvalOptions = DEFAULT_OPTIONS, regime: str = "complex",
             tolerance: float | None = None) -> CaseRecord:
    """Evaluate one case on its golden sample and ``samples`` seeded draws.

    ``tolerance`` overrides the bound of the case's tolerance class.
    """
    bound = case.tolerance if tolerance is None else tolerance
    seen = {}
    error = None
    residuals = []
    golden = None
    try:
        golden = evaluate_case(case, case.golden, opts)
        for draw in sample_assignments(case, samples, seed, index, regime):
            key = _key(draw)
            if key not in seen:
                seen[key] = evaluate_case(case, draw, opts)
            residuals.append(seen[key])
    except (LerchkitError, ArithmeticError, ValueError) as exc:
        error = f"{type(exc).__name__}: {exc}"
    worst = max(residuals) if residuals else None
    mean = float(np.mean(residuals)) if residuals else None
    if case.status is Status.QUARANTINED:
        verdict = Verdict.QUARANTINED
    elif error is not None:
        verdict = Verdict.ERROR
    elif max(worst, golden) <= bound:
        verdict = Verdict.PASS
    else:
        verdict = Verdict.FAIL
    return CaseRecord(case.id, case.title, case.status.value, case.tol_class.value, bound,
                      len(residuals), worst, mean, golden, verdict.value, error)


def select(pattern: str = "*") -> list:
    """Cases whose id matches ``pattern`` (glob, or an id prefix such as ``I14``)."""
    chosen = []
    for index, case in enumerate(list_cases()):
        short = case.id.split("-")[0]
        if fnmatch.fnmatchcase(case.id, pattern) or fnmatch.fnmatchcase(short, pattern):
            chosen.append((index, case))
    if not chosen:
        raise UnknownCaseError(f"unknown case {pattern!r}")
    return chosen


def run_suite(pattern: str = "*", samples_per_case: int = 25, seed: int = 42,
              opts: EvalOptions = DEFAULT_OPTIONS, regime: str = "complex",
              tolerance: float | None = None) -> SuiteReport:
    """Run every case matching ``pattern`` and collect a :class:`SuiteReport`.

    ``regime="real"`` runs only the cases that declare a real-parameter
    family and draws those parameters from the real line.
    """
    if samples_per_case < 1:
        raise DomainError("samples_per_case must be at least 1")
    if regime not in ("complex", "real"):
        raise DomainError("regime must be 'complex' or 'real'")
    report = SuiteReport(seed, samples_per_case, regime, asdict(opts))
    for index, case in select(pattern):
        if regime == "real" and case.real_params is None:
            continue
        report.cases.append(run_case(case, samples_per_case, seed, index, opts, regime, tolerance))
    return report
