"""Identity registry, residual checks and reports."""

from .cases import CASES, IdentityCase, Status, TolClass, list_cases
from .runner import SuiteReport, Verdict, case_residual, evaluate_case, report_schema, residual, run_suite
from .table import TABLE_ROWS, build_table, render_table

__all__ = [
    "CASES", "IdentityCase", "Status", "SuiteReport", "TABLE_ROWS", "TolClass", "Verdict",
    "build_table", "case_residual", "evaluate_case", "list_cases", "render_table", "report_schema", "residual", "run_suite",
]
