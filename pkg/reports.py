#!/usr/bin/env python3
"""
Verification reports and their JSON / CSV / Excel serialization
"""

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import pandas as pd
from openpyxl import Workbook
from openpyxl.styles import Font, PatternFill

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ['case_id', 'check_id', 'params', 'max_abs_err', 'max_rel_err',
                  'tolerance', 'pass', 'runtime_ms']
PLOT_COLUMNS = ['case_id', 'k', 'x', 'a_psi', 'lambda_psi']


@dataclass
class VerificationReport:
    """
    Outcome of one check at one parameter point

    Args:
        case_id: kernel or family name, e.g. 'whittaker(0.5)'
        check_id: name of the check
        params: parameter point (plus 'error' for failed checks)
        max_abs_err: largest absolute discrepancy (None when the check crashed)
        max_rel_err: largest relative discrepancy (None when the check crashed)
        tolerance: threshold the pass rule compares against
        absolute: compare max_abs_err instead of max_rel_err
    """
    case_id: str
    check_id: str
    params: Dict[str, object]
    max_abs_err: Optional[float]
    max_rel_err: Optional[float]
    tolerance: float
    passed: bool = field(default=False)
    runtime_ms: int = 0
    absolute: bool = False

    def __post_init__(self):
        self.passed = self._evaluate()

    def _evaluate(self) -> bool:
        value = self.max_abs_err if self.absolute else self.max_rel_err
        if value is None or not math.isfinite(value):
            return False
        return value <= self.tolerance

    def to_dict(self) -> dict:
        return {
            'case_id': self.case_id,
            'check_id': self.check_id,
            'params': dict(self.params),
            'max_abs_err': _finite_or_none(self.max_abs_err),
            'max_rel_err': _finite_or_none(self.max_rel_err),
            'tolerance': self.tolerance,
            'pass': self.passed,
            'runtime_ms': int(self.runtime_ms),
        }


def make_report(case_id: str, check_id: str, params: dict, abs_errs, rel_errs,
                tolerance: float, absolute: bool = False) -> VerificationReport:
    """Reduce error samples (scalars or sequences) to a report with max errors"""
    return VerificationReport(case_id=case_id, check_id=check_id, params=params,
                              max_abs_err=_max(abs_errs), max_rel_err=_max(rel_errs),
                              tolerance=tolerance, absolute=absolute)


def detection_report(case_id: str, check_id: str, params: dict, observed: float,
                     threshold: float) -> VerificationReport:
    """
    Report for a check that passes when `observed` is at least `threshold`
    (negative controls, parameter perturbations)
    """
    params = dict(params)
    params['observed'] = float(observed)
    params['threshold'] = float(threshold)
    ratio = threshold / observed if observed > 0 else math.inf
    return VerificationReport(case_id=case_id, check_id=check_id, params=params,
                              max_abs_err=float(observed), max_rel_err=ratio, tolerance=1.0)


def failed_report(case_id: str, check_id: str, params: dict, tolerance: float,
                  diagnostic: str) -> VerificationReport:
    params = dict(params)
    params['error'] = diagnostic
    return VerificationReport(case_id=case_id, check_id=check_id, params=params,
                              max_abs_err=None, max_rel_err=None, tolerance=tolerance)


def sort_reports(reports: Sequence[VerificationReport]) -> List[VerificationReport]:
    return sorted(reports, key=lambda r: (r.case_id, r.check_id,
                                          json.dumps(r.params, sort_keys=True, default=str)))


def format_params(params: dict) -> str:
    """Serialize params as k=v;k=v"""
    return ';'.join(f"{key}={_format_value(value)}" for key, value in params.items())


def emit_report(reports: Sequence[VerificationReport], format: str, path: str):
    """
    Write reports to path

    Args:
        reports: reports to write, in the order given
        format: 'json', 'csv' or 'xlsx'
        path: output file path
    """
    if format == 'json':
        payload = [report.to_dict() for report in reports]
        with open(path, 'w', encoding='utf-8') as handle:
            json.dump(payload, handle, ensure_ascii=False, indent=2)
            handle.write('\n')
    elif format == 'csv':
        _report_frame(reports).to_csv(path, index=False, float_format='%.17g', encoding='utf-8')
    elif format == 'xlsx':
        _write_xlsx(reports, path)
    else:
        raise ValueError(f"Unknown report format '{format}'")
    logger.info(f"Wrote {len(reports)} reports to {path} ({format})")


def emit_plot_data(rows: List[dict], path: str):
    """Write (x, A psi_k(x), lambda psi_k(x)) samples as CSV"""
    frame = pd.DataFrame(rows, columns=PLOT_COLUMNS)
    frame.to_csv(path, index=False, float_format='%.17g', encoding='utf-8')
    logger.info(f"Wrote {len(frame)} plot-data rows to {path}")


def _report_frame(reports: Sequence[VerificationReport]) -> pd.DataFrame:
    rows = []
    for report in reports:
        row = report.to_dict()
        row['params'] = format_params(row['params'])
        rows.append(row)
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def _write_xlsx(reports: Sequence[VerificationReport], path: str):
    wb = Workbook()
    sheet = wb.active
    sheet.title = 'Verification'
    header_fill = PatternFill(start_color="CCCCCC", end_color="CCCCCC", fill_type="solid")
    pass_fill = PatternFill(start_color="00FF00", end_color="00FF00", fill_type="solid")
    fail_fill = PatternFill(start_color="FF9999", end_color="FF9999", fill_type="solid")

    for col, header in enumerate(REPORT_COLUMNS, 1):
        cell = sheet.cell(row=1, column=col)
        cell.value = header
        cell.font = Font(bold=True)
        cell.fill = header_fill

    frame = _report_frame(reports)
    pass_col = REPORT_COLUMNS.index('pass') + 1
    for row_idx, row in enumerate(frame.itertuples(index=False), 2):
        for col_idx, value in enumerate(row, 1):
            sheet.cell(row=row_idx, column=col_idx).value = None if _is_missing(value) else value
        sheet.cell(row=row_idx, column=pass_col).fill = pass_fill if row[pass_col - 1] else fail_fill

    for col in 'ABCDEFGH':
        sheet.column_dimensions[col].width = 15
    sheet.column_dimensions['C'].width = 60
    wb.save(path)


def _format_value(value) -> str:
    if isinstance(value, float):
        return format(value, '.17g')
    return str(value)


def _finite_or_none(value):
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def _is_missing(value) -> bool:
    return value is None or (isinstance(value, float) and math.isnan(value))


def _max(values) -> Optional[float]:
    if values is None:
        return None
    if isinstance(values, (int, float)):
        return float(values)
    values = [float(v) for v in values]
    if not values:
        return 0.0
    if any(math.isnan(v) for v in values):
        return math.nan
    return max(values)
