"""
Tabular rendering of verification reports
"""

from pathlib import Path
from typing import Any, Dict, List, Union

import pandas as pd

from utils.exceptions import ParseError

COLUMNS = ['suite', 'case', 'pass', 'margin', 'error']


class ReportFormatter:
    """Utility class turning report JSON into pandas tables"""

    @staticmethod
    def _suite_reports(data: Dict[str, Any]) -> List[Dict[str, Any]]:
        if 'reports' in data:
            return list(data['reports'])
        if 'suite' in data and 'cases' in data:
            return [data]
        raise ParseError("Not a report: expected 'reports' or 'suite'/'cases' keys", context={'keys': sorted(data)})

    @staticmethod
    def to_frame(data: Dict[str, Any]) -> pd.DataFrame:
        """One row per case"""
        rows = []
        for report in ReportFormatter._suite_reports(data):
            for case in report.get('cases', []):
                rows.append({
                    'suite': report['suite'],
                    'case': case['name'],
                    'pass': bool(case['pass']),
                    'margin': case.get('margin'),
                    'error': (case.get('details') or {}).get('error', ''),
                })
        frame = pd.DataFrame(rows, columns=COLUMNS)
        frame['margin'] = pd.to_numeric(frame['margin'], errors='coerce')
        return frame

    @staticmethod
    def summary_frame(data: Dict[str, Any]) -> pd.DataFrame:
        """Cases, failures and worst margin per suite"""
        frame = ReportFormatter.to_frame(data)
        if frame.empty:
            return pd.DataFrame(columns=['suite', 'cases', 'failed', 'min_margin'])
        grouped = frame.groupby('suite', sort=False)
        return pd.DataFrame({
            'cases': grouped['case'].count(),
            'failed': grouped['pass'].apply(lambda passed: int((~passed).sum())),
            'min_margin': grouped['margin'].min(),
        }).reset_index()

    @staticmethod
    def format_table(data: Dict[str, Any]) -> str:
        """Human-readable table of all cases followed by the per-suite summary"""
        frame = ReportFormatter.to_frame(data)
        if frame.empty:
            return "(no cases)"
        display = frame.copy()
        display['pass'] = display['pass'].map({True: 'PASS', False: 'FAIL'})
        display['margin'] = display['margin'].map(lambda m: '-' if pd.isna(m) else f"{m:.3e}")
        summary = ReportFormatter.summary_frame(data)
        return display.to_string(index=False) + "\n\n" + summary.to_string(index=False)

    @staticmethod
    def export_csv(data: Dict[str, Any], path: Union[str, Path]) -> Path:
        output = Path(path)
        output.parent.mkdir(parents=True, exist_ok=True)
        ReportFormatter.to_frame(data).to_csv(output, index=False)
        return output
