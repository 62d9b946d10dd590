"""
Reports produced by the experiments, their serialization to JSON or CSV and their console
rendering.
"""
import csv
import io
import json
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Dict
from typing import List
from typing import Union

import numpy as np
from rich import box
from rich.table import Table

from ..config import get_active_theme as TH
from .config import ReportFormat

Cell = Union[str, int, float, bool]


@dataclass
class Report:
    """Result of one experiment run.

    :param experiment: Identifier of the experiment that produced the rows.
    :param inputs: The configuration echoed back, seed included.
    :param rows: One dictionary per result row, each with a boolean `ok` column.
    """

    experiment: str
    inputs: Dict[str, Any]
    rows: List[Dict[str, Cell]] = field(default_factory=list)

    def __post_init__(self) -> None:
        for row in self.rows:
            self._check_row(row)

    @staticmethod
    def _check_row(row: Dict[str, Cell]) -> None:
        if not isinstance(row.get("ok"), bool):
            raise ValueError("Every report row needs a boolean 'ok' column.")
        for key, value in row.items():
            if isinstance(value, float) and not np.isfinite(value):
                raise ValueError(f"Report entry '{key}' is not finite ({value}).")

    def add_row(self, row: Dict[str, Cell]) -> None:
        self._check_row(row)
        self.rows.append(row)

    @property
    def passed(self) -> bool:
        """:returns: True if every row is within its tolerances (vacuously true without rows)."""
        return all(row["ok"] for row in self.rows)

    @property
    def columns(self) -> List[str]:
        """:returns: Column names in order of first appearance."""
        names: List[str] = []
        for row in self.rows:
            names += [k for k in row if k not in names]
        return names

    def to_dict(self) -> Dict[str, Any]:
        return {"experiment": self.experiment, "inputs": self.inputs, "rows": self.rows, "pass": self.passed}


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_report(report: Report, output_format: ReportFormat) -> bytes:
    """Serialize a report. Floats are written with `repr`, so the decimal separator is always '.'.

    :returns: UTF-8 bytes, identical for identical reports.
    """
    if output_format == ReportFormat.JSON:
        return (json.dumps(report.to_dict(), indent=2, ensure_ascii=False, allow_nan=False) + "\n").encode("utf-8")

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    columns = report.columns
    if columns:
        writer.writerow(columns)
    for row in report.rows:
        writer.writerow([_csv_cell(row.get(c, "")) for c in columns])
    return buffer.getvalue().encode("utf-8")


def _render_cell(value: Any) -> str:
    if isinstance(value, bool):
        return f"[{TH().PASS}]✔[/]" if value else f"[{TH().FAIL}]✘[/]"
    if isinstance(value, float):
        return f"{value:.6g}"
    if value in ("T", "F", "U"):
        color = {"T": TH().TRUE, "F": TH().FALSE, "U": TH().UNCERTAIN}[value]
        return f"[{color}]{value}[/]"
    return str(value)


def render_report(report: Report) -> Table:
    """Generate a rich console table from a report."""
    status = f"[bold {TH().PASS}]pass[/]" if report.passed else f"[bold {TH().FAIL}]fail[/]"
    seed = report.inputs.get("seed", "")
    table = Table(
        title=f"[bold {TH().ACCENT}]{report.experiment}[/]",
        box=box.MINIMAL,
        caption=f"{len(report.rows)} rows, seed {seed}, {status}",
        caption_justify="right",
    )
    for column in report.columns:
        table.add_column(column, justify="left" if column in ("case", "proposition") else "right", style=TH().TEXT)
    for row in report.rows:
        table.add_row(*(_render_cell(row.get(c, "")) for c in report.columns), style="none" if row["ok"] else "bold")
    return table
