#!/usr/bin/env python3
"""
Record Formatting
Renders classification records as a terminal table, JSON or CSV.
JSON and CSV output is byte-stable for identical inputs.
"""

import csv
import io
from typing import Any, Dict, Iterable, List, Optional

import orjson
from rich import box
from rich.console import Console
from rich.table import Table

try:
    from config import DEFAULT_CONFIG, OutputFormat
    from core.orbits import RECORD_FIELDS, ClassificationRecord, ClassificationSummary
except ImportError:
    from ..config import DEFAULT_CONFIG, OutputFormat
    from ..core.orbits import RECORD_FIELDS, ClassificationRecord, ClassificationSummary

TABLE_WIDTH = 320
ELLIPSIS = "…"


def dumps_json(payload: Any) -> str:
    return orjson.dumps(payload, option=orjson.OPT_INDENT_2).decode("utf-8") + "\n"


def render_console(renderable) -> str:
    """Render a rich object to plain text at a fixed width."""
    buffer = io.StringIO()
    console = Console(file=buffer, width=TABLE_WIDTH, color_system=None, highlight=False, soft_wrap=False)
    console.print(renderable)
    return buffer.getvalue()


def truncate_poincare(coefficients: Iterable[int], limit: int) -> str:
    coefficients = list(coefficients)
    shown = ", ".join(str(c) for c in coefficients[:limit])
    if len(coefficients) > limit:
        shown += f", {ELLIPSIS}"
    return f"[{shown}]"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ",".join(str(v) for v in value) + "]"
    return str(value)


def render_table(
    records: List[ClassificationRecord],
    summary: Optional[ClassificationSummary] = None,
    title: Optional[str] = None,
    truncate: int = DEFAULT_CONFIG["poincare_truncate"],
) -> str:
    table = Table(title=title, box=box.SIMPLE, show_edge=False)
    for name in RECORD_FIELDS:
        table.add_column(name, no_wrap=True)

    for record in records:
        row = record.to_dict()
        cells = []
        for name in RECORD_FIELDS:
            if name == "poincare":
                cells.append(truncate_poincare(row[name], truncate))
            else:
                cells.append(_cell(row[name]))
        table.add_row(*cells)

    text = render_console(table)
    if summary is not None:
        text += summary.line + "\n"
    return text


def render_json(
    records: List[ClassificationRecord],
    summary: Optional[ClassificationSummary] = None,
    system_label: Optional[str] = None,
) -> str:
    payload: Dict[str, Any] = {}
    if system_label is not None:
        payload["system"] = system_label
    payload["records"] = [record.to_dict() for record in records]
    if summary is not None:
        payload["summary"] = {
            "orbits": summary.total,
            "parabolic": summary.parabolic,
            "smooth": summary.smooth,
            "rational_only": summary.rational_only,
            "line": summary.line,
        }
    return dumps_json(payload)


def render_csv(records: List[ClassificationRecord]) -> str:
    """One header row in RECORD_FIELDS order, then one row per record."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(RECORD_FIELDS)
    for record in records:
        row = record.to_dict()
        writer.writerow([_cell(row[name]) for name in RECORD_FIELDS])
    return buffer.getvalue()


def render_records(
    records: List[ClassificationRecord],
    fmt: OutputFormat,
    summary: Optional[ClassificationSummary] = None,
    system_label: Optional[str] = None,
    truncate: int = DEFAULT_CONFIG["poincare_truncate"],
) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return render_json(records, summary, system_label)
    if fmt is OutputFormat.CSV:
        return render_csv(records)
    return render_table(records, summary, title=system_label, truncate=truncate)


__all__ = [
    "dumps_json",
    "render_console",
    "truncate_poincare",
    "render_table",
    "render_json",
    "render_csv",
    "render_records",
]
