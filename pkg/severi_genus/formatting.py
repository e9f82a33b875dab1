"""Render an OutputDocument as text, JSON or CSV.

Every cell is already a string when it gets here (see cli.py), so pandas
only lays the table out; it never sees a number it could turn into a float.
"""

from __future__ import annotations

import json

import pandas as pd

from .models import OutputDocument

FORMATS = ("text", "json", "csv")


def _verdict_records(document: OutputDocument) -> list[dict[str, str]]:
    # "true"/"false" so the CSV cells match the JSON booleans.
    return [
        {"name": v.name, "passed": "true" if v.passed else "false", "detail": v.detail}
        for v in document.verdicts
    ]


def _frame(document: OutputDocument) -> pd.DataFrame:
    """One CSV table. A document with verdicts gets a leading ``kind`` column
    ("row" or "verdict") so the ratio rows and the checks share a header."""
    if not document.verdicts:
        return pd.DataFrame(document.rows, dtype="string").fillna("*")

    frames = []
    if document.rows:
        rows = pd.DataFrame(document.rows, dtype="string")
        rows.insert(0, "kind", "row")
        frames.append(rows)
    verdicts = pd.DataFrame(_verdict_records(document), dtype="string")
    verdicts.insert(0, "kind", "verdict")
    frames.append(verdicts)
    # Cells a record does not have (d on a verdict, name on a row) print as "*".
    return pd.concat(frames, ignore_index=True).astype("string").fillna("*")


def to_json(document: OutputDocument) -> str:
    return json.dumps(document.to_dict(), indent=2, ensure_ascii=False) + "\n"


def to_csv(document: OutputDocument) -> str:
    """Rows and verdicts as one CSV table."""
    frame = _frame(document)
    if frame.empty:
        return ""
    return frame.to_csv(index=False, lineterminator="\n")


def to_text(document: OutputDocument) -> str:
    params = ", ".join(f"{k}={v}" for k, v in document.parameters.items())
    lines = [f"{document.command} ({params})" if params else document.command, ""]

    if document.rows:
        frame = pd.DataFrame(document.rows, dtype="string").fillna("*")
        lines.append(frame.to_string(index=False))
        lines.append("")

    if document.warnings:
        lines.append("warnings:")
        lines.extend(f"  - {w}" for w in document.warnings)
        lines.append("")

    if document.verdicts:
        lines.append("verdicts:")
        for v in document.verdicts:
            lines.append(f"  [{'PASS' if v.passed else 'FAIL'}] {v.name}: {v.detail}")
        passed = sum(v.passed for v in document.verdicts)
        lines.append(f"  {passed}/{len(document.verdicts)} passed")
        lines.append("")

    return "\n".join(lines)


def render(document: OutputDocument, fmt: str) -> str:
    if fmt == "json":
        return to_json(document)
    if fmt == "csv":
        return to_csv(document)
    if fmt == "text":
        return to_text(document)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
