"""Load the published tables of N_d and the genera.

This is the only place that reads data/reference_tables.json. The verify
suite and the tests compare computed values against these rows.

The file is read once per process and cached in _CACHE; every row is
normalised into a ReferenceRow so callers never handle raw dicts.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

log = logging.getLogger(__name__)

# ── dataset path ──────────────────────────────────────────────────────────────
# severi_genus/ → repo root → data/
_ROOT = Path(__file__).resolve().parents[1]
REFERENCE_TABLES_PATH = _ROOT / "data" / "reference_tables.json"

# ── module-level cache (loaded once per process) ──────────────────────────────
_CACHE: dict[int, ReferenceRow] | None = None


@dataclass(frozen=True, slots=True)
class ReferenceRow:
    """One published row. M is None where the table prints "*" (d < 3)."""
    d:       int
    N:       int
    g:       int
    g_hat:   int
    g_tilde: int
    M:       int | None = None


REQUIRED_KEYS = ("d", "N", "g", "g_hat", "g_tilde")


def _normalize(row: dict[str, Any]) -> ReferenceRow:
    """Convert one raw JSON dict into a ReferenceRow.

    Raises ValueError when a required column is missing, "*" or not an
    integer. Only M may be absent (the table prints "*" for d < 3).
    """
    def as_int(key: str) -> int | None:
        value = row.get(key)
        if value is None or value == "*":
            return None
        # Accept decimal strings too; json already gives exact ints otherwise.
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ValueError(f"reference row {row!r}: {key}={value!r} is not an integer") from None

    required = {}
    for key in REQUIRED_KEYS:
        value = as_int(key)
        if value is None:
            raise ValueError(f"reference row {row!r} is missing required column {key!r}")
        required[key] = value
    return ReferenceRow(**required, M=as_int("M"))


def load_reference(path: Path | None = None) -> dict[int, ReferenceRow]:
    """Return {d: ReferenceRow}. The default file is cached after the first call.

    Raises FileNotFoundError if the JSON file is missing and ValueError if a
    row lacks one of REQUIRED_KEYS.
    """
    global _CACHE
    if path is None and _CACHE is not None:
        return _CACHE
    source = path or REFERENCE_TABLES_PATH
    if not source.exists():
        raise FileNotFoundError(f"Reference tables not found at {source}")
    with source.open("r", encoding="utf-8") as f:
        raw = json.load(f)
    rows = {r.d: r for r in (_normalize(row) for row in raw.get("rows", []) if isinstance(row, dict))}
    log.debug("loaded %d reference rows from %s", len(rows), source.name)
    if path is None:
        _CACHE = rows
    return rows


def reference_degrees() -> list[int]:
    return sorted(load_reference())
