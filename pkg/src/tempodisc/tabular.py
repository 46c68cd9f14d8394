"""CSV and JSON table I/O shared by the command line and the experiment tables.

CSV is UTF-8, comma separated, with a mandatory header and floats written to
10 significant digits. JSON is one object ``{"meta": {...}, "rows": [...]}``
with floats at full precision.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, is_dataclass
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional, TextIO

import numpy as np

from . import __version__
from .calibrate import ObservationSet
from .errors import DataError

FLOAT_FORMAT = "{:.10g}"


def _plain(value: Any) -> Any:
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def format_value(value: Any) -> str:
    value = _plain(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return FLOAT_FORMAT.format(value)
    return str(value)


def as_rows(records: Iterable[Any]) -> list[dict]:
    """Convert dataclasses or mappings into plain row dictionaries."""
    rows = []
    for rec in records:
        rows.append(dict(asdict(rec) if is_dataclass(rec) else rec))
    return rows


def to_csv(rows: list[dict], columns: Optional[list[str]] = None) -> str:
    if columns is None:
        columns = list(rows[0]) if rows else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(c)) for c in columns])
    return buf.getvalue()


def to_json(rows: list[dict], meta: Optional[dict] = None) -> str:
    meta = {"version": __version__, **(meta or {})}
    doc = {"meta": _plain(meta), "rows": [_plain(r) for r in rows]}
    return json.dumps(doc, indent=2, allow_nan=True) + "\n"


def write_table(
    rows: list[dict],
    fmt: str = "csv",
    meta: Optional[dict] = None,
    stream: Optional[TextIO] = None,
    columns: Optional[list[str]] = None,
) -> str:
    """Render rows as CSV or JSON, writing to `stream` when given."""
    if fmt == "csv":
        text = to_csv(rows, columns)
    elif fmt == "json":
        if columns is not None:
            rows = [{c: r.get(c) for c in columns} for r in rows]
        text = to_json(rows, meta)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if stream is not None:
        stream.write(text)
    return text


def _parse_cell(text: str) -> Any:
    try:
        return float(text)
    except ValueError:
        return text


def read_csv(source: str | Path | TextIO) -> list[dict]:
    """Read a headed CSV table, converting numeric cells to float."""
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as fh:
            return read_csv(fh)
    reader = csv.DictReader(source)
    if reader.fieldnames is None:
        raise DataError("CSV input has no header row")
    return [{k.strip(): _parse_cell(v.strip()) for k, v in row.items()} for row in reader]


def read_json(source: str | Path | TextIO) -> dict:
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    return json.load(source)


def read_observations(
    source: str | Path | TextIO, wealth: Optional[float] = None, m0: float = 0.0
) -> ObservationSet:
    """Load fit data with header ``n,value`` and an optional ``kind`` column.

    Rows of kind ``amount`` are converted to factors with
    ``(wealth + m0) / (wealth + amount)``.
    """
    rows = read_csv(source)
    try:
        n = np.array([float(r["n"]) for r in rows])
        value = np.array([float(r["value"]) for r in rows])
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError(f"fit data needs numeric 'n' and 'value' columns: {exc}") from None
    kinds = [str(r.get("kind") or "factor") for r in rows]
    bad = set(kinds) - {"factor", "amount"}
    if bad:
        raise DataError(f"unknown kind values {sorted(bad)}")
    amount_rows = np.array([k == "amount" for k in kinds], dtype=bool)
    if amount_rows.any():
        if wealth is None or not wealth > 0:
            raise DataError("amount rows require --wealth")
        if np.any(value[amount_rows] < m0):
            raise DataError("indifference amounts must be >= m0")
        value = value.copy()
        value[amount_rows] = (wealth + m0) / (wealth + value[amount_rows])
    return ObservationSet(n, value, w0=wealth, m0=m0)
