"""Deterministic artifact writers.

JSON uses sorted keys and shortest round-trip floats; CSV uses minimal
RFC 4180 quoting and 17 significant digits. Non-finite floats are written
as ``inf``, ``-inf`` and ``nan`` everywhere.
"""

import csv
import io
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO

from monomial_lab._constants import SCHEMA
from monomial_lab._util import canonical_dumps, canonicalize, format_float, obj_canonicalized_hash


def envelope(command: str, result: Any, config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Top-level artifact with schema tag, command, configuration and the
    SHA-256 digest of the canonical result."""
    return {
        "schema": SCHEMA,
        "command": command,
        "config": config or {},
        "result": result,
        "digest": obj_canonicalized_hash(result),
    }


def _cell(value: Any) -> str:
    value = canonicalize(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, (list, dict)):
        return canonical_dumps(value)
    return str(value)


def to_json(document: Any, indent: Optional[int] = None) -> str:
    return canonical_dumps(document, indent=indent) + "\n"


def to_jsonl(rows: Iterable[Any]) -> str:
    return "".join(canonical_dumps(row) + "\n" for row in rows)


def to_csv(rows: Sequence[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    """Rows as CSV with a header; columns default to first-seen key order."""
    if columns is None:
        columns = []
        for row in rows:
            columns.extend(key for key in row if key not in columns)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    return buffer.getvalue()


def write_text(text: str, out: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """Write to ``out`` (a path) or to ``stream`` (stdout by default)."""
    if out is not None and out != "-":
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        return
    (stream or sys.stdout).write(text)
