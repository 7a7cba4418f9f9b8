"""Run records as JSON lines, and dimension-ratio CSV export.

A record is one diagram produced by one generator (greedy, shake,
branches, astar, improve, oracle) together with its dimensions.  Exact
dimensions are stored as decimal strings because they outgrow machine
integers almost immediately; floats are stored with full round-trip
precision.  Above a configurable size threshold the exact dimension is
dropped and only the log-domain value is kept.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .diagram import YoungDiagram
from .dimension import dim_exact, log_dim, normalized_dim
from .errors import (
    KeyMismatch,
    PartitionParseError,
    RecordSchemaError,
)

SOURCES = ("greedy", "shake", "branches", "astar", "improve", "oracle")

DEFAULT_MAX_EXACT_N = 300


def format_partition(diagram: YoungDiagram) -> str:
    """Render row lengths as comma-separated text; empty diagram is ""."""
    return ",".join(str(r) for r in diagram.rows)


def parse_partition(text: str) -> YoungDiagram:
    """Parse "4,2,2" (whitespace tolerated) into a diagram."""
    stripped = text.strip()
    if not stripped:
        return YoungDiagram(())
    parts = []
    for token in stripped.split(","):
        token = token.strip()
        try:
            parts.append(int(token, 10))
        except ValueError:
            raise PartitionParseError(
                f"row length {token!r} is not an integer"
            ) from None
    return YoungDiagram(parts)


@dataclass(frozen=True)
class RunRecord:
    n: int
    rows: str
    log_dim: float
    dim: str | None
    c: float
    source: str


def record_for(
    diagram: YoungDiagram, source: str, max_exact_n: int = DEFAULT_MAX_EXACT_N
) -> RunRecord:
    """Build the record for one diagram.

    The exact dimension is included only up to size max_exact_n; beyond
    that the record carries the log-domain value alone.
    """
    if source not in SOURCES:
        raise ValueError(f"unknown record source {source!r}")
    dim = str(dim_exact(diagram)) if diagram.size <= max_exact_n else None
    return RunRecord(
        n=diagram.size,
        rows=format_partition(diagram),
        log_dim=log_dim(diagram),
        dim=dim,
        c=normalized_dim(diagram),
        source=source,
    )


_KEYS = ("n", "rows", "log_dim", "dim", "c", "source")


def record_to_json(record: RunRecord) -> str:
    return json.dumps(
        {key: getattr(record, key) for key in _KEYS}, ensure_ascii=False
    )


def emit_records(records, path) -> None:
    """Write records to a file, one JSON object per line, UTF-8."""
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(record_to_json(record))
            fh.write("\n")


def _schema_error(line_number, message):
    return RecordSchemaError(f"line {line_number}: {message}", line_number=line_number)


def _parse_record(obj, line_number) -> RunRecord:
    if not isinstance(obj, dict):
        raise _schema_error(line_number, "record is not an object")
    if set(obj) != set(_KEYS):
        raise _schema_error(
            line_number, f"keys {sorted(obj)} do not match {sorted(_KEYS)}"
        )
    if not isinstance(obj["n"], int) or isinstance(obj["n"], bool):
        raise _schema_error(line_number, "field n is not an integer")
    if not isinstance(obj["rows"], str):
        raise _schema_error(line_number, "field rows is not a string")
    for key in ("log_dim", "c"):
        if not isinstance(obj[key], (int, float)) or isinstance(obj[key], bool):
            raise _schema_error(line_number, f"field {key} is not a number")
    if obj["dim"] is not None and not isinstance(obj["dim"], str):
        raise _schema_error(line_number, "field dim is neither null nor a string")
    if obj["source"] not in SOURCES:
        raise _schema_error(line_number, f"unknown source {obj['source']!r}")
    try:
        diagram = parse_partition(obj["rows"])
    except Exception as exc:
        raise _schema_error(line_number, f"rows do not parse: {exc}") from exc
    if diagram.size != obj["n"]:
        raise _schema_error(
            line_number, f"rows sum to {diagram.size}, field n says {obj['n']}"
        )
    log = float(obj["log_dim"])
    if obj["dim"] is not None:
        try:
            value = int(obj["dim"], 10)
        except ValueError:
            raise _schema_error(line_number, "field dim is not a decimal integer")
        if value < 1:
            raise _schema_error(line_number, "field dim is not positive")
        if abs(log - math.log(value)) > 1e-9 * max(1.0, abs(log)):
            raise _schema_error(line_number, "log_dim disagrees with dim")
    return RunRecord(
        n=obj["n"],
        rows=obj["rows"],
        log_dim=log,
        dim=obj["dim"],
        c=float(obj["c"]),
        source=obj["source"],
    )


def load_records(path) -> list[RunRecord]:
    """Read a JSON-lines record file, validating every line."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for line_number, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise _schema_error(line_number, f"invalid JSON: {exc}") from exc
            records.append(_parse_record(obj, line_number))
    return records


def ratios_csv(old_records, new_records, path) -> None:
    """Write per-size dimension ratios new/old as CSV.

    Both inputs must cover exactly the same sizes.  The ratio is exact
    when both records carry exact dimensions, otherwise it falls back to
    the exponential of the log difference.
    """
    old_by_n = {rec.n: rec for rec in old_records}
    new_by_n = {rec.n: rec for rec in new_records}
    if len(old_by_n) != len(old_records) or len(new_by_n) != len(new_records):
        raise KeyMismatch("duplicate sizes within a record set")
    if set(old_by_n) != set(new_by_n):
        only_old = sorted(set(old_by_n) - set(new_by_n))
        only_new = sorted(set(new_by_n) - set(old_by_n))
        raise KeyMismatch(
            f"sizes only in old: {only_old}; sizes only in new: {only_new}"
        )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("n", "ratio", "log_ratio", "improved"))
        for n in sorted(old_by_n):
            old, new = old_by_n[n], new_by_n[n]
            if old.dim is not None and new.dim is not None:
                exact = Fraction(int(new.dim, 10), int(old.dim, 10))
                ratio = float(exact)
                log_ratio = (
                    0.0 if exact == 1 else math.log(exact.numerator) - math.log(exact.denominator)
                )
                improved = exact > 1
            else:
                log_ratio = new.log_dim - old.log_dim
                ratio = math.exp(log_ratio)
                improved = log_ratio > 0
            writer.writerow((n, repr(ratio), repr(log_ratio), "true" if improved else "false"))
