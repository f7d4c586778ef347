"""Deterministic emission of result tables as CSV or JSON lines.

Column order is frozen to the key order of the first record.  Floats
are written in scientific notation with 10 significant digits, enough
to round-trip within 1e-9 relative; integers, booleans, and strings are
written verbatim.  Identical records always produce byte-identical
files.
"""

from __future__ import annotations

import csv
import json
import math


def _format_value(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value) or math.isnan(value):
            return repr(value)
        return f"{value:.9e}"
    return str(value)


def emit_results(records: list[dict], path: str, fmt: str = "csv") -> None:
    """Write ``records`` to ``path``; an empty list yields a header-only
    CSV (or an empty JSON-lines file)."""
    if fmt == "csv":
        _emit_csv(records, path)
    elif fmt == "jsonl":
        _emit_jsonl(records, path)
    else:
        raise ValueError(f"unknown format {fmt!r}; expected csv or jsonl")


def _emit_csv(records: list[dict], path: str) -> None:
    columns = list(records[0].keys()) if records else []
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(columns)
        for rec in records:
            if list(rec.keys()) != columns:
                raise ValueError("records do not share a common column order")
            writer.writerow([_format_value(rec[c]) for c in columns])


def _emit_jsonl(records: list[dict], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            clean = {k: (None if isinstance(v, float) and not math.isfinite(v) else v)
                     for k, v in rec.items()}
            fh.write(json.dumps(clean) + "\n")


def parse_csv(path: str) -> list[dict]:
    """Read back an emitted CSV with best-effort type recovery."""
    with open(path, "r", newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        rows = []
        for raw in reader:
            row = {}
            for key, text in raw.items():
                if text == "":
                    row[key] = None
                elif text in ("true", "false"):
                    row[key] = text == "true"
                else:
                    try:
                        as_float = float(text)
                        row[key] = int(text) if text.isdigit() or (
                            text.startswith("-") and text[1:].isdigit()) else as_float
                    except ValueError:
                        row[key] = text
            rows.append(row)
        return rows
