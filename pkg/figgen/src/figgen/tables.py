"""Readers for the table files emitted by the crwmirror command line tool.

Both on-disk formats carry the same payload: a metadata mapping, an ordered
column list, and data rows.  CSV files open with ``# key=value`` comment
lines and keep empty cells for unavailable values; JSON files hold the
payload under ``{"meta", "columns", "rows"}``.  Metadata values stay exactly
as written (strings); numeric row cells parse to float, empty/null cells to
None, anything else stays a string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class TableFormatError(ValueError):
    """Raised when an input file does not hold a well-formed table."""


@dataclass
class Table:
    path: str
    meta: dict
    columns: list
    rows: list

    def column(self, name: str) -> list:
        try:
            j = self.columns.index(name)
        except ValueError:
            have = ", ".join(self.columns)
            raise TableFormatError(
                f"{self.path}: missing column {name!r} (file has: {have})"
            ) from None
        return [row[j] for row in self.rows]

    def meta_float(self, key: str) -> float:
        if key not in self.meta:
            raise TableFormatError(f"{self.path}: missing metadata key {key!r}")
        try:
            return float(self.meta[key])
        except (TypeError, ValueError):
            raise TableFormatError(
                f"{self.path}: metadata {key}={self.meta[key]!r} is not numeric"
            ) from None


def _cell(text: str):
    if text == "":
        return None
    try:
        return float(text)
    except ValueError:
        return text


def _read_csv(path: str, lines) -> Table:
    meta = {}
    columns = None
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition("=")
            if not sep:
                raise TableFormatError(f"{path}:{lineno}: metadata line without '='")
            meta[key.strip()] = value
            continue
        if columns is None:
            columns = line.split(",")
            continue
        cells = [_cell(c) for c in line.split(",")]
        if len(cells) != len(columns):
            raise TableFormatError(
                f"{path}:{lineno}: row has {len(cells)} cells, header has {len(columns)}"
            )
        rows.append(cells)
    if columns is None:
        raise TableFormatError(f"{path}: no header row")
    return Table(path, meta, columns, rows)


def _read_json(path: str, fh) -> Table:
    try:
        payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(payload, dict) or not {"meta", "columns", "rows"} <= payload.keys():
        raise TableFormatError(f'{path}: JSON table needs the keys "meta", "columns", "rows"')
    columns = [str(c) for c in payload["columns"]]
    rows = []
    for i, row in enumerate(payload["rows"]):
        if len(row) != len(columns):
            raise TableFormatError(
                f"{path}: rows[{i}] has {len(row)} cells, header has {len(columns)}"
            )
        rows.append([float(c) if isinstance(c, (int, float)) else c for c in row])
    return Table(path, {str(k): str(v) for k, v in payload["meta"].items()}, columns, rows)


def read_table(path) -> Table:
    """Parse one table file; the .json suffix selects JSON, anything else CSV."""
    path = str(path)
    try:
        with open(path, newline="") as fh:
            if path.endswith(".json"):
                return _read_json(path, fh)
            return _read_csv(path, fh)
    except OSError as exc:
        raise TableFormatError(f"cannot read {path}: {exc}") from None
