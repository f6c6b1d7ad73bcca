"""Column tables with self-describing metadata, written as CSV or JSON.

CSV files start with '# key=value' comment lines followed by a header row;
numeric cells carry 17 significant digits so every double round-trips. JSON
files hold the same content as {"meta": ..., "columns": ..., "rows": ...}
and re-parse bit-exactly. Cells may be float, int, str or None (serialized
as an empty CSV cell / JSON null).
"""

import json
from dataclasses import dataclass, field


@dataclass
class Table:
    columns: tuple
    rows: list
    meta: dict = field(default_factory=dict)


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        raise TypeError("boolean cells are not part of the format")
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_csv(table: Table, fh) -> None:
    for key, value in table.meta.items():
        fh.write(f"# {key}={value}\n")
    fh.write(",".join(table.columns) + "\n")
    for row in table.rows:
        fh.write(",".join(_format_cell(cell) for cell in row) + "\n")


def write_json(table: Table, fh) -> None:
    payload = {
        "meta": dict(table.meta),
        "columns": list(table.columns),
        "rows": [list(row) for row in table.rows],
    }
    json.dump(payload, fh, indent=1)
    fh.write("\n")


def read_json(fh) -> Table:
    payload = json.load(fh)
    rows = [tuple(row) for row in payload["rows"]]
    return Table(tuple(payload["columns"]), rows, dict(payload["meta"]))
