"""Flat output records and their CSV/JSON encodings."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, fields

FIELDS = ("p", "l", "gamma", "D", "t", "S", "ind_class", "oracle_class", "match")


@dataclass(frozen=True)
class OutputRecord:
    p: int
    l: int
    gamma: int
    D: int
    t: int
    S: int
    ind_class: int | None
    oracle_class: int
    match: bool


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ";".join(str(x) for x in v)
    return str(v)


def write_rows(rows: list[dict], columns, fmt: str, out) -> None:
    """Write flat dicts as CSV (header + rows) or as a JSON array of objects."""
    if fmt == "json":
        json.dump([{c: r[c] for c in columns} for r in rows], out, indent=1)
        out.write("\n")
        return
    out.write(",".join(columns) + "\n")
    for r in rows:
        out.write(",".join(_csv_cell(r[c]) for c in columns) + "\n")


def write_records(records: list[OutputRecord], fmt: str, out) -> None:
    write_rows([asdict(r) for r in records], FIELDS, fmt, out)


def _parse_cell(name: str, text: str):
    if name == "match":
        if text not in ("true", "false"):
            raise ValueError(f"bad boolean {text!r}")
        return text == "true"
    if name == "ind_class" and text == "":
        return None
    return int(text)


def read_records(text: str, fmt: str) -> list[OutputRecord]:
    if fmt == "json":
        return [OutputRecord(**obj) for obj in json.loads(text)]
    reader = csv.reader(text.splitlines())
    header = next(reader)
    if tuple(header) != FIELDS:
        raise ValueError(f"unexpected header {header}")
    names = [f.name for f in fields(OutputRecord)]
    return [OutputRecord(**{n: _parse_cell(n, c) for n, c in zip(names, row)}) for row in reader]
