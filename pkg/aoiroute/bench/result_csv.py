"""CSV output of experiment rows, the interface for plotting."""
import csv
from pathlib import Path
from typing import Iterable, TextIO

from aoiroute.bench.ResultRow import CSV_HEADER, ResultRow


def write_rows(rows: Iterable[ResultRow], out: TextIO) -> int:
    """Writes header and rows, returning the number of written rows.

    Floats are written in their shortest round-tripping form, so equal runs
    produce equal bytes apart from the elapsed_ms column.
    """
    writer = csv.DictWriter(out, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    count: int = 0
    for row in rows:
        writer.writerow({
            key: repr(value) if isinstance(value, float) else value
            for key, value in row.dict().items()
        })
        count += 1
    return count


def read_rows(inp: TextIO) -> list[ResultRow]:
    reader = csv.DictReader(inp)
    if reader.fieldnames != CSV_HEADER:
        raise ValueError(
            f"unexpected CSV header {reader.fieldnames}, expected"
            f" {CSV_HEADER}"
        )
    return [ResultRow.parse_obj(record) for record in reader]


def save_rows(rows: Iterable[ResultRow], p: Path) -> int:
    with p.open("w", encoding="utf-8", newline="") as f:
        return write_rows(rows, f)


def load_rows(p: Path) -> list[ResultRow]:
    with p.open("r", encoding="utf-8", newline="") as f:
        return read_rows(f)
