"""CSV output shared by the experiment drivers.

Every file starts with a header row; the first column is the schema
version.  Columns ending in ``_ns`` hold integer nanoseconds and are the
only ones (with ratios derived from them, named ``*_ns_*``) expected to
differ between runs with the same seed.  A row lacking a column leaves its
cell empty.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence

SCHEMA_VERSION = 1


def timing_column(name: str) -> bool:
    """Wall-time columns and ratios derived from them."""
    return name.endswith("_ns") or "_ns_" in name


def rows_to_csv(rows: Sequence[dict], columns: Sequence[str] | None = None) -> str:
    rows = list(rows)
    if columns is None:
        # ordered union: rows of one file may carry different optional columns
        columns = list(dict.fromkeys(k for r in rows for k in r))
    cols = ["schema_version"] + [c for c in columns if c != "schema_version"]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n", extrasaction="raise")
    w.writeheader()
    for r in rows:
        w.writerow({"schema_version": SCHEMA_VERSION, **r})
    return buf.getvalue()


def write_csv(rows: Sequence[dict], dest, columns: Sequence[str] | None = None) -> None:
    text = rows_to_csv(rows, columns)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def read_csv(source) -> list[dict]:
    text = Path(source).read_text(encoding="utf-8") if not hasattr(source, "read") else source.read()
    return list(csv.DictReader(io.StringIO(text)))


def strip_timing(rows: Iterable[dict]) -> list[dict]:
    """Rows without their timing columns, for determinism comparisons."""
    return [{k: v for k, v in r.items() if not timing_column(k)} for r in rows]
