"""Experiment records and their delimited report formats.

Every verification suite and scan emits a list of ExperimentRecord rows.
Reports are reproducible: the same inputs produce byte-identical CSV and
JSONL files (record order, tie-breaking and witness order are all
deterministic upstream).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

CSV_COLUMNS = ("suite", "n", "k", "observed", "expected", "pass", "witnesses", "millis")


@dataclass(frozen=True)
class ExperimentRecord:
    """One row of a verification or scan run."""

    suite: str
    n: int | None
    k: int | None
    observed: object
    expected: object
    passed: bool
    witnesses: tuple[str, ...] = ()
    millis: float = 0.0
    family: str | None = None
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "k": self.k,
            "family": self.family,
            "observed": self.observed,
            "expected": self.expected,
            "pass": self.passed,
            "witnesses": list(self.witnesses),
            "millis": round(self.millis, 3),
            "note": self.note,
        }

    def csv_row(self) -> list:
        return [
            self.suite,
            "" if self.n is None else self.n,
            "" if self.k is None else self.k,
            self.observed,
            self.expected,
            "pass" if self.passed else "FAIL",
            ";".join(self.witnesses),
            f"{self.millis:.3f}",
        ]


def all_passed(records: Iterable[ExperimentRecord]) -> bool:
    return all(r.passed for r in records)


def records_to_csv(records: Sequence[ExperimentRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def write_csv(records: Sequence[ExperimentRecord], path: str | Path) -> Path:
    path = Path(path)
    path.write_text(records_to_csv(records))
    return path


def records_to_jsonl(records: Sequence[ExperimentRecord]) -> str:
    return "".join(json.dumps(r.as_dict()) + "\n" for r in records)


def write_jsonl(records: Sequence[ExperimentRecord], path: str | Path) -> Path:
    path = Path(path)
    path.write_text(records_to_jsonl(records))
    return path


def records_table(records: Sequence[ExperimentRecord]) -> str:
    """Fixed-width text table for terminal output."""
    rows = [[str(c) for c in r.csv_row()] for r in records]
    header = list(CSV_COLUMNS)
    widths = [
        max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    out = []
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    return "\n".join(out)
