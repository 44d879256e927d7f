"""CSV and JSON file formats shared by the library and the CLI.

Formats (headers are exact):

* per-case results:   ``task_id,method_id,case_id,dsc``
* training pairs:     ``dsc_mean_pct,sd_pct``
* comparison corpus:  ``paper_id,method_id,mean_dsc,test_n,sd`` (sd may be empty)
* calibration input:  ``task_id,method_id,n,mean_dsc,observed_sd``

All numeric fields use a dot decimal separator; floats are written with
6 decimal places.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

from .corpus import MethodResult, PaperRecord
from .glm import TrainingPair
from .simulate import CaseResult

__all__ = [
    "DataFormatError",
    "PER_CASE_HEADER",
    "PAIRS_HEADER",
    "CORPUS_HEADER",
    "CALIBRATION_HEADER",
    "read_per_case_csv",
    "write_per_case_csv",
    "read_pairs_csv",
    "read_corpus_csv",
    "read_calibration_csv",
    "detect_training_format",
]

PER_CASE_HEADER = ["task_id", "method_id", "case_id", "dsc"]
PAIRS_HEADER = ["dsc_mean_pct", "sd_pct"]
CORPUS_HEADER = ["paper_id", "method_id", "mean_dsc", "test_n", "sd"]
CALIBRATION_HEADER = ["task_id", "method_id", "n", "mean_dsc", "observed_sd"]


class DataFormatError(Exception):
    """Malformed input file; carries the 1-based line number when known."""

    def __init__(self, message: str, path: "str | Path | None" = None, line: int | None = None):
        self.path = str(path) if path is not None else None
        self.line = line
        where = ""
        if self.path is not None:
            where = f"{self.path}: "
        if line is not None:
            where += f"line {line}: "
        super().__init__(where + message)


def _read_rows(path: "str | Path", expected_header: list[str]) -> list[tuple[int, list[str]]]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataFormatError("file is empty, expected a header row", path, 1) from None
        if [h.strip() for h in header] != expected_header:
            raise DataFormatError(
                f"unexpected header {header!r}, expected {expected_header!r}", path, 1
            )
        rows = []
        for line_no, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(expected_header):
                raise DataFormatError(
                    f"expected {len(expected_header)} fields, found {len(row)}", path, line_no
                )
            rows.append((line_no, row))
    return rows


def _parse_float(cell: str, name: str, path, line_no: int) -> float:
    try:
        return float(cell)
    except ValueError:
        raise DataFormatError(f"field {name!r} is not a number: {cell!r}", path, line_no) from None


def _parse_int(cell: str, name: str, path, line_no: int) -> int:
    try:
        return int(cell)
    except ValueError:
        raise DataFormatError(f"field {name!r} is not an integer: {cell!r}", path, line_no) from None


def detect_training_format(path: "str | Path") -> str:
    """Classify a training CSV as ``per_case`` or ``pairs`` by its header."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        try:
            header = next(csv.reader(fh))
        except StopIteration:
            raise DataFormatError("file is empty, expected a header row", path, 1) from None
    stripped = [h.strip() for h in header]
    if stripped == PER_CASE_HEADER:
        return "per_case"
    if stripped == PAIRS_HEADER:
        return "pairs"
    raise DataFormatError(
        f"unrecognized header {header!r}; expected {PER_CASE_HEADER!r} or {PAIRS_HEADER!r}",
        path,
        1,
    )


def read_per_case_csv(path: "str | Path") -> list[CaseResult]:
    rows = _read_rows(path, PER_CASE_HEADER)
    if not rows:
        raise DataFormatError("no data rows", path)
    out = []
    for line_no, (task_id, method_id, case_id, dsc) in rows:
        value = _parse_float(dsc, "dsc", path, line_no)
        if not 0.0 <= value <= 1.0:
            raise DataFormatError(f"dsc must lie in [0, 1], got {value}", path, line_no)
        out.append(CaseResult(task_id.strip(), method_id.strip(), case_id.strip(), value))
    return out


def write_per_case_csv(rows: Sequence[CaseResult], path: "str | Path") -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(PER_CASE_HEADER)
        for row in rows:
            writer.writerow([row.task_id, row.method_id, row.case_id, f"{row.dsc:.6f}"])


def read_pairs_csv(path: "str | Path") -> list[TrainingPair]:
    rows = _read_rows(path, PAIRS_HEADER)
    if not rows:
        raise DataFormatError("no data rows", path)
    out = []
    for line_no, (mean_cell, sd_cell) in rows:
        mean = _parse_float(mean_cell, "dsc_mean_pct", path, line_no)
        sd = _parse_float(sd_cell, "sd_pct", path, line_no)
        out.append(TrainingPair(dsc_mean_pct=mean, sd_pct=sd))
    return out


def read_corpus_csv(path: "str | Path") -> list[PaperRecord]:
    """Parse a comparison corpus, grouping rows by paper_id.

    Papers keep their order of first appearance; each paper's rows must
    agree on test_n.
    """
    rows = _read_rows(path, CORPUS_HEADER)
    if not rows:
        raise DataFormatError("no data rows", path)
    methods: dict[str, list[MethodResult]] = {}
    test_ns: dict[str, tuple[int, int]] = {}
    for line_no, (paper_id, method_id, mean_cell, n_cell, sd_cell) in rows:
        paper_id = paper_id.strip()
        mean = _parse_float(mean_cell, "mean_dsc", path, line_no)
        n = _parse_int(n_cell, "test_n", path, line_no)
        sd = _parse_float(sd_cell, "sd", path, line_no) if sd_cell.strip() else None
        try:
            method = MethodResult(method_id.strip(), mean, sd)
        except ValueError as exc:
            raise DataFormatError(str(exc), path, line_no) from None
        if paper_id in test_ns and test_ns[paper_id][0] != n:
            raise DataFormatError(
                f"paper {paper_id!r} has conflicting test_n values "
                f"({test_ns[paper_id][0]} on line {test_ns[paper_id][1]}, {n} here)",
                path,
                line_no,
            )
        test_ns.setdefault(paper_id, (n, line_no))
        methods.setdefault(paper_id, []).append(method)

    papers = []
    for paper_id, method_list in methods.items():
        try:
            papers.append(
                PaperRecord(paper_id, test_ns[paper_id][0], tuple(method_list))
            )
        except ValueError as exc:
            raise DataFormatError(str(exc), path, test_ns[paper_id][1]) from None
    return papers


def read_calibration_csv(path: "str | Path") -> list[tuple[str, str, int, float, float]]:
    rows = _read_rows(path, CALIBRATION_HEADER)
    if not rows:
        raise DataFormatError("no data rows", path)
    out = []
    for line_no, (task_id, method_id, n_cell, mean_cell, sd_cell) in rows:
        n = _parse_int(n_cell, "n", path, line_no)
        mean = _parse_float(mean_cell, "mean_dsc", path, line_no)
        sd = _parse_float(sd_cell, "observed_sd", path, line_no)
        if n < 2:
            raise DataFormatError(f"n must be >= 2, got {n}", path, line_no)
        if not 0.0 <= mean <= 1.0:
            raise DataFormatError(f"mean_dsc must lie in [0, 1], got {mean}", path, line_no)
        if sd < 0.0:
            raise DataFormatError(f"observed_sd must be >= 0, got {sd}", path, line_no)
        out.append((task_id.strip(), method_id.strip(), n, mean, sd))
    return out
