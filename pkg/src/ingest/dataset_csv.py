#!/usr/bin/env python3
"""
Measurement Dataset CSV Codec

Format (UTF-8, dot decimals, LF emitted, LF or CRLF accepted):

    project,fp,cilf,cilfeif,ceieoeq
    1,203.0,8,8,32
"""

import csv
import io
import logging
import re
from pathlib import Path
from typing import List, Optional, Union

from models.diagnostics import ParseError
from models.errors import ParseFailure, ValidationError
from models.measurement import Dataset, MeasurementRecord


logger = logging.getLogger(__name__)

HEADER = ("project", "fp", "cilf", "cilfeif", "ceieoeq")

_INTEGER = re.compile(r'[+-]?[0-9]+')
_DECIMAL = re.compile(r'[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)')


def _cell_columns(cells: List[str]) -> List[int]:
    """1-based text column where each cell starts (exact for unquoted rows)"""
    columns, position = [], 1
    for cell in cells:
        columns.append(position)
        position += len(cell) + 1
    return columns


def _parse_int(text: str) -> Optional[int]:
    return int(text) if _INTEGER.fullmatch(text) else None


def _parse_float(text: str) -> Optional[float]:
    # plain dot decimals only: no exponent, digit separators, nan or inf
    return float(text) if _DECIMAL.fullmatch(text) else None


def _split_lines(source: str) -> List[str]:
    """Physical lines on LF only, each stripped of one trailing CR"""
    lines = source.split("\n")
    if lines[-1] == "":
        lines.pop()
    return [line[:-1] if line.endswith("\r") else line for line in lines]


def load_csv(source: str) -> Dataset:
    """
    Parse dataset CSV text

    Every data line is checked; all defects are collected before failing.

    Args:
        source: CSV text with the header project,fp,cilf,cilfeif,ceieoeq

    Returns:
        Dataset in file order

    Raises:
        ParseFailure: with positioned errors (bad header, wrong cell count,
            non-numeric cell, invariant violations such as cilfeif < cilf)
    """
    if source.startswith("\ufeff"):
        source = source[1:]

    errors: List[ParseError] = []
    records: List[MeasurementRecord] = []
    lines = _split_lines(source)

    if not lines or tuple(cell.strip() for cell in lines[0].split(",")) != HEADER:
        found = lines[0] if lines else ""
        errors.append(ParseError(1, 1, f"bad header: expected '{','.join(HEADER)}'", found))
        raise ParseFailure(errors)

    for line_no, raw_line in enumerate(lines[1:], start=2):
        try:
            cells = next(csv.reader([raw_line]), [])
        except csv.Error as e:
            errors.append(ParseError(line_no, 1, f"malformed CSV line: {e}", raw_line))
            continue
        if not cells or all(not cell.strip() for cell in cells):
            continue
        if len(cells) != len(HEADER):
            errors.append(ParseError(line_no, 1, f"expected {len(HEADER)} cells, found {len(cells)}", raw_line))
            continue

        columns = _cell_columns(cells)
        values = [cell.strip() for cell in cells]
        row_ok = True

        project_id = _parse_int(values[0])
        fp = _parse_float(values[1])
        counters = [_parse_int(value) for value in values[2:]]

        if project_id is None:
            errors.append(ParseError(line_no, columns[0], "project must be an integer", values[0]))
            row_ok = False
        if fp is None:
            errors.append(ParseError(line_no, columns[1], "fp must be a number with a dot decimal separator",
                                     values[1]))
            row_ok = False
        for offset, counter in enumerate(counters, start=2):
            if counter is None:
                errors.append(ParseError(line_no, columns[offset], f"{HEADER[offset]} must be an integer",
                                         values[offset]))
                row_ok = False
        if not row_ok:
            continue

        try:
            records.append(MeasurementRecord(project_id, fp, *counters))
        except ValidationError as e:
            index = HEADER.index(e.field) if e.field in HEADER else 0
            errors.append(ParseError(line_no, columns[index], str(e), values[index]))

    if errors:
        logger.debug(f"Dataset CSV rejected with {len(errors)} error(s)")
        raise ParseFailure(errors)

    logger.debug(f"Loaded {len(records)} measurement records")
    return Dataset(tuple(records))


def save_csv(ds: Dataset) -> str:
    """
    Canonical CSV for a dataset

    FP is written with one decimal place; counters as plain integers.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)
    for record in ds:
        writer.writerow([record.project_id, f"{record.fp:.1f}", record.cilf, record.cilfeif, record.ceieoeq])
    return buffer.getvalue()


def load_csv_file(path: Union[str, Path]) -> Dataset:
    """
    Read and parse a dataset CSV file

    Raises:
        ParseFailure: invalid UTF-8 or CSV content (source_name set to path)
        OSError: if the file cannot be read
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise ParseFailure([ParseError(1, 1, "file is not valid UTF-8")], source_name=str(path)) from None
    try:
        return load_csv(text)
    except ParseFailure as failure:
        failure.source_name = str(path)
        raise
