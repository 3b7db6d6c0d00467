"""CSV helpers shared by all writers.

Dialect: comma separated, ``.`` decimal point, floats in scientific notation
with 17 significant digits, one header row, LF line endings.
"""
from __future__ import annotations

import csv
import os
from numbers import Integral


def format_value(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (bool,)):
        return str(int(v))
    if isinstance(v, Integral):
        return str(int(v))
    return f"{float(v):.16e}"


def write_csv(path, header, rows) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])


def read_csv(path) -> tuple[list[str], list[list[str]]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        return header, [row for row in reader]
