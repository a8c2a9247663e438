"""Dataset row schema shared by the region mapper, theorem witnesses, and CLI.

One SampleRecord is one row. CSV columns appear in exactly this order:

    w_re, w_im, sigma1_re, sigma1_im, sigma2_re, sigma2_im,
    path, classification, reachable, bounds_ok

JSONL uses the same field names, one object per line. Floats are rendered
with 17 significant digits so parsing reproduces them exactly; rows whose
ratios were skipped leave the sigma cells empty (null in JSONL).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

__all__ = ["SampleRecord", "CSV_COLUMNS", "csv_row", "jsonl_line", "fmt_float"]

CSV_COLUMNS = (
    "w_re",
    "w_im",
    "sigma1_re",
    "sigma1_im",
    "sigma2_re",
    "sigma2_im",
    "path",
    "classification",
    "reachable",
    "bounds_ok",
)


@dataclass(frozen=True)
class SampleRecord:
    w: complex
    sigma1: Optional[complex]
    sigma2: Optional[complex]
    path: str
    classification: str
    reachable: bool
    bounds_ok: Optional[bool]


def fmt_float(x: float) -> str:
    x = float(x)
    if x != x:
        return "NaN"
    if x == float("inf"):
        return "Infinity"
    if x == float("-inf"):
        return "-Infinity"
    return format(x, ".17g")


def _bool(x: Optional[bool]) -> str:
    if x is None:
        return ""
    return "true" if x else "false"


def csv_row(rec: SampleRecord) -> list[str]:
    s1 = rec.sigma1
    s2 = rec.sigma2
    return [
        fmt_float(rec.w.real),
        fmt_float(rec.w.imag),
        fmt_float(s1.real) if s1 is not None else "",
        fmt_float(s1.imag) if s1 is not None else "",
        fmt_float(s2.real) if s2 is not None else "",
        fmt_float(s2.imag) if s2 is not None else "",
        rec.path,
        rec.classification,
        _bool(rec.reachable),
        _bool(rec.bounds_ok),
    ]


def _json_value(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return fmt_float(x)
    return '"' + str(x) + '"'


def jsonl_line(rec: SampleRecord) -> str:
    s1 = rec.sigma1
    s2 = rec.sigma2
    values = (
        rec.w.real,
        rec.w.imag,
        s1.real if s1 is not None else None,
        s1.imag if s1 is not None else None,
        s2.real if s2 is not None else None,
        s2.imag if s2 is not None else None,
        rec.path,
        rec.classification,
        rec.reachable,
        rec.bounds_ok,
    )
    parts = [f'"{k}": {_json_value(v)}' for k, v in zip(CSV_COLUMNS, values)]
    return "{" + ", ".join(parts) + "}"
