"""Deterministic text artifact writers.

Every writer renders integers exactly and rationals through one shared
six-significant-digit rule, so repeated runs produce byte-identical
files on any platform.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import IO

import numpy as np

from .core import CurvePath
from .locality import BarrierMask, DifferenceMap, DiffStats


def fmt6(x) -> str:
    """Decimal rendering with at most six significant digits.

    Integers print without a decimal point; everything else goes through
    printf %.6g. Exact inputs (int, Fraction) stay exact whenever the
    decimal expansion fits the rule.
    """
    if isinstance(x, bool):
        raise TypeError("fmt6 expects a number")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{float(x):.6g}"
    return f"{float(x):.6g}"


def write_curve_csv(fh: IO[str], p: CurvePath, nu: int, order: int, kernel_name: str) -> None:
    """One header line `nu,n,kernel,side`, then one line `i,x,y` per step."""
    fh.write(f"{nu},{order},{kernel_name},{p.side}\n")
    for i, (x, y) in enumerate(p.cells.tolist()):
        fh.write(f"{i},{x},{y}\n")


def read_curve_csv(fh: IO[str]) -> tuple[dict, CurvePath]:
    """Inverse of write_curve_csv. Returns (header fields, path)."""
    first = fh.readline().strip().split(",")
    if len(first) != 4:
        raise ValueError("curve CSV: bad header")
    head = {"nu": int(first[0]), "n": int(first[1]),
            "kernel": first[2], "side": int(first[3])}
    cells = []
    for line in fh:
        line = line.strip()
        if not line:
            continue
        i, x, y = (int(v) for v in line.split(","))
        if i != len(cells):
            raise ValueError(f"curve CSV: step {i} out of order")
        cells.append((x, y))
    return head, CurvePath(head["side"], np.array(cells, dtype=np.int64))


def write_diffmap_csv(fh: IO[str], m: DifferenceMap) -> None:
    """Grid of map values, top row first, columns left to right."""
    den = m.denominator
    for y in range(m.side - 1, -1, -1):
        row = m.numerators[:, y]
        fh.write(",".join(fmt6(Fraction(int(n), den)) for n in row))
        fh.write("\n")


def _log_gray(m: DifferenceMap) -> np.ndarray:
    """8-bit gray levels on a log scale, brightest at the map maximum."""
    v = m.numerators / float(m.denominator)
    top = math.log1p(v.max())
    if top == 0.0:
        return np.zeros(v.shape, dtype=np.int64)
    g = np.floor(255.0 * np.log1p(v) / top + 0.5).astype(np.int64)
    return np.clip(g, 0, 255)


def write_diffmap_pgm(fh: IO[str], m: DifferenceMap) -> None:
    """Plain PGM (P2), log-scaled gray, top row first."""
    g = _log_gray(m)
    fh.write(f"P2\n{m.side} {m.side}\n255\n")
    for y in range(m.side - 1, -1, -1):
        fh.write(" ".join(str(int(v)) for v in g[:, y]))
        fh.write("\n")


def write_barrier_ppm(fh: IO[str], m: DifferenceMap, mask: BarrierMask) -> None:
    """Plain PPM (P3): the PGM rendering with barrier cells in blue."""
    g = _log_gray(m)
    fh.write(f"P3\n{m.side} {m.side}\n255\n")
    for y in range(m.side - 1, -1, -1):
        parts = []
        for x in range(m.side):
            if mask.flags[x, y]:
                parts.append("0 0 255")
            else:
                v = int(g[x, y])
                parts.append(f"{v} {v} {v}")
        fh.write(" ".join(parts))
        fh.write("\n")


STATS_FIELDS = ("mean", "max", "min", "median", "entropy_bits", "pct_below_mean",
                "convention", "order")


def stats_record(s: DiffStats, convention: str, order: int,
                 extra: dict | None = None) -> str:
    """One-line JSON record; field order is fixed by STATS_FIELDS."""
    row = dict(extra or {})
    row["mean"] = fmt6(s.mean)
    row["max"] = fmt6(s.max)
    row["min"] = fmt6(s.min)
    row["median"] = fmt6(s.median)
    row["entropy_bits"] = fmt6(s.entropy_bits)
    row["pct_below_mean"] = fmt6(s.pct_below_mean)
    row["convention"] = convention
    row["order"] = order
    # numeric fields carry fmt6 strings rendered unquoted, so the record
    # reads as JSON with exact printed precision
    parts = []
    for k, v in row.items():
        if isinstance(v, str) and k not in ("convention", "kernel"):
            parts.append(f'"{k}": {v}')
        else:
            parts.append(f'"{k}": {json.dumps(v)}')
    return "{" + ", ".join(parts) + "}"
