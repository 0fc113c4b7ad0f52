"""Affine-recursion generator for the twelve homogeneous curve variants.

A variant nu in 0..11 is a set of four affine maps.  One growth round
applies each map to the whole previous-order curve, producing four
quadrant images on the doubled grid, concatenated in traversal order
lower-left, upper-left, upper-right, lower-right.  Variants:

    0  Hilbert          6..11  reversal-based variants: their growth
    1  Moore                   round acts on the order n-1 curve of
    2..5  Liu 1..4             variant 5 instead of variant 0, and some
                               maps traverse their quadrant image
                               backwards.

Each map is [U, t] with U one of the eight signed permutation matrices
(the symmetries of the square) and t one of six translation vectors.
On integer cell coordinates of a side-s input, a matrix row that picks
a source coordinate c with sign +1 sends it to c + s*t_row, and with
sign -1 to s*t_row - 1 - c.  This is the unique integer form of
"transform, add t, halve" that keeps cell centers on cell centers; it
also folds the translations (2,1) and (1,2) back inside the doubled
grid.

Variants 6..11 coincide with variant 5 at order 2 by construction, so
their own maps first act at order 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import (
    CurvePath,
    DiscontinuousJunction,
    GridPoint,
    IndexOutOfRange,
    KernelSpec,
    PointOutOfRange,
)

Mat2 = tuple[tuple[int, int], tuple[int, int]]

U_MATRICES: dict[str, Mat2] = {
    "I": ((1, 0), (0, 1)),   # identity
    "R": ((0, 1), (1, 0)),   # transpose
    "V": ((0, -1), (1, 0)),  # quarter turn counterclockwise
    "H": ((1, 0), (0, -1)),  # flip vertically (negate y)
}

T_VECTORS: tuple[GridPoint, ...] = ((0, 0), (0, 1), (1, 0), (1, 1), (2, 1), (1, 2))


@dataclass(frozen=True)
class AffineMap:
    """One quadrant map [U, t], optionally traversed backwards."""

    u: Mat2
    t: GridPoint
    reversed: bool = False

    def __post_init__(self) -> None:
        if len(self.u) != 2 or any(sorted(map(abs, row)) != [0, 1] for row in self.u):
            raise ValueError(f"u rows must each have one entry of +-1, got {self.u}")
        if self.t not in T_VECTORS:
            raise ValueError(f"t must be one of {T_VECTORS}, got {self.t}")

    def cell_transform(self, side: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Vectorized form: out[:, k] = sign[k] * cells[:, src[k]] + offset[k]."""
        src = np.empty(2, dtype=np.int64)
        sign = np.empty(2, dtype=np.int64)
        offset = np.empty(2, dtype=np.int64)
        for axis, row in enumerate(self.u):
            j = 0 if row[0] != 0 else 1
            src[axis] = j
            sign[axis] = row[j]
            offset[axis] = side * self.t[axis] if row[j] > 0 else side * self.t[axis] - 1
        return src, sign, offset

    def quadrant(self, side: int) -> tuple[int, int]:
        """(qx, qy) of the image quadrant on the doubled grid, each 0 or 1."""
        src, sign, offset = self.cell_transform(side)
        lo = np.minimum(offset, sign * (side - 1) + offset)
        return (int(lo[0]) // side, int(lo[1]) // side)


def _mk(sign: int, letter: str, t_index: int, rev: bool = False) -> AffineMap:
    u = tuple(tuple(sign * e for e in row) for row in U_MATRICES[letter])
    return AffineMap(u, T_VECTORS[t_index], rev)


@dataclass(frozen=True)
class RuleSet:
    """The four quadrant maps of one variant and the variant it grows from."""

    nu: int
    maps: tuple[AffineMap, AffineMap, AffineMap, AffineMap]
    base: int  # variant supplying the order n-1 curve: 0 for nu<=5, else 5


RULE_SETS: tuple[RuleSet, ...] = (
    # proper variants, grown from variant 0
    RuleSet(0, (_mk(+1, "R", 0), _mk(+1, "I", 1), _mk(+1, "I", 3), _mk(-1, "R", 4)), 0),
    RuleSet(1, (_mk(+1, "V", 2), _mk(+1, "V", 3), _mk(-1, "V", 5), _mk(-1, "V", 3)), 0),
    RuleSet(2, (_mk(-1, "I", 3), _mk(+1, "I", 1), _mk(+1, "I", 3), _mk(-1, "I", 4)), 0),
    RuleSet(3, (_mk(+1, "H", 1), _mk(+1, "V", 3), _mk(-1, "V", 5), _mk(+1, "H", 3)), 0),
    RuleSet(4, (_mk(+1, "R", 0), _mk(+1, "I", 1), _mk(+1, "I", 3), _mk(-1, "I", 4)), 0),
    RuleSet(5, (_mk(+1, "H", 1), _mk(+1, "V", 3), _mk(-1, "V", 5), _mk(-1, "V", 3)), 0),
    # reversal-based variants, grown from variant 5
    RuleSet(6, (_mk(-1, "I", 3), _mk(-1, "H", 3, True), _mk(+1, "I", 3), _mk(+1, "H", 3, True)), 5),
    RuleSet(7, (_mk(-1, "I", 3), _mk(-1, "H", 3, True), _mk(+1, "I", 3), _mk(-1, "R", 4)), 5),
    RuleSet(8, (_mk(-1, "V", 1, True), _mk(-1, "H", 3, True), _mk(+1, "I", 3), _mk(-1, "R", 4)), 5),
    RuleSet(9, (_mk(-1, "R", 3, True), _mk(+1, "V", 3), _mk(+1, "R", 3, True), _mk(-1, "V", 3)), 5),
    RuleSet(10, (_mk(+1, "H", 1), _mk(+1, "V", 3), _mk(+1, "R", 3, True), _mk(-1, "I", 4, True)), 5),
    RuleSet(11, (_mk(+1, "H", 1), _mk(+1, "V", 3), _mk(+1, "R", 3, True), _mk(-1, "V", 3)), 5),
)

N_VARIANTS = len(RULE_SETS)


class QuadrantImage:
    """Quarter of a grown curve: the image of one path under one map.

    Not a CurvePath: it fills a single quadrant of its (doubled) grid,
    not the whole grid.
    """

    def __init__(self, side: int, cells: np.ndarray):
        self.side = side
        cells = np.ascontiguousarray(cells)
        cells.flags.writeable = False
        self.cells = cells

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadrantImage):
            return NotImplemented
        return self.side == other.side and bool(np.array_equal(self.cells, other.cells))

    @property
    def entry(self) -> GridPoint:
        return (int(self.cells[0, 0]), int(self.cells[0, 1]))

    @property
    def exit(self) -> GridPoint:
        return (int(self.cells[-1, 0]), int(self.cells[-1, 1]))


def _apply_to_cells(q: AffineMap, cells: np.ndarray, side: int) -> np.ndarray:
    src, sign, offset = q.cell_transform(side)
    out = cells[:, src] * sign + offset
    qx, qy = q.quadrant(side)
    lo = np.array([qx * side, qy * side], dtype=np.int64)
    assert ((out >= lo) & (out < lo + side)).all(), f"image of {q} escapes its quadrant"
    if q.reversed:
        out = out[::-1]
    return out


def apply_affine(q: AffineMap, p: CurvePath) -> QuadrantImage:
    """Image of a whole path under one quadrant map, on the doubled grid."""
    return QuadrantImage(2 * p.side, _apply_to_cells(q, p.cells, p.side))


def grow_once(nu: int, p: CurvePath) -> CurvePath:
    """One growth round: concatenate the four quadrant images."""
    rule = RULE_SETS[nu]
    images = [_apply_to_cells(q, p.cells, p.side) for q in rule.maps]
    for i in range(3):
        tail, head = images[i][-1], images[i + 1][0]
        if int(np.abs(tail - head).max()) > 1:
            raise DiscontinuousJunction(
                f"variant {nu}: junction {i + 1} jumps from {(int(tail[0]), int(tail[1]))}"
                f" to {(int(head[0]), int(head[1]))}"
            )
    return CurvePath(2 * p.side, np.concatenate(images))


@lru_cache(maxsize=256)
def build_curve(nu: int, n: int, kernel: KernelSpec) -> CurvePath:
    """The order-n curve of variant nu grown from a kernel.

    Order 1 is the kernel itself.  Variants 0..5 grow from the variant-0
    curve of order n-1; variants 6..11 grow from the variant-5 curve of
    order n-1 and coincide with variant 5 at order 2.  The result side
    is kernel.side * 2**(n-1).
    """
    if not 0 <= nu < N_VARIANTS:
        raise ValueError(f"nu must be 0..{N_VARIANTS - 1}, got {nu}")
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n == 1:
        return kernel.path
    rule = RULE_SETS[nu]
    if rule.base == 5 and n == 2:
        return build_curve(5, 2, kernel)
    return grow_once(nu, build_curve(rule.base, n - 1, kernel))


def index_to_xy(nu: int, n: int, kernel: KernelSpec, i: int) -> GridPoint:
    """Grid cell holding curve label i."""
    p = build_curve(nu, n, kernel)
    if not 0 <= i < len(p):
        raise IndexOutOfRange(f"index {i} outside 0..{len(p) - 1}")
    return p.point(i)


def xy_to_index(nu: int, n: int, kernel: KernelSpec, pt: GridPoint) -> int:
    """Curve label of a grid cell."""
    p = build_curve(nu, n, kernel)
    x, y = int(pt[0]), int(pt[1])
    if not (0 <= x < p.side and 0 <= y < p.side):
        raise PointOutOfRange(f"point {(x, y)} outside the {p.side}x{p.side} grid")
    return int(p.label_grid()[x, y])
