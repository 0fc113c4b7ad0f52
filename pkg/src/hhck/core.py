"""Grid paths and stroke strings for space-filling curve construction.

A curve of order m on a grid of side s visits every one of the s*s
cells exactly once, moving between king-adjacent cells (the eight
surrounding cells).  Moves are written with an eight-letter stroke
alphabet:

    u = (0, +1)    r = (+1, 0)    d = (0, -1)    l = (-1, 0)
    a = (+1, +1)   b = (+1, -1)   g = (-1, -1)   t = (-1, +1)

The letters a, b, g, t are the diagonal strokes alpha, beta, gamma and
theta.  Note that a and t both point upward: a leans right, t leans
left.  Coordinates are mathematical: x grows to the right, y grows
upward, and cell (0, 0) is the lower-left corner of the grid.

A kernel is a seed curve that enters the grid at the lower-left corner
cell and exits at the lower-right corner cell.  Higher-order curves are
grown from a kernel by the generators in ``hhck.affine`` and
``hhck.tags``; corner entry and exit is what guarantees that the four
quadrant copies of a grown curve meet each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

GridPoint = tuple[int, int]

STROKES = "urdlabgt"
AXIAL_STROKES = frozenset("urdl")
DIAGONAL_STROKES = frozenset("abgt")

STROKE_VECTORS: dict[str, GridPoint] = {
    "u": (0, 1),
    "r": (1, 0),
    "d": (0, -1),
    "l": (-1, 0),
    "a": (1, 1),
    "b": (1, -1),
    "g": (-1, -1),
    "t": (-1, 1),
}

VECTOR_STROKES: dict[GridPoint, str] = {v: k for k, v in STROKE_VECTORS.items()}

# u<->d, r<->l, a<->g, b<->t
OPPOSITE_TABLE = str.maketrans(STROKES, "dlurgtab")


def opposite(strokes: str) -> str:
    """Replace every stroke by the one pointing the other way."""
    return strokes.translate(OPPOSITE_TABLE)


class CurveError(ValueError):
    """Base class for path, kernel and lookup failures."""


class NotSpaceFilling(CurveError):
    """The cell sequence does not cover its grid bijectively."""


class OutOfBounds(NotSpaceFilling):
    """A cell lies outside the grid."""


class RevisitedCell(NotSpaceFilling):
    """A cell appears more than once."""


class NonAdjacentStep(NotSpaceFilling):
    """Two consecutive cells are not king-adjacent."""


class BadEntryExit(CurveError):
    """Kernel entry or exit is not at the required corner."""


class BrokenQuadrantConnectivity(CurveError):
    """Quadrant images of a candidate kernel do not meet."""


class DiscontinuousJunction(CurveError):
    """Adjacent quadrant images of a grown curve do not meet."""


class IndexOutOfRange(CurveError):
    """Curve index outside 0 .. side*side - 1."""


class PointOutOfRange(CurveError):
    """Grid point outside the curve's grid."""


class KernelFormatError(CurveError):
    """Kernel file text is malformed."""


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _pt(row) -> tuple:
    return (int(row[0]), int(row[1]))


@dataclass(frozen=True, eq=False)
class CurvePath:
    """An ordered, space-filling, king-connected visit of a square grid.

    ``cells`` has shape (side*side, 2); row i is the (x, y) cell holding
    curve label i.  The array is validated and frozen at construction.
    """

    side: int
    cells: np.ndarray

    def __post_init__(self) -> None:
        side = self.side
        if not isinstance(side, int) or not _is_power_of_two(side):
            raise NotSpaceFilling(f"grid side must be a power of two, got {side!r}")
        cells = np.ascontiguousarray(np.asarray(self.cells, dtype=np.int64))
        if cells.ndim != 2 or cells.shape[1] != 2:
            raise NotSpaceFilling("cells must be an (n, 2) array of grid points")
        if len(cells) != side * side:
            raise NotSpaceFilling(
                f"expected {side * side} cells for side {side}, got {len(cells)}"
            )
        if cells.min() < 0 or cells.max() >= side:
            bad = np.argmax((cells < 0).any(axis=1) | (cells >= side).any(axis=1))
            raise OutOfBounds(f"cell {_pt(cells[bad])} at step {int(bad)} leaves the grid")
        flat = cells[:, 0] * side + cells[:, 1]
        if len(np.unique(flat)) != len(flat):
            order = np.argsort(flat, kind="stable")
            dup = np.nonzero(np.diff(flat[order]) == 0)[0]
            step = int(max(order[dup[0]], order[dup[0] + 1]))
            raise RevisitedCell(f"cell {_pt(cells[step])} revisited at step {step}")
        steps = np.diff(cells, axis=0)
        if len(steps) and int(np.abs(steps).max()) > 1:
            bad = int(np.argmax(np.abs(steps).max(axis=1) > 1))
            raise NonAdjacentStep(
                f"step {bad} -> {bad + 1} jumps from {_pt(cells[bad])} to {_pt(cells[bad + 1])}"
            )
        cells.flags.writeable = False
        object.__setattr__(self, "cells", cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CurvePath):
            return NotImplemented
        return self.side == other.side and bool(np.array_equal(self.cells, other.cells))

    def __hash__(self) -> int:
        return hash((self.side, self.cache_key))

    @property
    def cache_key(self) -> bytes:
        key = self.__dict__.get("_cache_key")
        if key is None:
            key = self.cells.tobytes()
            object.__setattr__(self, "_cache_key", key)
        return key

    @property
    def entry(self) -> GridPoint:
        return (int(self.cells[0, 0]), int(self.cells[0, 1]))

    @property
    def exit(self) -> GridPoint:
        return (int(self.cells[-1, 0]), int(self.cells[-1, 1]))

    def point(self, i: int) -> GridPoint:
        return (int(self.cells[i, 0]), int(self.cells[i, 1]))

    def label_grid(self) -> np.ndarray:
        """Return grid[x, y] = curve label of cell (x, y)."""
        grid = self.__dict__.get("_label_grid")
        if grid is None:
            grid = np.empty((self.side, self.side), dtype=np.int64)
            grid[self.cells[:, 0], self.cells[:, 1]] = np.arange(len(self.cells))
            grid.flags.writeable = False
            object.__setattr__(self, "_label_grid", grid)
        return grid


@dataclass(frozen=True)
class StrokeString:
    """A stroke sequence plus the grid point the first stroke leaves from."""

    strokes: str
    origin: GridPoint = (0, 0)

    def __post_init__(self) -> None:
        bad = set(self.strokes) - set(STROKES)
        if bad:
            raise CurveError(f"unknown stroke letters {sorted(bad)}")
        x, y = self.origin
        object.__setattr__(self, "origin", (int(x), int(y)))

    def __len__(self) -> int:
        return len(self.strokes)


def _walk(strokes: str, origin: GridPoint) -> np.ndarray:
    """Cumulative positions of a stroke string, origin included."""
    n = len(strokes)
    pos = np.empty((n + 1, 2), dtype=np.int64)
    pos[0] = origin
    if n:
        idx = np.frombuffer(strokes.encode("ascii"), dtype=np.uint8)
        lut = np.zeros((256, 2), dtype=np.int64)
        for letter, vec in STROKE_VECTORS.items():
            lut[ord(letter)] = vec
        np.cumsum(lut[idx], axis=0, out=pos[1:])
        pos[1:] += pos[0]
    return pos


def strokes_to_path(s: StrokeString, side: int) -> CurvePath:
    """Materialize a stroke string as a space-filling path on a side x side grid.

    Walk violations are reported in step order: the first cell that
    leaves the grid raises OutOfBounds, the first repeated cell raises
    RevisitedCell.  A walk of the wrong total length raises
    NotSpaceFilling afterwards.
    """
    pos = _walk(s.strokes, s.origin)
    oob = (pos < 0).any(axis=1) | (pos >= side).any(axis=1)
    first_oob = int(np.argmax(oob)) if oob.any() else None
    flat = pos[:, 0] * (2 * side + 3) + pos[:, 1]  # stride safe for out-of-grid coords too
    order = np.argsort(flat, kind="stable")
    dup = np.nonzero(np.diff(flat[order]) == 0)[0]
    first_dup = None
    if len(dup):
        first_dup = int(min(max(order[i], order[i + 1]) for i in dup))
    if first_oob is not None and (first_dup is None or first_oob <= first_dup):
        raise OutOfBounds(
            f"cell {_pt(pos[first_oob])} at step {first_oob} leaves the {side}x{side} grid"
        )
    if first_dup is not None:
        raise RevisitedCell(f"cell {_pt(pos[first_dup])} revisited at step {first_dup}")
    if len(pos) != side * side:
        raise NotSpaceFilling(
            f"{len(s.strokes)} strokes cover {len(pos)} cells, expected {side * side}"
        )
    return CurvePath(side, pos)


def path_to_strokes(p: CurvePath) -> StrokeString:
    """Read a path back as a stroke string anchored at its entry cell."""
    steps = np.diff(p.cells, axis=0)
    if len(steps) and int(np.abs(steps).max()) > 1:
        bad = int(np.argmax(np.abs(steps).max(axis=1) > 1))
        raise NonAdjacentStep(f"step {bad} -> {bad + 1} is not a king move")
    letters = [VECTOR_STROKES[(int(dx), int(dy))] for dx, dy in steps]
    return StrokeString("".join(letters), p.entry)


def reverse(p: CurvePath) -> CurvePath:
    """The same curve traversed end to start."""
    return CurvePath(p.side, p.cells[::-1].copy())


@dataclass(frozen=True, eq=False)
class KernelSpec:
    """A validated seed curve."""

    name: str
    path: CurvePath

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KernelSpec):
            return NotImplemented
        return self.name == other.name and self.path == other.path

    def __hash__(self) -> int:
        return hash((self.name, self.path))

    @property
    def side(self) -> int:
        return self.path.side

    @property
    def strokes(self) -> StrokeString:
        return path_to_strokes(self.path)


def validate_kernel(p: CurvePath | "np.ndarray | list", name: str = "kernel") -> KernelSpec:
    """Check every kernel requirement and return the kernel on success.

    Requirements: the path fills a power-of-two grid of side >= 2 with
    king moves, enters at (0, 0), exits at (side - 1, 0), and one
    growth round produces quadrant images that meet at all three
    junctions.
    """
    if not isinstance(p, CurvePath):
        cells = np.asarray(p, dtype=np.int64)
        n = len(cells)
        side = 1
        while side * side < n:
            side *= 2
        p = CurvePath(side, cells)
    if p.side < 2:
        raise BadEntryExit("side-1 kernel rejected: entry and exit would coincide")
    if p.entry != (0, 0):
        raise BadEntryExit(f"kernel must enter at (0, 0), got {p.entry}")
    if p.exit != (p.side - 1, 0):
        raise BadEntryExit(f"kernel must exit at ({p.side - 1}, 0), got {p.exit}")
    from . import affine  # deferred: affine imports this module for types

    try:
        affine.grow_once(0, p)
    except DiscontinuousJunction as exc:
        raise BrokenQuadrantConnectivity(str(exc)) from exc
    return KernelSpec(name, p)


def parse_kernel_text(text: str, name: str = "kernel") -> KernelSpec:
    """Parse the three-line kernel format.

        side 4
        origin 0 0
        strokes urdrablt...

    Blank lines and lines starting with ``#`` are ignored, which leaves
    room for a provenance note in bundled files.  Diagonal strokes use
    the ASCII names a, b, g, t.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) != 3:
        raise KernelFormatError(f"expected 3 content lines (side, origin, strokes), got {len(lines)}")
    fields: dict[str, list[str]] = {}
    for ln, expected in zip(lines, ("side", "origin", "strokes")):
        parts = ln.split()
        if not parts or parts[0] != expected:
            raise KernelFormatError(f"expected a '{expected}' line, got {ln!r}")
        fields[expected] = parts[1:]
    if len(fields["side"]) != 1 or not fields["side"][0].isdigit():
        raise KernelFormatError("side must be a single integer")
    side = int(fields["side"][0])
    if not _is_power_of_two(side):
        raise KernelFormatError(f"side must be a power of two, got {side}")
    if len(fields["origin"]) != 2:
        raise KernelFormatError("origin must be two integers")
    try:
        origin = (int(fields["origin"][0]), int(fields["origin"][1]))
    except ValueError as exc:
        raise KernelFormatError("origin must be two integers") from exc
    if len(fields["strokes"]) != 1:
        raise KernelFormatError("strokes must be a single token")
    try:
        strokes = StrokeString(fields["strokes"][0], origin)
    except CurveError as exc:
        raise KernelFormatError(str(exc)) from exc
    return validate_kernel(strokes_to_path(strokes, side), name)


def format_kernel_text(spec: KernelSpec) -> str:
    """Canonical three-line text for a kernel (no comments)."""
    s = spec.strokes
    return f"side {spec.side}\norigin {s.origin[0]} {s.origin[1]}\nstrokes {s.strokes}\n"
