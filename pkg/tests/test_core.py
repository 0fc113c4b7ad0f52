import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hhck.core import (
    AXIAL_STROKES,
    BadEntryExit,
    CurveError,
    CurvePath,
    DIAGONAL_STROKES,
    KernelFormatError,
    NonAdjacentStep,
    NotSpaceFilling,
    OutOfBounds,
    RevisitedCell,
    STROKES,
    STROKE_VECTORS,
    StrokeString,
    format_kernel_text,
    opposite,
    parse_kernel_text,
    path_to_strokes,
    reverse,
    strokes_to_path,
    validate_kernel,
)
from hhck.kernels import BUILTIN_KERNELS, load_bundled

UNIT_CELLS = [(0, 0), (0, 1), (1, 1), (1, 0)]


def make_path(cells):
    side = 2
    while side * side < len(cells):
        side *= 2
    return CurvePath(side, np.array(cells, dtype=np.int64))


class TestStrokeAlphabet:
    def test_eight_letters(self):
        assert len(STROKES) == 8
        assert set(STROKES) == AXIAL_STROKES | DIAGONAL_STROKES

    def test_vectors(self):
        assert STROKE_VECTORS["u"] == (0, 1)
        assert STROKE_VECTORS["r"] == (1, 0)
        assert STROKE_VECTORS["d"] == (0, -1)
        assert STROKE_VECTORS["l"] == (-1, 0)
        assert STROKE_VECTORS["a"] == (1, 1)
        assert STROKE_VECTORS["b"] == (1, -1)
        assert STROKE_VECTORS["g"] == (-1, -1)
        # t is the left-up diagonal; a is the only right-up one
        assert STROKE_VECTORS["t"] == (-1, 1)

    def test_opposite_negates_vectors(self):
        for s in STROKES:
            ox, oy = STROKE_VECTORS[opposite(s)]
            assert (ox, oy) == (-STROKE_VECTORS[s][0], -STROKE_VECTORS[s][1])

    def test_opposite_involution(self):
        assert opposite(opposite(STROKES)) == STROKES


class TestStrokesToPath:
    def test_unit_shape(self):
        p = strokes_to_path(StrokeString("urd", (0, 0)), 2)
        assert p.cells.tolist() == [list(c) for c in UNIT_CELLS]

    def test_too_short(self):
        with pytest.raises(NotSpaceFilling):
            strokes_to_path(StrokeString("a", (0, 0)), 2)

    def test_leaves_grid(self):
        with pytest.raises(OutOfBounds):
            strokes_to_path(StrokeString("uu", (0, 0)), 2)

    def test_revisit(self):
        with pytest.raises(RevisitedCell):
            strokes_to_path(StrokeString("url", (0, 0)), 2)

    def test_bad_letter_rejected_at_construction(self):
        with pytest.raises(CurveError):
            StrokeString("urz", (0, 0))


class TestPathToStrokes:
    def test_unit_inverse(self):
        s = path_to_strokes(make_path(UNIT_CELLS))
        assert s.strokes == "urd"
        assert s.origin == (0, 0)

    def test_diagonal_steps_read_back(self):
        p = load_bundled("mouse").path
        s = path_to_strokes(p)
        assert strokes_to_path(s, p.side) == p


class TestReverse:
    def test_cells_reversed(self):
        p = reverse(make_path(UNIT_CELLS))
        assert p.cells.tolist() == [[1, 0], [1, 1], [0, 1], [0, 0]]

    def test_involution(self):
        p = make_path(UNIT_CELLS)
        assert reverse(reverse(p)) == p

    def test_stroke_view(self):
        s = path_to_strokes(reverse(make_path(UNIT_CELLS)))
        assert s.strokes == "uld"
        assert s.origin == (1, 0)

    def test_opposite_stroke_duality(self):
        for name in BUILTIN_KERNELS:
            p = load_bundled(name).path
            forward = path_to_strokes(p).strokes
            backward = path_to_strokes(reverse(p)).strokes
            assert backward == opposite(forward)[::-1]


class TestCurvePathValidation:
    def test_non_power_of_two_side(self):
        with pytest.raises(NotSpaceFilling):
            CurvePath(3, np.zeros((9, 2), dtype=np.int64))

    def test_wrong_cell_count(self):
        with pytest.raises(NotSpaceFilling):
            CurvePath(2, np.array([[0, 0], [0, 1]]))

    def test_out_of_bounds_cell(self):
        with pytest.raises(OutOfBounds):
            CurvePath(2, np.array([[0, 0], [0, 1], [1, 1], [2, 0]]))

    def test_revisited_cell(self):
        with pytest.raises(RevisitedCell):
            CurvePath(2, np.array([[0, 0], [0, 1], [1, 1], [0, 0]]))

    def test_jump(self):
        with pytest.raises(NonAdjacentStep):
            CurvePath(4, np.array(
                [[x, y] for y in range(4) for x in (range(4) if y % 2 == 0 else range(3, -1, -1))]
            )[np.r_[0:4, 8:12, 4:8, 12:16]])

    def test_frozen_cells(self):
        p = make_path(UNIT_CELLS)
        with pytest.raises(ValueError):
            p.cells[0, 0] = 5


class TestValidateKernel:
    def test_unit_ok(self):
        spec = validate_kernel(UNIT_CELLS, name="unit")
        assert spec.side == 2
        assert spec.path.entry == (0, 0)
        assert spec.path.exit == (1, 0)

    def test_exit_top_left(self):
        with pytest.raises(BadEntryExit):
            validate_kernel([(0, 0), (1, 0), (1, 1), (0, 1)])

    def test_wrong_entry(self):
        with pytest.raises(BadEntryExit):
            validate_kernel([(1, 0), (1, 1), (0, 1), (0, 0)])

    def test_side_one_rejected(self):
        with pytest.raises(BadEntryExit):
            validate_kernel(CurvePath(1, np.array([[0, 0]])))

    def test_bundled_kernels_valid(self):
        for name in BUILTIN_KERNELS:
            spec = load_bundled(name)
            again = validate_kernel(spec.path, name=name)
            assert again == spec

    def test_unit_kernel_axial_only(self):
        s = load_bundled("unit").strokes.strokes
        assert set(s) <= AXIAL_STROKES

    def test_decorated_kernels_use_diagonals(self):
        for name in ("mouse", "frog"):
            s = load_bundled(name).strokes.strokes
            assert set(s) & DIAGONAL_STROKES


class TestKernelText:
    def test_roundtrip(self):
        for name in BUILTIN_KERNELS:
            spec = load_bundled(name)
            assert parse_kernel_text(format_kernel_text(spec), name) == spec

    def test_comments_and_blanks_ignored(self):
        text = "# note\n\nside 2\norigin 0 0\n\nstrokes urd\n"
        assert parse_kernel_text(text).side == 2

    @pytest.mark.parametrize("text", [
        "side 2\norigin 0 0\n",
        "side 3\norigin 0 0\nstrokes urd\n",
        "side 2\norigin 0\nstrokes urd\n",
        "side 2\norigin 0 0\nstrokes urz\n",
        "origin 0 0\nside 2\nstrokes urd\n",
        "side two\norigin 0 0\nstrokes urd\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(KernelFormatError):
            parse_kernel_text(text)

    def test_bad_path_in_wellformed_file(self):
        with pytest.raises(BadEntryExit):
            parse_kernel_text("side 2\norigin 0 0\nstrokes rul\n")


@given(st.text(alphabet=STROKES, min_size=3, max_size=3))
def test_random_short_strings_parse_or_fail_cleanly(s):
    try:
        p = strokes_to_path(StrokeString(s, (0, 0)), 2)
    except CurveError:
        return
    assert len(p) == 4
    assert path_to_strokes(p).strokes == s


@given(st.sampled_from(BUILTIN_KERNELS))
def test_kernel_stroke_roundtrip(name):
    p = load_bundled(name).path
    s = path_to_strokes(p)
    assert strokes_to_path(s, p.side) == p
