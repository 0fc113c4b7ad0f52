"""Tag-system generator: grows curves by rewriting stroke strings.

This is the second, independent route to the same curves as
``hhck.affine``.  Seven letterwise operators permute the eight-letter
stroke alphabet; each is the stroke-level action of one of the eight
signed permutation matrices (the eighth, the identity, needs no name):

    o  transpose               f  half turn
    a  anti-transpose          m  flip vertically (negate y)
    g  quarter turn ccw        y  flip horizontally (negate x)
    x  quarter turn cw

A growth round rewrites the previous-order string w as

    s1(w) u s2(w) r s3(w) d s4(w)

where each slot applies one operator (or none) and optionally an
overbar.  The overbar reverses the letter order of the slot without
flipping the letters; geometrically that is traversal reversal combined
with a half turn, which is exactly how the reversed quadrant maps of
the rule sets act on strokes.  The three connector strokes u, r, d are
the junctions between quadrant images and are the same for all twelve
variants.

The rewritten string fixes the curve only up to translation; a grown
curve is pinned to its grid by shifting the walk so its bounding box
starts at (0, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import CurvePath, KernelSpec, STROKES, StrokeString, _walk

MORPHISM_IMAGES: dict[str, str] = {
    # image of "urdlabgt" under each operator
    "o": "ruldatgb",
    "a": "ldrugbat",
    "g": "lurdtabg",
    "x": "rdlubgta",
    "f": "dlurgtab",
    "m": "drulbatg",
    "y": "uldrtgba",
}


@dataclass(frozen=True)
class Morphism:
    """A letterwise permutation of the stroke alphabet."""

    name: str
    image: str

    def __post_init__(self) -> None:
        if sorted(self.image) != sorted(STROKES):
            raise ValueError(f"operator {self.name} is not a bijection: {self.image!r}")
        object.__setattr__(self, "_table", str.maketrans(STROKES, self.image))

    def apply(self, strokes: str) -> str:
        return strokes.translate(self._table)

    def __call__(self, strokes: str) -> str:
        return self.apply(strokes)


MORPHISMS: dict[str, Morphism] = {
    name: Morphism(name, image) for name, image in MORPHISM_IMAGES.items()
}


def apply_morphism(m: Morphism | str, s: StrokeString | str) -> StrokeString | str:
    """Apply an operator letter by letter; length and origin unchanged."""
    if isinstance(m, str):
        m = MORPHISMS[m]
    if isinstance(s, StrokeString):
        return StrokeString(m.apply(s.strokes), s.origin)
    return m.apply(s)


Slot = tuple[str | None, bool]  # (operator name or None, overbar)


@dataclass(frozen=True)
class TagRule:
    """The four rewrite slots of one variant (connectors are always u, r, d)."""

    nu: int
    slots: tuple[Slot, Slot, Slot, Slot]
    base: int  # variant supplying the order n-1 string: 0 for nu<=5, else 5


TAG_RULES: tuple[TagRule, ...] = (
    TagRule(0, (("o", False), (None, False), (None, False), ("a", False)), 0),
    TagRule(1, (("g", False), ("g", False), ("x", False), ("x", False)), 0),
    TagRule(2, (("f", False), (None, False), (None, False), ("f", False)), 0),
    TagRule(3, (("m", False), ("g", False), ("x", False), ("m", False)), 0),
    TagRule(4, (("o", False), (None, False), (None, False), ("f", False)), 0),
    TagRule(5, (("m", False), ("g", False), ("x", False), ("x", False)), 0),
    TagRule(6, (("f", False), ("m", True), (None, False), ("y", True)), 5),
    TagRule(7, (("f", False), ("m", True), (None, False), ("a", False)), 5),
    TagRule(8, (("g", True), ("m", True), (None, False), ("a", False)), 5),
    TagRule(9, (("o", True), ("g", False), ("a", True), ("x", False)), 5),
    TagRule(10, (("m", False), ("g", False), ("a", True), (None, True)), 5),
    TagRule(11, (("m", False), ("g", False), ("a", True), ("x", False)), 5),
)

CONNECTORS = "urd"


def _rewrite(rule: TagRule, w: str) -> str:
    parts = []
    for op, barred in rule.slots:
        s = MORPHISMS[op].apply(w) if op else w
        parts.append(s[::-1] if barred else s)
    return parts[0] + "u" + parts[1] + "r" + parts[2] + "d" + parts[3]


@lru_cache(maxsize=256)
def _expand_str(nu: int, n: int, w0: str) -> str:
    if n == 1:
        return w0
    rule = TAG_RULES[nu]
    if rule.base == 5 and n == 2:
        return _expand_str(5, 2, w0)
    return _rewrite(rule, _expand_str(rule.base, n - 1, w0))


def expand(nu: int, n: int, kernel_strokes: StrokeString | str) -> StrokeString | str:
    """Grow a kernel stroke string to order n under variant nu.

    Each round turns a string of length L into one of length 4L + 3.
    When given a StrokeString the result carries the origin that pins
    the grown walk to its grid (generally not the kernel origin).
    """
    if not 0 <= nu < len(TAG_RULES):
        raise ValueError(f"nu must be 0..{len(TAG_RULES) - 1}, got {nu}")
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if isinstance(kernel_strokes, str):
        return _expand_str(nu, n, kernel_strokes)
    s = _expand_str(nu, n, kernel_strokes.strokes)
    pos = _walk(s, (0, 0))
    shift = -pos.min(axis=0)
    return StrokeString(s, (int(shift[0]), int(shift[1])))


def generate(nu: int, n: int, kernel: KernelSpec) -> CurvePath:
    """The order-n curve of variant nu, built by string rewriting alone."""
    s = _expand_str(nu, n, kernel.strokes.strokes)
    pos = _walk(s, (0, 0))
    pos -= pos.min(axis=0)
    return CurvePath(kernel.side * 2 ** (n - 1), pos)
