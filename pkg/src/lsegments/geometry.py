"""Exact predicates for L-curves and grid segments.

Two independent segment tests live here: :func:`seg_intersects` (orientation
signs, integer-only) and :func:`seg_intersects_solve` (solves the 2x2 system in
rationals).  They are meant to be cross-checked against each other.

:class:`Pow2Coord` and :class:`Pow2Segment` give a symbolic fast path for the
coordinates produced by the power-of-two construction, which are differences of
two powers of two.  Signs of short sums of signed powers of two are decided by
:func:`pow2_sum_sign` without building the (possibly 4000-bit) integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Union

from .model import GridSegment, LRepError, LShape, TR

Point = tuple[int, int]


def pow2_sum_sign(terms: Iterable[tuple[int, int]]) -> int:
    """Return the sign of ``sum(c * 2**e for c, e in terms)``.

    Exponents must be non-negative ints; coefficients small ints.  Runs in
    time depending on the number of terms and the size of the coefficients,
    not on the exponents.
    """
    acc: dict[int, int] = {}
    for c, e in terms:
        if c:
            acc[e] = acc.get(e, 0) + c
    exps = sorted(e for e, c in acc.items() if c)
    if not exps:
        return 0
    top = acc[exps[-1]]
    if len(exps) == 1:
        return 1 if top > 0 else -1
    # The top term dominates when the rest cannot reach 2**top_exponent.
    rest = sum(abs(acc[e]) for e in exps[:-1])
    if exps[-2] + rest.bit_length() <= exps[-1]:
        return 1 if top > 0 else -1
    # Rewrite the sum in non-adjacent form, lowest exponent first. Digits end
    # up in {-1, 0, 1}, so the highest nonzero digit decides the sign.
    sign = 0
    carry = 0
    pos = -1
    i = 0
    while i < len(exps) or carry:
        nxt = pos + 1
        if i < len(exps) and (not carry or exps[i] == nxt):
            pos = exps[i]
            c = acc[pos] + carry
            i += 1
        else:
            pos = nxt
            c = carry
        if c & 1:
            d = 1 if c & 3 == 1 else -1
        else:
            d = 0
        carry = (c - d) >> 1
        if d:
            sign = d
    return sign


@dataclass(frozen=True)
class Pow2Coord:
    """The integer ``a * 2**e - c * 2**f`` with ``a, c`` in {0, 1}."""

    a: int
    e: int
    c: int = 0
    f: int = 0

    @classmethod
    def power(cls, e: int) -> Pow2Coord:
        return cls(1, e)

    @classmethod
    def diff(cls, e: int, f: int) -> Pow2Coord:
        return cls(1, e, 1, f)

    def terms(self, shift: int = 0, sign: int = 1) -> list[tuple[int, int]]:
        out = []
        if self.a:
            out.append((sign * self.a, self.e + shift))
        if self.c:
            out.append((-sign * self.c, self.f + shift))
        return out

    def __int__(self) -> int:
        return self.a * (1 << self.e) - self.c * (1 << self.f)

    def __index__(self) -> int:
        return int(self)

    def bit_length(self) -> int:
        return int(self).bit_length()


Coord = Union[int, Pow2Coord]


def compare_pow2(x: Coord, y: Coord) -> int:
    """Three-way compare: -1, 0 or 1 as ``x <, ==, > y``.

    Symbolic operands are compared in O(1) w.r.t. their exponents; if either
    side is a plain int both are expanded.
    """
    if isinstance(x, Pow2Coord) and isinstance(y, Pow2Coord):
        return pow2_sum_sign(x.terms() + y.terms(sign=-1))
    x, y = int(x), int(y)
    return (x > y) - (x < y)


def _cmax(x: Coord, y: Coord) -> Coord:
    return x if compare_pow2(x, y) >= 0 else y


def _cmin(x: Coord, y: Coord) -> Coord:
    return x if compare_pow2(x, y) <= 0 else y


@dataclass(frozen=True)
class Pow2Segment:
    """Segment with symbolic endpoints lying on ``2**i x + 2**j y = 2**k``.

    The supporting line is carried explicitly; :func:`pow2_segment_on_line`
    checks that both endpoints satisfy it.
    """

    id: str
    p: tuple[Pow2Coord, Pow2Coord]
    q: tuple[Pow2Coord, Pow2Coord]
    line: tuple[int, int, int]

    def to_grid(self) -> GridSegment:
        return GridSegment(self.id, (int(self.p[0]), int(self.p[1])), (int(self.q[0]), int(self.q[1])))

    @cached_property
    def bbox(self):
        (px, py), (qx, qy) = self.p, self.q
        return _cmin(px, qx), _cmax(px, qx), _cmin(py, qy), _cmax(py, qy)


def line_side(line: tuple[int, int, int], pt: tuple[Pow2Coord, Pow2Coord]) -> int:
    """Sign of ``2**i x + 2**j y - 2**k`` at ``pt``."""
    i, j, k = line
    return pow2_sum_sign(pt[0].terms(i) + pt[1].terms(j) + [(-1, k)])


def pow2_segment_on_line(seg: Pow2Segment) -> bool:
    return line_side(seg.line, seg.p) == 0 and line_side(seg.line, seg.q) == 0


def pow2_seg_intersects(s1: Pow2Segment, s2: Pow2Segment) -> bool:
    """Closed-segment intersection for segments on power-of-two lines."""
    d1 = line_side(s2.line, s1.p)
    d2 = line_side(s2.line, s1.q)
    if d1 * d2 > 0:
        return False
    d3 = line_side(s1.line, s2.p)
    d4 = line_side(s1.line, s2.q)
    if d3 * d4 > 0:
        return False
    if d1 or d2 or d3 or d4:
        # the lines are distinct and each segment reaches the other's line
        return True
    # Same line, which has negative slope: the segments overlap iff their
    # bounding boxes do.
    ax0, ax1, ay0, ay1 = s1.bbox
    bx0, bx1, by0, by1 = s2.bbox
    return not (
        compare_pow2(ax1, bx0) < 0
        or compare_pow2(bx1, ax0) < 0
        or compare_pow2(ay1, by0) < 0
        or compare_pow2(by1, ay0) < 0
    )


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p)."""
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _in_box(p: Point, q: Point, r: Point) -> bool:
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_intersect(p1: Point, q1: Point, p2: Point, q2: Point) -> bool:
    if (
        max(p1[0], q1[0]) < min(p2[0], q2[0])
        or max(p2[0], q2[0]) < min(p1[0], q1[0])
        or max(p1[1], q1[1]) < min(p2[1], q2[1])
        or max(p2[1], q2[1]) < min(p1[1], q1[1])
    ):
        return False
    d1 = orient(p2, q2, p1)
    d2 = orient(p2, q2, q1)
    d3 = orient(p1, q1, p2)
    d4 = orient(p1, q1, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        (d1 == 0 and _in_box(p2, q2, p1))
        or (d2 == 0 and _in_box(p2, q2, q1))
        or (d3 == 0 and _in_box(p1, q1, p2))
        or (d4 == 0 and _in_box(p1, q1, q2))
    )


def seg_intersects(s1: GridSegment, s2: GridSegment) -> bool:
    """True iff the closed segments share a point (orientation tests)."""
    return segments_intersect(s1.p, s1.q, s2.p, s2.q)


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def _point_param(pt, base, d) -> Fraction | None:
    """Parameter of ``pt`` on the line ``base + mu * d``, or None if off it."""
    w = (pt[0] - base[0], pt[1] - base[1])
    if _cross(w, d) != 0:
        return None
    return Fraction(_dot(w, d), _dot(d, d))


def seg_intersects_solve(s1: GridSegment, s2: GridSegment) -> bool:
    """Same contract as :func:`seg_intersects`, via exact rational solving.

    Solves ``p1 + lam * d1 = p2 + mu * d2`` and checks both parameters lie in
    [0, 1].  Only used to cross-check the orientation-based predicate.
    """
    p1, p2 = s1.p, s2.p
    d1 = (s1.q[0] - p1[0], s1.q[1] - p1[1])
    d2 = (s2.q[0] - p2[0], s2.q[1] - p2[1])
    zero1, zero2 = d1 == (0, 0), d2 == (0, 0)
    if zero1 and zero2:
        return p1 == p2
    if zero1:
        mu = _point_param(p1, p2, d2)
        return mu is not None and 0 <= mu <= 1
    if zero2:
        lam = _point_param(p2, p1, d1)
        return lam is not None and 0 <= lam <= 1

    w = (p2[0] - p1[0], p2[1] - p1[1])
    det = _cross(d1, d2)
    if det != 0:
        lam = Fraction(_cross(w, d2), det)
        mu = Fraction(_cross(w, d1), det)
        return 0 <= lam <= 1 and 0 <= mu <= 1
    if _cross(w, d1) != 0:
        return False  # parallel, distinct lines
    # collinear: parameters of s2's ends along s1
    a = _point_param(s2.p, p1, d1)
    b = _point_param(s2.q, p1, d1)
    lo, hi = min(a, b), max(a, b)
    return lo <= 1 and hi >= 0


def _check_distinct(u: LShape, v: LShape) -> None:
    xs = {u.l, u.r, v.l, v.r}
    ys = {u.b, u.t, v.b, v.t}
    if len(xs) < 4 or len(ys) < 4:
        raise LRepError(f"coordinate collision between {u.id} and {v.id}")


def _vertical_meets_top(u: LShape, v: LShape) -> bool:
    # u's vertical side crosses v's top side, strictly (canonical coordinates)
    return v.l < u.vertical_x < v.r and u.b < v.t < u.t


def l_intersects(u: LShape, v: LShape) -> bool:
    """True iff the two L-curves of a canonical representation meet.

    With pairwise-distinct coordinates the only possible contact is one
    curve's vertical side crossing the other's top side.
    """
    _check_distinct(u, v)
    return _vertical_meets_top(u, v) or _vertical_meets_top(v, u)


def arms(s: LShape) -> tuple[tuple[int, int, int, int], tuple[int, int, int, int]]:
    """Top and vertical side of ``s`` as ``(x0, y0, x1, y1)`` boxes."""
    x = s.vertical_x
    return (s.l, s.t, s.r, s.t), (x, s.b, x, s.t)


def _boxes_meet(a, b) -> bool:
    return a[0] <= b[2] and b[0] <= a[2] and a[1] <= b[3] and b[1] <= a[3]


def l_curves_meet(u: LShape, v: LShape) -> bool:
    """Closed-curve contact test for arbitrary (raw) integer coordinates.

    Touching counts.  Each side is axis-parallel, so it equals its own
    bounding box and box overlap is exact.
    """
    return any(_boxes_meet(a, b) for a in arms(u) for b in arms(v))
