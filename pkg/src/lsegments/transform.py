"""Canonical L-representations to segment representations on an integer grid.

``transform_pow2`` places each vertex on the diagonal from ``(0, 2**t)`` to
``(2**r, 0)`` and clips it to ``x >= 2**l`` and ``y >= 2**b``.  When a clipped
endpoint would be fractional the whole picture is dilated by ``2**s``; with
``s == 0`` the construction is reproduced exactly.

``transform_mixed`` handles both orientations using the diagonals of the
boxes ``[l, r] x [(2n)**b, (2n)**t]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import Pow2Coord, Pow2Segment
from .model import TR, GridSegment, LRep, UnsupportedInputError, check_canonical


@dataclass(frozen=True)
class Pow2Result:
    segments: list[GridSegment]
    dilation_exponent: int
    claimed_bound: int
    achieved_max_coord: int
    symbolic: list[Pow2Segment] = field(default_factory=list, repr=False)

    @property
    def strict_bound_held(self) -> bool:
        """Whether the undilated construction was used (``s == 0``)."""
        return self.dilation_exponent == 0


def dilation_exponent(rep: LRep) -> int:
    """Smallest ``s >= 0`` making every clipped endpoint integral."""
    s = 0
    for v in rep:
        s = max(s, v.r - v.l - v.t, v.t - v.b - v.r)
    return s


def pow2_segment(v, s: int = 0) -> Pow2Segment:
    """Clipped diagonal of ``v`` with all exponents shifted up by ``s``."""
    l, b, r, t = v.l + s, v.b + s, v.r + s, v.t + s
    if v.t - (v.r - v.l) + s < 0 or v.r - (v.t - v.b) + s < 0:
        raise ValueError(f"dilation exponent {s} too small for {v.id}")
    p = (Pow2Coord.power(l), Pow2Coord.diff(t, t - (v.r - v.l)))
    q = (Pow2Coord.diff(r, r - (v.t - v.b)), Pow2Coord.power(b))
    if v.t >= v.r:
        line = (v.t - v.r, 0, t)
    else:
        line = (0, v.r - v.t, r)
    return Pow2Segment(v.id, p, q, line)


def transform_pow2(rep: LRep) -> Pow2Result:
    check_canonical(rep)
    bad = [v.id for v in rep if v.orient is not TR]
    if bad:
        raise UnsupportedInputError(
            f"pow2 construction only handles TOP_RIGHT shapes; TOP_LEFT at {', '.join(bad)} "
            "(use transform_mixed)"
        )
    s = dilation_exponent(rep)
    symbolic = [pow2_segment(v, s) for v in rep]
    segments = [seg.to_grid() for seg in symbolic]
    achieved = max((max(seg.coords) for seg in segments), default=0)
    return Pow2Result(
        segments=segments,
        dilation_exponent=s,
        claimed_bound=1 << (2 * rep.n - 1 + s) if rep.n else 0,
        achieved_max_coord=achieved,
        symbolic=symbolic,
    )


def transform_mixed(rep: LRep) -> list[GridSegment]:
    check_canonical(rep)
    base = 2 * rep.n
    out = []
    for v in rep:
        lo, hi = base**v.b, base**v.t
        if v.orient is TR:
            out.append(GridSegment(v.id, (v.l, hi), (v.r, lo)))
        else:
            out.append(GridSegment(v.id, (v.l, lo), (v.r, hi)))
    return out
