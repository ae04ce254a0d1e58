"""Intersection graphs of both representation kinds, and their comparison."""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .geometry import (
    Pow2Coord,
    Pow2Segment,
    compare_pow2,
    l_curves_meet,
    pow2_seg_intersects,
    seg_intersects,
)
from .model import GridSegment, IntersectionGraph, LRep, LRepError, check_canonical


def extract_graph_lrep(rep: LRep) -> IntersectionGraph:
    """Graph whose edges are the meeting pairs of L-curves.

    Vectorised form of :func:`~lsegments.geometry.l_intersects` over all pairs.
    """
    check_canonical(rep)
    n = rep.n
    if n == 0:
        return IntersectionGraph([], np.zeros((0, 0), dtype=bool))
    coords = np.array([(s.l, s.b, s.r, s.t, s.vertical_x) for s in rep], dtype=np.int64)
    l, b, r, t, vx = coords.T
    # cross[i, j]: vertical side of i crosses top side of j
    cross = (
        (l[None, :] < vx[:, None])
        & (vx[:, None] < r[None, :])
        & (b[:, None] < t[None, :])
        & (t[None, :] < t[:, None])
    )
    adj = cross | cross.T
    np.fill_diagonal(adj, False)
    return IntersectionGraph(rep.ids, adj)


def _bitlen(c) -> int:
    if isinstance(c, Pow2Coord):
        if not c.c:
            return c.e + 1 if c.a else 0
        if c.a and c.f < c.e:
            # 2**e - 2**f with f < e
            return c.e
        return int(c).bit_length()
    return int(c).bit_length()


def _candidate_pairs(boxes) -> tuple[np.ndarray, np.ndarray]:
    """Pairs ``i < j`` whose bounding boxes are not ruled out as disjoint.

    ``boxes`` holds ``(xmin, xmax, ymin, ymax)`` of non-negative coordinates.
    Comparing bit lengths is a sound (one-sided) disjointness filter.
    """
    bl = np.array([[_bitlen(c) for c in box] for box in boxes], dtype=np.int64).reshape(-1, 4)
    x0, x1, y0, y1 = bl.T
    keep = (
        (x1[:, None] >= x0[None, :])
        & (x1[None, :] >= x0[:, None])
        & (y1[:, None] >= y0[None, :])
        & (y1[None, :] >= y0[:, None])
    )
    return np.nonzero(np.triu(keep, 1))


def _pairwise_graph(ids, items, boxes, test: Callable) -> IntersectionGraph:
    n = len(items)
    if len(set(ids)) != n:
        raise LRepError("duplicate segment ids")
    adj = np.zeros((n, n), dtype=bool)
    if n > 1:
        iu, iv = _candidate_pairs(boxes)
        for i, j in zip(iu.tolist(), iv.tolist()):
            if test(items[i], items[j]):
                adj[i, j] = adj[j, i] = True
    return IntersectionGraph(list(ids), adj)


def _grid_box(s: GridSegment):
    (px, py), (qx, qy) = s.p, s.q
    return min(px, qx), max(px, qx), min(py, qy), max(py, qy)


def extract_graph_segments(segs: Sequence[GridSegment]) -> IntersectionGraph:
    """Graph whose edges are the intersecting pairs of closed segments."""
    if any(c < 0 for s in segs for c in s.coords):
        raise LRepError("grid segments must have non-negative coordinates")
    return _pairwise_graph([s.id for s in segs], list(segs), [_grid_box(s) for s in segs], seg_intersects)


def extract_graph_pow2(segs: Sequence[Pow2Segment]) -> IntersectionGraph:
    """As :func:`extract_graph_segments`, on symbolic power-of-two segments."""
    return _pairwise_graph([s.id for s in segs], list(segs), [s.bbox for s in segs], pow2_seg_intersects)


def graphs_equal(g1: IntersectionGraph, g2: IntersectionGraph) -> tuple[bool, list[tuple[str, str, bool, bool]]]:
    """Compare two labelled graphs; vertex order does not matter.

    Returns ``(equal, diff)`` where ``diff`` lists ``(u, v, in_g1, in_g2)`` for
    every pair the graphs disagree on.  Raises if the vertex sets differ.
    """
    if set(g1.ids) != set(g2.ids) or len(g1.ids) != len(g2.ids):
        missing = sorted(set(g1.ids) ^ set(g2.ids))
        raise LRepError(f"vertex id sets differ: {missing}")
    perm = [g2.ids.index(v) for v in g1.ids] if g1.ids != g2.ids else list(range(len(g1.ids)))
    a2 = g2.adjacency[np.ix_(perm, perm)]
    mismatch = np.triu(g1.adjacency != a2, 1)
    diff = [
        (g1.ids[i], g1.ids[j], bool(g1.adjacency[i, j]), bool(a2[i, j]))
        for i, j in zip(*np.nonzero(mismatch))
    ]
    return not diff, diff


def resolution_stats(segs: Sequence[GridSegment]) -> dict[str, int]:
    """Grid extents ``[0, width] x [0, height]`` supporting all endpoints."""
    if not segs:
        return {"width": 0, "height": 0, "max_coord": 0, "bits": 0}
    width = max(max(s.p[0], s.q[0]) for s in segs)
    height = max(max(s.p[1], s.q[1]) for s in segs)
    top = max(width, height)
    return {"width": width, "height": height, "max_coord": top, "bits": top.bit_length()}


def max_coord_pow2(segs: Sequence[Pow2Segment]):
    """Largest coordinate among symbolic segments, compared symbolically."""
    best = None
    for s in segs:
        for c in (*s.p, *s.q):
            if best is None or compare_pow2(c, best) > 0:
                best = c
    return best


def extract_graph_raw(rep: LRep) -> IntersectionGraph:
    """Graph of an arbitrary-coordinate representation, touching included."""
    n = rep.n
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if l_curves_meet(rep[i], rep[j]):
                adj[i, j] = adj[j, i] = True
    return IntersectionGraph(rep.ids, adj)
