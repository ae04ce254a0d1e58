"""Raw integer L-representations to canonical ones.

Ranking coordinates per axis keeps the graph only if no contact depends on a
tie.  :func:`desingularize` first removes every such dependency (touching
arms, zero-length arms) by scaling the picture by 4 and nudging single
coordinates by one unit, each nudge checked against the original graph.
After that, :func:`normalize` can break the remaining ties by vertex index.
"""

from __future__ import annotations

import heapq
import itertools

from .model import LRep, LRepError, LShape
from .verify import extract_graph_raw, graphs_equal

_OUTWARD = {"l": -1, "b": -1, "r": 1, "t": 1}


def _hv_tied(h: LShape, v: LShape) -> list[tuple[LShape, str]]:
    """Tied coordinates on which the top side of ``h`` meeting the vertical
    side of ``v`` depends; empty unless that contact is decided by a tie."""
    x = v.vertical_x
    xfield = "r" if v.vertical_x == v.r else "l"
    # (low, high, endpoint that sits on the other curve, other coordinate)
    checks = [
        (h.l, x, (h, "l"), (v, xfield)),
        (x, h.r, (h, "r"), (v, xfield)),
        (v.b, h.t, (v, "b"), (h, "t")),
        (h.t, v.t, (v, "t"), (h, "t")),
    ]
    if any(lo > hi for lo, hi, _, _ in checks):
        return []
    tied = []
    for lo, hi, end, other in checks:
        if lo == hi:
            tied.extend([end, other])
    return tied


def _degeneracies(shapes: list[LShape]) -> list[list[tuple[LShape, str]]]:
    """Each entry lists (shape, field) pairs that could resolve one problem."""
    out = []
    for s in shapes:
        if s.l == s.r:
            out.append([(s, "l"), (s, "r")])
        if s.b == s.t:
            out.append([(s, "t"), (s, "b")])
    for i, u in enumerate(shapes):
        for j, v in enumerate(shapes):
            if i == j:
                continue
            tied = _hv_tied(u, v)
            if tied:
                out.append(tied)
            if i < j:
                if u.t == v.t and u.l <= v.r and v.l <= u.r:
                    out.append([(u, "t"), (v, "t")])
                if u.vertical_x == v.vertical_x and u.b <= v.t and v.b <= u.t:
                    fu = "r" if u.vertical_x == u.r else "l"
                    fv = "r" if v.vertical_x == v.r else "l"
                    out.append([(u, fu), (v, fv)])
    return out


def _moves(tied: list[tuple[LShape, str]]):
    """Candidate (id, field, delta) moves, most plausible first: push the
    tied endpoint outward (lengthening its side), then inward, then any
    coordinate of the shapes involved."""
    candidates = [(s.id, f, _OUTWARD[f]) for s, f in tied]
    candidates += [(s.id, f, -_OUTWARD[f]) for s, f in tied]
    for sid in dict.fromkeys(s.id for s, _ in tied):
        for f in "lbrt":
            candidates += [(sid, f, _OUTWARD[f]), (sid, f, -_OUTWARD[f])]
    return list(dict.fromkeys(candidates))


def _apply(shapes, index, home, move):
    sid, f, delta = move
    cur = shapes[index[sid]]
    value = getattr(cur, f) + delta
    if abs(value - getattr(home[sid], f)) > 1:
        return None
    if f == "l" and value > cur.r or f == "r" and value < cur.l:
        return None
    if f == "b" and value > cur.t or f == "t" and value < cur.b:
        return None
    trial = list(shapes)
    trial[index[sid]] = cur.replace(**{f: value})
    return tuple(trial)


def desingularize(raw: LRep, scale: int = 4, max_expansions: int | None = None) -> LRep:
    """Return an equivalent rep with no tie-dependent contacts.

    Clean inputs come back unchanged.  Otherwise every coordinate is
    multiplied by ``scale`` and coordinates then move by at most one unit
    from their scaled value, so no move passes another original coordinate.
    A best-first search over graph-preserving moves looks for a state with no
    degeneracies; :class:`LRepError` is raised if the search budget runs out.
    """
    if not _degeneracies(list(raw.shapes)):
        return raw
    start = tuple(s.replace(l=s.l * scale, b=s.b * scale, r=s.r * scale, t=s.t * scale) for s in raw.shapes)
    home = {s.id: s for s in start}
    index = {s.id: k for k, s in enumerate(start)}
    target = extract_graph_raw(raw)
    budget = max_expansions if max_expansions is not None else 200 + 20 * len(start)

    def same_graph(shapes) -> bool:
        return graphs_equal(target, extract_graph_raw(LRep(shapes, canonical=False, mode=raw.mode)))[0]

    counter = itertools.count()
    problems = _degeneracies(list(start))
    heap = [(len(problems), 0, next(counter), start, problems)]
    seen = {start}
    while heap and budget > 0:
        budget -= 1
        _, depth, _, shapes, problems = heapq.heappop(heap)
        if not problems:
            return LRep(shapes, canonical=False, mode=raw.mode)
        for tied in problems:
            for move in _moves(tied):
                trial = _apply(shapes, index, home, move)
                if trial is None or trial in seen:
                    continue
                seen.add(trial)
                if not same_graph(trial):
                    continue
                new_problems = _degeneracies(list(trial))
                if not new_problems:
                    return LRep(trial, canonical=False, mode=raw.mode)
                heapq.heappush(heap, (len(new_problems), depth + 1, next(counter), trial, new_problems))
    raise LRepError("desingularize: no graph-preserving perturbation found within the search budget")


def _ranks(values: list[tuple[int, int, int]]) -> dict[tuple[int, int], int]:
    # values: (coordinate, vertex index, slot); ties broken by vertex index
    return {(vi, slot): rank for rank, (_, vi, slot) in enumerate(sorted(values), start=1)}


def normalize(raw: LRep) -> LRep:
    """Canonical rep (per-axis distinct coordinates in 1..2n), same graph."""
    ids = raw.ids
    if len(set(ids)) != len(ids):
        raise LRepError("duplicate vertex ids")
    clean = desingularize(raw)
    shapes = clean.shapes
    xr = _ranks([(v, i, k) for i, s in enumerate(shapes) for k, v in enumerate((s.l, s.r))])
    yr = _ranks([(v, i, k) for i, s in enumerate(shapes) for k, v in enumerate((s.b, s.t))])
    out = LRep(
        tuple(
            s.replace(l=xr[i, 0], r=xr[i, 1], b=yr[i, 0], t=yr[i, 1]) for i, s in enumerate(shapes)
        ),
        canonical=True,
        mode=raw.mode,
    )
    # raw-coordinate graph (touching counts) vs canonical graph
    ok, diff = graphs_equal(extract_graph_raw(raw), extract_graph_raw(out))
    if not ok:
        raise LRepError(f"normalize: tie-breaking changed the graph: {diff}")
    return out
