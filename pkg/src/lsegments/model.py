"""Core value types: L-shapes, L-representations, grid segments, graphs.

Coordinates are plain Python ints throughout, so arithmetic is exact at any
magnitude.  Nothing here does geometry beyond invariant checks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


class LRepError(ValueError):
    """Input representation violates an invariant required by an operation."""


class UnsupportedInputError(LRepError):
    """Operation does not support this kind of input (e.g. pow2 on mixed)."""


class Orientation(enum.Enum):
    """Which vertical side of its bounding box a (rotated) L-curve includes.

    Both variants include the top side.  ``TOP_RIGHT`` is the ordinary L turned
    by 180 degrees; ``TOP_LEFT`` is its horizontal mirror image.
    """

    TOP_RIGHT = "TR"
    TOP_LEFT = "TL"


TR = Orientation.TOP_RIGHT
TL = Orientation.TOP_LEFT


@dataclass(frozen=True)
class LShape:
    id: str
    l: int
    b: int
    r: int
    t: int
    orient: Orientation = TR

    def __post_init__(self):
        if self.l > self.r or self.b > self.t:
            raise LRepError(f"inverted bounding box at {self.id}")

    @property
    def vertical_x(self) -> int:
        """x-coordinate of the included vertical side."""
        return self.r if self.orient is TR else self.l

    @property
    def corners(self):
        return (self.l, self.b, self.r, self.t)

    def replace(self, **kw) -> LShape:
        d = dict(id=self.id, l=self.l, b=self.b, r=self.r, t=self.t, orient=self.orient)
        d.update(kw)
        return LShape(**d)


@dataclass(frozen=True)
class LRep:
    """An L-representation: one L-shape per vertex, in a fixed vertex order.

    ``canonical`` claims that per axis all 2n coordinates are distinct and lie
    in ``1..2n``; :func:`validate_lrep` checks the claim.  ``mode`` is
    ``"pure"`` (only TOP_RIGHT allowed) or ``"mixed"``.
    """

    shapes: tuple[LShape, ...]
    canonical: bool = True
    mode: str = "pure"

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(self.shapes))

    @classmethod
    def from_tuples(cls, rows, canonical=True, mode=None) -> LRep:
        """Build from ``(id, l, b, r, t[, orient])`` rows."""
        shapes = []
        for row in rows:
            orient = Orientation(row[5]) if len(row) > 5 else TR
            shapes.append(LShape(row[0], *row[1:5], orient=orient))
        if mode is None:
            mode = "pure" if all(s.orient is TR for s in shapes) else "mixed"
        return cls(tuple(shapes), canonical=canonical, mode=mode)

    @property
    def n(self) -> int:
        return len(self.shapes)

    @property
    def ids(self) -> list[str]:
        return [s.id for s in self.shapes]

    def __len__(self):
        return len(self.shapes)

    def __iter__(self):
        return iter(self.shapes)

    def __getitem__(self, key):
        if isinstance(key, str):
            for s in self.shapes:
                if s.id == key:
                    return s
            raise KeyError(key)
        return self.shapes[key]


@dataclass(frozen=True)
class GridSegment:
    """Closed segment from ``p`` to ``q``; ``p == q`` is allowed (a point)."""

    id: str
    p: tuple[int, int]
    q: tuple[int, int]

    @property
    def coords(self):
        return (*self.p, *self.q)

    @property
    def is_point(self) -> bool:
        return self.p == self.q


@dataclass
class IntersectionGraph:
    ids: list[str]
    adjacency: np.ndarray = field(repr=False)

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=bool)
        n = len(self.ids)
        if adj.shape != (n, n):
            raise ValueError(f"adjacency shape {adj.shape} does not match {n} vertices")
        if len(set(self.ids)) != n:
            raise ValueError("duplicate vertex ids")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency is not symmetric")
        if adj.diagonal().any():
            raise ValueError("self-loop in adjacency")
        self.adjacency = adj

    @classmethod
    def from_edges(cls, ids: Sequence[str], edges) -> IntersectionGraph:
        index = {v: i for i, v in enumerate(ids)}
        adj = np.zeros((len(ids), len(ids)), dtype=bool)
        for u, v in edges:
            adj[index[u], index[v]] = adj[index[v], index[u]] = True
        return cls(list(ids), adj)

    @property
    def edges(self) -> set[tuple[str, str]]:
        iu, iv = np.nonzero(np.triu(self.adjacency, 1))
        return {(self.ids[i], self.ids[j]) for i, j in zip(iu, iv)}

    def edge_count(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adjacency[self.ids.index(u), self.ids.index(v)])


def _canonical_problems(rep: LRep) -> list[str]:
    problems = []
    n2 = 2 * rep.n
    for axis, pick in (("x", lambda s: (s.l, s.r)), ("y", lambda s: (s.b, s.t))):
        seen: dict[int, str] = {}
        reported = set()
        for s in rep.shapes:
            for value in pick(s):
                if not 1 <= value <= n2:
                    problems.append(f"{axis}-coordinate {value} out of range 1..{n2} at {s.id}")
                if value in seen and value not in reported:
                    problems.append(f"duplicate {axis}-coordinate {value}")
                    reported.add(value)
                seen.setdefault(value, s.id)
    return problems


def validate_lrep(rep: LRep) -> list[str]:
    """List every invariant ``rep`` violates; an empty list means valid."""
    violations = []
    seen_ids = set()
    for s in rep.shapes:
        if s.id in seen_ids:
            violations.append(f"duplicate id {s.id}")
        seen_ids.add(s.id)
        if s.l >= s.r:
            violations.append(f"zero-width box at {s.id}")
        if s.b >= s.t:
            violations.append(f"zero-height box at {s.id}")
    if rep.mode not in ("pure", "mixed"):
        violations.append(f"unknown mode {rep.mode!r}")
    elif rep.mode == "pure":
        for s in rep.shapes:
            if s.orient is not TR:
                violations.append(f"TOP_LEFT shape {s.id} in pure representation")

    problems = _canonical_problems(rep)
    if rep.canonical:
        violations.extend(problems)
    elif not problems and rep.n > 0:
        violations.append("coordinates are canonical but canonical flag is false")
    return violations


def check_canonical(rep: LRep) -> None:
    """Raise :class:`LRepError` unless ``rep`` is a valid canonical rep."""
    if not rep.canonical:
        raise LRepError("representation is not canonical; run normalize() first")
    violations = validate_lrep(rep)
    if violations:
        raise LRepError("; ".join(violations))
