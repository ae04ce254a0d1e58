"""JSON file formats ``lrep/v1`` and ``segs/v1``.

Segment coordinates are written as decimal strings so they survive any JSON
reader bit-exactly; instance coordinates are small and stay plain numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .model import GridSegment, LRep, LRepError, LShape, Orientation, _canonical_problems

LREP_FORMAT = "lrep/v1"
SEGS_FORMAT = "segs/v1"


class FormatError(LRepError):
    pass


@dataclass(frozen=True)
class SegmentFile:
    method: str
    n: int
    segments: tuple[GridSegment, ...]
    dilation_exponent: int | None = None

    @property
    def max_coord_bits(self) -> int:
        return max((max(s.coords).bit_length() for s in self.segments), default=0)


def lrep_to_dict(rep: LRep) -> dict:
    return {
        "format": LREP_FORMAT,
        "n": rep.n,
        "mode": rep.mode,
        "vertices": [
            {"id": s.id, "orient": s.orient.value, "l": s.l, "b": s.b, "r": s.r, "t": s.t}
            for s in rep.shapes
        ],
    }


def lrep_from_dict(d: dict) -> LRep:
    if d.get("format") != LREP_FORMAT:
        raise FormatError(f"expected format {LREP_FORMAT!r}, got {d.get('format')!r}")
    try:
        shapes = tuple(
            LShape(
                str(v["id"]),
                _as_int(v["l"]),
                _as_int(v["b"]),
                _as_int(v["r"]),
                _as_int(v["t"]),
                Orientation(v.get("orient", "TR")),
            )
            for v in d["vertices"]
        )
        mode = d.get("mode", "pure")
        n = int(d["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed {LREP_FORMAT} document: {exc}") from exc
    if n != len(shapes):
        raise FormatError(f"n={n} but {len(shapes)} vertices listed")
    probe = LRep(shapes, canonical=True, mode=mode)
    return LRep(shapes, canonical=not _canonical_problems(probe) and n > 0, mode=mode)


def _as_int(value) -> int:
    if isinstance(value, bool):
        raise ValueError(f"not an integer: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value)
    raise ValueError(f"not an integer: {value!r}")


def segs_to_dict(sf: SegmentFile) -> dict:
    return {
        "format": SEGS_FORMAT,
        "method": sf.method,
        "n": sf.n,
        "dilation_exponent": sf.dilation_exponent,
        "max_coord_bits": sf.max_coord_bits,
        "vertices": [
            {"id": s.id, "x1": str(s.p[0]), "y1": str(s.p[1]), "x2": str(s.q[0]), "y2": str(s.q[1])}
            for s in sf.segments
        ],
    }


def segs_from_dict(d: dict) -> SegmentFile:
    if d.get("format") != SEGS_FORMAT:
        raise FormatError(f"expected format {SEGS_FORMAT!r}, got {d.get('format')!r}")
    try:
        segs = tuple(
            GridSegment(
                str(v["id"]),
                (_as_int(v["x1"]), _as_int(v["y1"])),
                (_as_int(v["x2"]), _as_int(v["y2"])),
            )
            for v in d["vertices"]
        )
        dil = d.get("dilation_exponent")
        return SegmentFile(
            method=str(d["method"]),
            n=int(d["n"]),
            segments=segs,
            dilation_exponent=None if dil is None else int(dil),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed {SEGS_FORMAT} document: {exc}") from exc


def dumps(obj) -> str:
    d = lrep_to_dict(obj) if isinstance(obj, LRep) else segs_to_dict(obj)
    return json.dumps(d, indent=2) + "\n"


def loads(text: str):
    """Parse either file kind, dispatching on its ``format`` field."""
    d = json.loads(text)
    fmt = d.get("format") if isinstance(d, dict) else None
    if fmt == LREP_FORMAT:
        return lrep_from_dict(d)
    if fmt == SEGS_FORMAT:
        return segs_from_dict(d)
    raise FormatError(f"unknown format {fmt!r}")


def load(path) -> LRep | SegmentFile:
    return loads(Path(path).read_text())


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj))
