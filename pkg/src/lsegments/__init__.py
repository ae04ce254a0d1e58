"""Segment representations on small integer grids from L-representations."""

from .gen import gen_named, gen_random
from .geometry import (
    Pow2Coord,
    compare_pow2,
    l_intersects,
    seg_intersects,
    seg_intersects_solve,
)
from .model import (
    TL,
    TR,
    GridSegment,
    IntersectionGraph,
    LRep,
    LRepError,
    LShape,
    Orientation,
    UnsupportedInputError,
    validate_lrep,
)
from .normalize import desingularize, normalize
from .transform import Pow2Result, transform_mixed, transform_pow2
from .verify import (
    extract_graph_lrep,
    extract_graph_pow2,
    extract_graph_segments,
    graphs_equal,
    resolution_stats,
)

__all__ = [
    "GridSegment",
    "IntersectionGraph",
    "LRep",
    "LRepError",
    "LShape",
    "Orientation",
    "Pow2Coord",
    "Pow2Result",
    "TL",
    "TR",
    "UnsupportedInputError",
    "compare_pow2",
    "desingularize",
    "extract_graph_lrep",
    "extract_graph_pow2",
    "extract_graph_segments",
    "gen_named",
    "gen_random",
    "graphs_equal",
    "l_intersects",
    "normalize",
    "resolution_stats",
    "seg_intersects",
    "seg_intersects_solve",
    "transform_mixed",
    "transform_pow2",
    "validate_lrep",
]
