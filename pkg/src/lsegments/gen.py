"""Instance generators: seeded random canonical reps and a small catalog."""

from __future__ import annotations

import numpy as np

from .model import TL, TR, LRep, LShape


def _random_pairing(rng: np.random.Generator, n: int) -> list[tuple[int, int]]:
    # A uniformly random permutation cut into consecutive pairs is a uniformly
    # random perfect matching, assigned to vertices in random order.
    perm = rng.permutation(np.arange(1, 2 * n + 1))
    return [(int(min(a, c)), int(max(a, c))) for a, c in perm.reshape(n, 2)]


def gen_random(n: int, mode: str = "pure", seed: int = 0) -> LRep:
    """Random canonical L-representation on ``n`` vertices named ``v0..``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if mode not in ("pure", "mixed"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = np.random.default_rng(seed)
    xs = _random_pairing(rng, n)
    ys = _random_pairing(rng, n)
    if mode == "mixed":
        flips = rng.integers(0, 2, size=n)
    else:
        flips = np.zeros(n, dtype=int)
    shapes = [
        LShape(f"v{i}", l, b, r, t, TL if flip else TR)
        for i, ((l, r), (b, t), flip) in enumerate(zip(xs, ys, flips))
    ]
    return LRep(tuple(shapes), canonical=True, mode=mode)


# (id, l, b, r, t, orient)
_CATALOG = {
    # a, b far apart by dominance; a, c in separate vertical slabs; c's
    # vertical side crosses b's top side
    "fig1-like": [
        ("a", 5, 3, 6, 5, "TR"),
        ("b", 2, 2, 4, 4, "TR"),
        ("c", 1, 1, 3, 6, "TR"),
    ],
    # b is a downward diagonal met by a downward (c) and an upward (a) one;
    # d sits in its own slab to the left
    "fig2-like": [
        ("a", 3, 2, 7, 6, "TL"),
        ("b", 4, 1, 6, 8, "TR"),
        ("c", 5, 3, 8, 5, "TR"),
        ("d", 1, 4, 2, 7, "TR"),
    ],
    "worked2": [
        ("a", 1, 1, 3, 4, "TR"),
        ("c", 2, 2, 4, 3, "TR"),
    ],
    "gap2": [
        ("v", 1, 1, 4, 2, "TR"),
        ("w", 2, 3, 3, 4, "TR"),
    ],
    "path3": [
        ("a", 1, 1, 3, 6, "TR"),
        ("b", 2, 2, 5, 5, "TR"),
        ("c", 4, 3, 6, 4, "TR"),
    ],
    "cycle4": [
        ("a", 3, 1, 5, 7, "TR"),
        ("b", 1, 5, 7, 6, "TR"),
        ("c", 4, 2, 6, 8, "TR"),
        ("d", 2, 3, 8, 4, "TR"),
    ],
    "star4": [
        ("hub", 4, 1, 5, 8, "TR"),
        ("p", 1, 2, 6, 3, "TR"),
        ("q", 2, 4, 7, 5, "TR"),
        ("s", 3, 6, 8, 7, "TR"),
    ],
}

CATALOG_NAMES = tuple(_CATALOG)


def gen_named(name: str) -> LRep:
    """Hand-built instance from the catalog (see ``CATALOG_NAMES``)."""
    try:
        rows = _CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown instance {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    return LRep.from_tuples(rows)
