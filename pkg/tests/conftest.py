import itertools

import pytest

from lsegments.model import TR, LRep, LShape

ACCEPTANCE_LINES: list[str] = []


def raster(s: LShape) -> set[tuple[int, int]]:
    """Lattice points of an L-curve with integer corners."""
    x = s.r if s.orient is TR else s.l
    top = {(i, s.t) for i in range(s.l, s.r + 1)}
    side = {(x, j) for j in range(s.b, s.t + 1)}
    return top | side


def raster_meet(u: LShape, v: LShape) -> bool:
    # axis-parallel sides with integer ends meet iff they share a lattice point
    return bool(raster(u) & raster(v))


def all_canonical_reps(n: int, orients=(TR,)):
    """Every canonical rep on n vertices (ids v0..), for tiny n."""
    values = list(range(1, 2 * n + 1))

    def pairings(vals):
        if not vals:
            yield []
            return
        first, rest = vals[0], vals[1:]
        for k, partner in enumerate(rest):
            remaining = rest[:k] + rest[k + 1 :]
            for tail in pairings(remaining):
                yield [(first, partner)] + tail

    xps = list(pairings(values))
    yps = list(pairings(values))
    for xp in xps:
        for perm in itertools.permutations(range(n)):
            for yp in yps:
                for ors in itertools.product(orients, repeat=n):
                    shapes = [
                        LShape(f"v{i}", xp[i][0], yp[perm[i]][0], xp[i][1], yp[perm[i]][1], ors[i])
                        for i in range(n)
                    ]
                    mode = "pure" if all(o is TR for o in ors) else "mixed"
                    yield LRep(tuple(shapes), canonical=True, mode=mode)


@pytest.fixture
def report_line():
    def add(name: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return add


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
