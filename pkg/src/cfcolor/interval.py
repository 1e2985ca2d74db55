"""Interval graphs given by an explicit representation: validation plus
the two four-color sweep algorithms.

Endpoints are exact rationals (`fractions.Fraction`); all 2n endpoints
must be pairwise distinct, and a representation with tied endpoints is
rejected rather than perturbed.  Intervals are closed, so u ~ v iff
max(l_u, l_v) <= min(r_u, r_v).

Both sweeps process intervals by increasing left endpoint and color an
as-yet-uncolored interval together with a chain of at most two
right-endpoint-maximal neighbors (colors 1, 2, 3), then zero-fill a
window of their neighbors.  Already-colored vertices are never
overwritten: the explicit assignments only ever target uncolored
vertices, and the zero-fill skips colored ones.  At most four distinct
colors (0..3) are ever used.

All tie-breaking is by endpoints, never by vertex id, so permuting
vertex ids while keeping intervals fixed permutes the output coloring
identically.

File format: one `i <vertex> <left> <right>` line per vertex with
rational literals such as `7/2`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphFormatError, is_connected
from .coloring import Coloring, verify_cfcn, verify_cfon
from .polysolve import UPPER_BOUND, SolveOutcome, checked_outcome


@dataclass(frozen=True)
class IntervalRepresentation:
    intervals: tuple[tuple[Fraction, Fraction], ...]

    @property
    def n(self) -> int:
        return len(self.intervals)

    def left(self, v: int) -> Fraction:
        return self.intervals[v][0]

    def right(self, v: int) -> Fraction:
        return self.intervals[v][1]


@dataclass(frozen=True)
class RepresentationVerdict:
    ok: bool
    reason: str = ""
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def parse_intervals(text: str, n: int) -> IntervalRepresentation:
    """Parse `i <vertex> <left> <right>` lines covering 0..n-1 exactly once."""
    seen: dict[int, tuple[Fraction, Fraction]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] != "i" or len(fields) != 4:
            raise GraphFormatError("malformed line, expected 'i <vertex> <left> <right>'", lineno)
        try:
            v = int(fields[1])
            l, r = Fraction(fields[2]), Fraction(fields[3])
        except (ValueError, ZeroDivisionError):
            raise GraphFormatError("bad vertex id or rational literal", lineno) from None
        if not (0 <= v < n):
            raise GraphFormatError(f"vertex {v} out of range for n={n}", lineno)
        if v in seen:
            raise GraphFormatError(f"vertex {v} has two intervals", lineno)
        seen[v] = (l, r)
    missing = [v for v in range(n) if v not in seen]
    if missing:
        raise GraphFormatError(f"vertices without an interval: {missing}")
    return IntervalRepresentation(tuple(seen[v] for v in range(n)))


def write_intervals(rep: IntervalRepresentation) -> str:
    lines = [f"i {v} {l} {r}" for v, (l, r) in enumerate(rep.intervals)]
    return "\n".join(lines) + "\n"


def _intersect(rep: IntervalRepresentation, u: int, v: int) -> bool:
    return max(rep.left(u), rep.left(v)) <= min(rep.right(u), rep.right(v))


def validate_representation(g: Graph, rep: IntervalRepresentation) -> RepresentationVerdict:
    """Endpoints distinct, l < r per interval, and intersections match g."""
    if rep.n != g.n:
        return RepresentationVerdict(False, f"{rep.n} intervals for {g.n} vertices")
    endpoints: list[Fraction] = []
    for v, (l, r) in enumerate(rep.intervals):
        if not l < r:
            return RepresentationVerdict(False, f"interval of vertex {v} has l >= r")
        endpoints.extend((l, r))
    if len(set(endpoints)) != len(endpoints):
        return RepresentationVerdict(False, "tied endpoints (must be pairwise distinct)")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            meets = _intersect(rep, u, v)
            if meets != g.has_edge(u, v):
                kind = "intersect without an edge" if meets else "share an edge but do not intersect"
                return RepresentationVerdict(False, f"vertices {u},{v} {kind}", (u, v))
    return RepresentationVerdict(True)


def graph_from_representation(rep: IntervalRepresentation) -> Graph:
    n = rep.n
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if _intersect(rep, u, v)])


def _require_valid(g: Graph, rep: IntervalRepresentation) -> None:
    verdict = validate_representation(g, rep)
    if not verdict.ok:
        raise ValueError(f"invalid interval representation: {verdict.reason}")


def _max_right_neighbor(g: Graph, rep: IntervalRepresentation, v: int) -> int | None:
    """Neighbor whose right endpoint dominates all of N[v], if one exists."""
    nb = g.neighbors(v)
    if not nb:
        return None
    best = max(nb, key=rep.right)
    if rep.right(best) >= max(rep.right(u) for u in g.closed_neighbors(v)):
        return best
    return None


def cfcn_interval(g: Graph, rep: IntervalRepresentation) -> SolveOutcome:
    """Left-endpoint sweep for closed neighborhoods; at most 4 colors.

    Each uncolored interval in turn receives color 1 and drags along the
    right-endpoint-maximal neighbor (color 2) and, if that is still not
    the globally rightmost interval, its own such neighbor (color 3);
    the zero-fill then blankets the uncolored part of the involved
    neighborhoods inside the stated endpoint window.
    """
    _require_valid(g, rep)
    if g.n < 1 or not is_connected(g):
        raise ValueError("sweep requires a connected interval graph")
    n = g.n
    colors: list[int] = [-1] * n
    rightmost = max(range(n), key=rep.right)
    order = sorted(range(n), key=rep.left)

    def fill(vertices, lo_left: Fraction, hi_right: Fraction | None) -> None:
        for u in sorted(set(vertices)):
            if colors[u] != -1:
                continue
            if rep.left(u) < lo_left:
                continue
            if hi_right is not None and rep.right(u) > hi_right:
                continue
            colors[u] = 0

    for vi in order:
        if colors[vi] != -1:
            continue
        if vi == rightmost:
            colors[vi] = 1
            fill(g.neighbors(vi), rep.left(vi), None)
            continue
        vl = _max_right_neighbor(g, rep, vi)
        assert vl is not None, "connected interval graph must have a dominating neighbor"
        if vl == rightmost:
            colors[vi] = 1
            if colors[vl] == -1:
                colors[vl] = 2
            fill(set(g.neighbors(vi)) | set(g.neighbors(vl)), rep.left(vi), None)
        else:
            vl2 = _max_right_neighbor(g, rep, vl)
            assert vl2 is not None
            colors[vi] = 1
            if colors[vl] == -1:
                colors[vl] = 2
            if colors[vl2] == -1:
                colors[vl2] = 3
            fill(
                set(g.neighbors(vi)) | set(g.neighbors(vl)) | set(g.neighbors(vl2)),
                rep.left(vi),
                rep.right(vl2),
            )

    coloring = Coloring(g, tuple(colors))
    return checked_outcome(coloring, verify_cfcn, UPPER_BOUND)


def cfon_interval(g: Graph, rep: IntervalRepresentation) -> SolveOutcome:
    """Left-endpoint sweep for open neighborhoods; at most 4 colors.

    Differs from the closed sweep when the current interval is the
    globally rightmost one: if some other interval is contained in it, a
    neighbor starting no earlier is colored 2 so that the rightmost
    interval's own neighborhood keeps a unique color.
    """
    _require_valid(g, rep)
    if g.n < 2 or not is_connected(g):
        raise ValueError("open-neighborhood sweep requires a connected graph on >= 2 vertices")
    n = g.n
    colors: list[int] = [-1] * n
    rightmost = max(range(n), key=rep.right)
    order = sorted(range(n), key=rep.left)

    def fill(vertices, lo_left: Fraction, hi_right: Fraction | None) -> None:
        for u in sorted(set(vertices)):
            if colors[u] != -1:
                continue
            if rep.left(u) < lo_left:
                continue
            if hi_right is not None and rep.right(u) > hi_right:
                continue
            colors[u] = 0

    for vi in order:
        if colors[vi] != -1:
            continue
        if vi == rightmost:
            contained = [
                u for u in range(n)
                if u != vi and rep.left(u) > rep.left(vi) and rep.right(u) < rep.right(vi)
            ]
            if not contained:
                colors[vi] = 1
                continue
            candidates = [u for u in g.neighbors(vi) if rep.left(u) >= rep.left(vi)]
            assert candidates, "a contained interval is such a neighbor"
            vi2 = min(candidates, key=rep.left)
            colors[vi] = 1
            if colors[vi2] == -1:
                colors[vi2] = 2
            fill(g.neighbors(vi), rep.left(vi), None)
            continue
        vl = _max_right_neighbor(g, rep, vi)
        assert vl is not None, "connected interval graph must have a dominating neighbor"
        if vl == rightmost:
            colors[vi] = 1
            if colors[vl] == -1:
                colors[vl] = 2
            fill(set(g.neighbors(vl)) | set(g.neighbors(vi)), rep.left(vi), None)
        else:
            vl2 = _max_right_neighbor(g, rep, vl)
            assert vl2 is not None
            colors[vi] = 1
            if colors[vl] == -1:
                colors[vl] = 2
            if colors[vl2] == -1:
                colors[vl2] = 3
            fill(
                set(g.neighbors(vi)) | set(g.neighbors(vl)) | set(g.neighbors(vl2)),
                rep.left(vi),
                rep.right(vl2),
            )

    coloring = Coloring(g, tuple(colors))
    return checked_outcome(coloring, verify_cfon, UPPER_BOUND)
