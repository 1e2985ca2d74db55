"""Colorings and the conflict-free verifiers.

A coloring assigns a non-negative integer color to every vertex.  It is
conflict-free on closed neighborhoods (CF-CN) when every N[v] contains
some color exactly once, and on open neighborhoods (CF-ON) when every
N(v) does.  An isolated vertex has empty N(v), so no coloring is ever
CF-ON valid for a graph with isolated vertices.

The "number of colors" of a coloring is the number of distinct values
used, not max+1.

Coloring file format: one `v <vertex> <color>` line per vertex, every
vertex exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphFormatError

VARIANT_CN = "cn"
VARIANT_ON = "on"
VARIANTS = (VARIANT_CN, VARIANT_ON)


@dataclass(frozen=True)
class Coloring:
    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.n:
            raise ValueError(
                f"coloring has {len(self.colors)} entries for {self.graph.n} vertices"
            )
        for v, c in enumerate(self.colors):
            if c < 0:
                raise ValueError(f"negative color {c} at vertex {v}")

    @property
    def colors_used(self) -> frozenset[int]:
        return frozenset(self.colors)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    failing_vertex: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def has_unique_color(coloring: Coloring, vertices: Iterable[int]) -> int | None:
    """Smallest color appearing exactly once among `vertices`, else None."""
    counts: dict[int, int] = {}
    for v in vertices:
        c = coloring.colors[v]
        counts[c] = counts.get(c, 0) + 1
    unique = [c for c, k in counts.items() if k == 1]
    return min(unique) if unique else None


def verify_cfcn(coloring: Coloring) -> VerifyResult:
    """Accept iff every closed neighborhood has a uniquely occurring color."""
    g = coloring.graph
    for v in range(g.n):
        if has_unique_color(coloring, g.closed_neighbors(v)) is None:
            return VerifyResult(False, v, f"no unique color in N[{v}]")
    return VerifyResult(True)


def verify_cfon(coloring: Coloring) -> VerifyResult:
    """Accept iff every open neighborhood has a uniquely occurring color.

    An isolated vertex is rejected outright: its open neighborhood is
    empty and cannot contain a unique color.
    """
    g = coloring.graph
    for v in range(g.n):
        nb = g.neighbors(v)
        if not nb:
            return VerifyResult(False, v, f"vertex {v} is isolated, N({v}) is empty")
        if has_unique_color(coloring, nb) is None:
            return VerifyResult(False, v, f"no unique color in N({v})")
    return VerifyResult(True)


def verify(coloring: Coloring, variant: str) -> VerifyResult:
    if variant == VARIANT_CN:
        return verify_cfcn(coloring)
    if variant == VARIANT_ON:
        return verify_cfon(coloring)
    raise ValueError(f"unknown variant {variant!r}")


def parse_coloring(text: str, g: Graph) -> Coloring:
    """Parse `v <vertex> <color>` lines; every vertex exactly once."""
    assigned: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] != "v" or len(fields) != 3:
            raise GraphFormatError("malformed line, expected 'v <vertex> <color>'", lineno)
        try:
            v, c = int(fields[1]), int(fields[2])
        except ValueError:
            raise GraphFormatError("non-integer field", lineno) from None
        if not (0 <= v < g.n):
            raise GraphFormatError(f"vertex {v} out of range for n={g.n}", lineno)
        if c < 0:
            raise GraphFormatError(f"negative color {c}", lineno)
        if v in assigned:
            raise GraphFormatError(f"vertex {v} colored twice", lineno)
        assigned[v] = c
    missing = [v for v in range(g.n) if v not in assigned]
    if missing:
        raise GraphFormatError(f"vertices without a color: {missing}")
    return Coloring(g, tuple(assigned[v] for v in range(g.n)))


def write_coloring(coloring: Coloring) -> str:
    lines = [f"v {v} {c}" for v, c in enumerate(coloring.colors)]
    return "\n".join(lines) + "\n"
