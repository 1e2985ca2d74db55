"""Exact conflict-free coloring by backtracking.

The search assigns colors to vertices 0..n-1 in id order with the usual
symmetry break: vertex i may only use colors 0..min(max_used+1, k-1).
Pruning hooks into constraint completion: the moment the last uncolored
member of some neighborhood receives a color, that neighborhood is
tested for a uniquely occurring color and the branch dies if none
exists.  A completed constraint can never regain a unique color later
(colors are only added, never removed, on the path to a full leaf), so
the prune is sound.

`find_unique_coloring` / `min_unique_coloring` work on an arbitrary
family of vertex sets; the CF-CN / CF-ON entry points instantiate them
with closed / open neighborhoods.  Both entry points refuse graphs above
a size guard (default 16 vertices) unless the limit is lifted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, SizeGuardError
from .coloring import VARIANT_CN, VARIANT_ON, Coloring, verify

DEFAULT_LIMIT = 16


@dataclass(frozen=True)
class OracleResult:
    chromatic: int | None
    witness: Coloring | None
    infeasible: bool = False


def find_unique_coloring(
    n: int, constraints: Sequence[Sequence[int]], k: int
) -> list[int] | None:
    """First k-coloring (in symmetry-broken order) where every constraint
    set has a unique color, or None.  Empty constraint sets make the
    instance infeasible."""
    if k <= 0:
        return None if n or constraints else []
    if any(len(s) == 0 for s in constraints):
        return None
    member_of: list[list[int]] = [[] for _ in range(n)]
    for ci, s in enumerate(constraints):
        for v in s:
            member_of[v].append(ci)
    remaining = [len(s) for s in constraints]
    colors = [-1] * n

    def constraint_ok(ci: int) -> bool:
        counts: dict[int, int] = {}
        for v in constraints[ci]:
            c = colors[v]
            counts[c] = counts.get(c, 0) + 1
        return any(cnt == 1 for cnt in counts.values())

    def extend(v: int, max_used: int) -> bool:
        if v == n:
            return True
        top = min(max_used + 1, k - 1)
        for c in range(top + 1):
            colors[v] = c
            ok = True
            for ci in member_of[v]:
                remaining[ci] -= 1
                if remaining[ci] == 0 and not constraint_ok(ci):
                    ok = False
            if ok and extend(v + 1, max(max_used, c)):
                return True
            for ci in member_of[v]:
                remaining[ci] += 1
            colors[v] = -1
        return False

    if extend(0, -1):
        return colors
    return None


def min_unique_coloring(
    n: int, constraints: Sequence[Sequence[int]], max_k: int
) -> tuple[int, list[int]] | None:
    """Smallest k <= max_k admitting a unique coloring, with a witness."""
    for k in range(1, max_k + 1):
        witness = find_unique_coloring(n, constraints, k)
        if witness is not None:
            return k, witness
    return None


def _neighborhood_constraints(g: Graph, variant: str) -> list[tuple[int, ...]]:
    if variant == VARIANT_CN:
        return [g.closed_neighbors(v) for v in range(g.n)]
    if variant == VARIANT_ON:
        return [g.neighbors(v) for v in range(g.n)]
    raise ValueError(f"unknown variant {variant!r}")


def _check_guard(g: Graph, limit: int | None) -> None:
    if limit is not None and g.n > limit:
        raise SizeGuardError(
            f"graph has {g.n} vertices, above the exhaustive-search limit {limit}"
        )


def exact_cf(
    g: Graph, variant: str, max_k: int | None = None, limit: int | None = DEFAULT_LIMIT
) -> OracleResult:
    """Minimum number of distinct colors for the variant, with a witness.

    CF-ON on a graph with an isolated vertex is infeasible at every k.
    n distinct colors always suffice otherwise, so the search is bounded.
    """
    _check_guard(g, limit)
    if variant == VARIANT_ON and any(g.degree(v) == 0 for v in range(g.n)):
        return OracleResult(None, None, infeasible=True)
    if g.n == 0:
        return OracleResult(0, Coloring(g, ()))
    cap = g.n if max_k is None else max_k
    found = min_unique_coloring(g.n, _neighborhood_constraints(g, variant), cap)
    if found is None:
        return OracleResult(None, None)
    k, colors = found
    witness = Coloring(g, tuple(colors))
    assert verify(witness, variant), "oracle witness failed verification"
    return OracleResult(k, witness)


def decide_cf(
    g: Graph, variant: str, k: int, limit: int | None = DEFAULT_LIMIT
) -> tuple[bool, Coloring | None]:
    """Does a conflict-free coloring with at most k distinct colors exist?"""
    _check_guard(g, limit)
    if k < 0:
        raise ValueError("k must be non-negative")
    if variant == VARIANT_ON and any(g.degree(v) == 0 for v in range(g.n)):
        return False, None
    if g.n == 0:
        return True, Coloring(g, ())
    colors = find_unique_coloring(g.n, _neighborhood_constraints(g, variant), k)
    if colors is None:
        return False, None
    witness = Coloring(g, tuple(colors))
    assert verify(witness, variant), "oracle witness failed verification"
    return True, witness
