"""Split-graph gadget tying proper k-colorability to conflict-free
open-neighborhood coloring with k+2 distinct colors.

From a source graph G on n vertices, first augment to G' = G plus two
universal vertices x and y.  The gadget H places all of V(G') into one
complete clique side and adds one independent vertex I_uv per edge uv of
G', adjacent to exactly u and v.  H is a split graph on 3n + m + 3
vertices.  Since the open neighborhood of I_uv is precisely {u, v}, a
conflict-free coloring must give u and v different colors, so H forces a
proper coloring of G' on the clique side; the dedicated vertices I_vx,
I_vy, I_xy pin x and y to two colors used nowhere else in V(G'), leaving
at most k of the k+2 colors for V(G).  Conversely a proper k-coloring of
G extends directly: x and y take the two extra colors and every I_uv
takes color k-1, which is never the lone color of an open neighborhood
it sits in.  For k >= 3 the equivalence makes the distinct-color
optimization on split graphs as hard as graph coloring — in contrast to
the closed-neighborhood variant, which on split graphs reduces to a
polynomial 2-versus-3 test.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .coloring import Coloring, VARIANT_ON, verify_cfon
from .oracle import DEFAULT_LIMIT, decide_cf


@dataclass(frozen=True)
class GadgetInstance:
    source: Graph
    k: int
    gprime: Graph  # source plus universal x, y
    graph: Graph  # the split gadget H
    clique: tuple[int, ...]  # V(G') inside H
    independent: tuple[int, ...]
    pair_of: tuple[tuple[int, int], ...]  # edge of G' behind each independent vertex

    @property
    def x(self) -> int:
        return self.source.n

    @property
    def y(self) -> int:
        return self.source.n + 1


def encode(g: Graph, k: int) -> GadgetInstance:
    """Build the gadget for `is G properly k-colorable` (k >= 3).

    Vertex numbering is deterministic: source vertices keep their ids,
    then x, then y, then one vertex per G'-edge in sorted edge order.
    """
    if k < 3:
        raise ValueError("the gadget needs k >= 3")
    if g.n < 1:
        raise ValueError("empty source graph")
    n = g.n
    x, y = n, n + 1
    prime_edges = sorted(
        list(g.edges)
        + [(v, x) for v in range(n)]
        + [(v, y) for v in range(n)]
        + [(x, y)]
    )
    gprime = Graph(n + 2, prime_edges)
    clique = tuple(range(n + 2))
    independent = tuple(range(n + 2, n + 2 + len(prime_edges)))
    edges = [(u, v) for u in clique for v in clique if u < v]
    for slot, (u, v) in zip(independent, prime_edges):
        edges.append((u, slot))
        edges.append((v, slot))
    return GadgetInstance(
        g,
        k,
        gprime,
        Graph(n + 2 + len(prime_edges), edges),
        clique,
        independent,
        tuple(prime_edges),
    )


def forward_coloring(inst: GadgetInstance, source: Coloring) -> Coloring:
    """Extend a proper k-coloring of the source to the whole gadget."""
    n, k = inst.source.n, inst.k
    if source.graph != inst.source:
        raise ValueError("coloring belongs to a different graph")
    if not all(0 <= c < k for c in source.colors):
        raise ValueError("source colors must lie in 0..k-1")
    for u, v in inst.source.edges:
        if source.colors[u] == source.colors[v]:
            raise ValueError(f"edge {u}-{v} is monochromatic")
    colors = list(source.colors) + [k, k + 1]
    colors += [k - 1] * len(inst.independent)
    coloring = Coloring(inst.graph, tuple(colors))
    assert verify_cfon(coloring), "gadget extension must be conflict-free"
    return coloring


def decode(inst: GadgetInstance, ch: Coloring) -> Coloring:
    """Restrict a conflict-free gadget coloring to the source vertices.

    Accepts only a verified coloring of the gadget with at most k+2
    distinct colors.  The edge vertices force both endpoints of every
    G'-edge apart and pin x and y to colors absent from the source, so
    the restriction is proper and spans at most k values; either failing
    would falsify the reduction and raises."""
    if ch.graph != inst.graph:
        raise ValueError("coloring belongs to a different graph")
    if not verify_cfon(ch):
        raise ValueError("not a conflict-free open-neighborhood coloring of the gadget")
    if len(set(ch.colors)) > inst.k + 2:
        raise ValueError(f"more than {inst.k + 2} distinct colors")
    restriction = ch.colors[: inst.source.n]
    for u, v in inst.source.edges:
        if restriction[u] == restriction[v]:
            raise ValueError("restriction is not a proper coloring")
    if len(set(restriction)) > inst.k:
        raise ValueError("restriction uses more than k colors")
    return Coloring(inst.source, restriction)


def properly_colorable(g: Graph, k: int) -> tuple[int, ...] | None:
    """Plain backtracking proper coloring, independent of the main oracle."""
    colors = [-1] * g.n

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(k):
            if all(colors[u] != c for u in g.neighbors(v) if colors[u] != -1):
                colors[v] = c
                if extend(v + 1):
                    return True
                colors[v] = -1
        return False

    return tuple(colors) if extend(0) else None


@dataclass(frozen=True)
class CrossReport:
    instance: GadgetInstance
    source_yes: bool
    gadget_yes: bool
    decoded: Coloring | None

    @property
    def match(self) -> bool:
        return self.source_yes == self.gadget_yes


def cross_validate(g: Graph, k: int, limit: int | None = DEFAULT_LIMIT) -> CrossReport:
    """Compare proper k-colorability of g against conflict-free
    (k+2)-colorability of its gadget; both sides produce and check
    witnesses when they answer yes.

    The gadget has 3n + m + 3 vertices, so the default 16-vertex
    exhaustive-search guard only admits sources with up to 3 vertices;
    pass limit=None (or a larger limit) to validate bigger sources."""
    inst = encode(g, k)
    source = properly_colorable(g, k)
    if source is not None:
        forward_coloring(inst, Coloring(g, source))  # asserts conflict-freeness
    gadget_yes, witness = decide_cf(inst.graph, VARIANT_ON, k + 2, limit=limit)
    decoded = decode(inst, witness) if gadget_yes else None
    return CrossReport(inst, source is not None, gadget_yes, decoded)
