"""Polynomial-time conflict-free coloring constructions.

Four families:

* bipartite closed-neighborhood coloring by sides (2 colors, exact);
* split-graph closed-neighborhood coloring with a complete 2-vs-3
  decision (exact — see the case analysis in ``solve_split_cfcn``);
* cograph colorings from the modular decomposition tree (at most 3
  colors; not always minimum, so flagged upper-bound-only);
* the modulator constructions for graphs whose residual G-X is a
  cluster graph: d+2 colors for closed neighborhoods, 2d+2 for open
  neighborhoods (with one documented degenerate corner).

Every construction re-verifies its own output before returning; a
verifier rejection here is an internal defect, reported as
``SelfCheckError`` rather than a silent bad answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, connected_components, induced_subgraph
from .coloring import (
    VARIANT_CN,
    VARIANT_ON,
    Coloring,
    verify_cfcn,
    verify_cfon,
)
from .graphclasses import (
    Modulator,
    MDNode,
    SplitPartition,
    has_prime_node,
    is_bipartite,
    is_split,
    validate_modulator,
)

EXACT = "exact"
UPPER_BOUND = "upper-bound-only"


class SelfCheckError(RuntimeError):
    """A solver emitted a coloring its own verifier rejects."""


@dataclass(frozen=True)
class SolveOutcome:
    coloring: Coloring
    colors_used: int
    optimality: str
    note: str = ""


def checked_outcome(coloring: Coloring, verifier, optimality: str, note: str = "") -> SolveOutcome:
    verdict = verifier(coloring)
    if not verdict:
        raise SelfCheckError(
            f"internal defect: vertex {verdict.failing_vertex} fails ({verdict.reason})"
        )
    return SolveOutcome(coloring, coloring.num_colors, optimality, note)


def _universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def solve_bipartite_cfcn(g: Graph, bipartition: tuple[tuple[int, ...], tuple[int, ...]]) -> SolveOutcome:
    """Color side A with 0 and side B with 1; exact for any bipartite
    graph with an edge (a 1-coloring dies on any edge's closed
    neighborhood, and in the side coloring each vertex's own color is
    unique within N[v])."""
    a, b = (frozenset(bipartition[0]), frozenset(bipartition[1]))
    if a & b or (a | b) != frozenset(range(g.n)):
        raise ValueError("bipartition must partition the vertex set")
    for u, v in g.edges:
        if (u in a) == (v in a):
            raise ValueError(f"edge {u}-{v} lies inside one side of the bipartition")
    if g.m == 0:
        raise ValueError("bipartite coloring needs at least one edge")
    coloring = Coloring(g, tuple(0 if v in a else 1 for v in range(g.n)))
    return checked_outcome(coloring, verify_cfcn, EXACT)


def _split_two_condition(g: Graph, clique: tuple[int, ...], independent: tuple[int, ...]) -> bool:
    """A clique-0 / independent-1 coloring works iff the clique is a
    single vertex or every clique vertex has exactly one independent
    neighbor."""
    if len(clique) == 1:
        return True
    iset = set(independent)
    return all(sum(1 for u in g.neighbors(v) if u in iset) == 1 for v in clique)


def _split_partition_candidates(g: Graph, p: SplitPartition):
    """The canonical partition plus every valid single-vertex swap."""
    c, i = list(p.clique), list(p.independent)
    cset, iset = set(c), set(i)
    yield tuple(c), tuple(i)
    for v in c:
        if not any(u in iset for u in g.neighbors(v)):
            yield tuple(x for x in c if x != v), tuple(sorted(i + [v]))
    for w in i:
        if all(g.has_edge(w, v) for v in c):
            yield tuple(sorted(c + [w])), tuple(x for x in i if x != w)
    for v in c:
        rest_c = [x for x in c if x != v]
        for w in i:
            rest_i = [x for x in i if x != w]
            if all(g.has_edge(w, x) for x in rest_c) and not any(
                u in iset and u != w for u in g.neighbors(v)
            ):
                yield tuple(sorted(rest_c + [w])), tuple(sorted(rest_i + [v]))


def solve_split_cfcn(g: Graph, p: SplitPartition) -> SolveOutcome:
    """Exact 2-vs-3 decision for split graphs with an edge.

    Case analysis behind the exactness claim (connected, no universal
    vertex): with maximum-clique side C of size >= 3, any valid
    2-coloring must color C monochromatically and the independent side
    with the other color, forcing the one-independent-neighbor
    condition — so testing the canonical partition settles it.  If the
    maximum clique has size <= 2 the graph is triangle-free, hence
    bipartite, and the side coloring gives 2.  Otherwise 3 colors are
    always enough: one clique vertex 0, the rest of the clique 1, the
    independent side 2.
    """
    cset, iset = set(p.clique), set(p.independent)
    if cset & iset or (cset | iset) != set(range(g.n)):
        raise ValueError("partition must cover the vertex set exactly once")
    if any(not g.has_edge(u, v) for u in p.clique for v in p.clique if u < v):
        raise ValueError("clique side is not a clique")
    if any(g.has_edge(u, v) for u in p.independent for v in p.independent if u < v):
        raise ValueError("independent side is not independent")
    if g.m == 0:
        raise ValueError("split coloring needs at least one edge")

    universal = _universal_vertices(g)
    if universal:
        u = universal[0]
        coloring = Coloring(g, tuple(1 if v == u else 0 for v in range(g.n)))
        return checked_outcome(coloring, verify_cfcn, EXACT)

    # probe the canonical maximum-clique partition (recomputed, so a
    # non-canonical input partition cannot weaken the decision)
    ok, canonical = is_split(g)
    assert ok and canonical is not None
    for cand_c, cand_i in _split_partition_candidates(g, canonical):
        if cand_c and _split_two_condition(g, cand_c, cand_i):
            in_c = set(cand_c)
            coloring = Coloring(g, tuple(0 if v in in_c else 1 for v in range(g.n)))
            return checked_outcome(coloring, verify_cfcn, EXACT)

    bip, sides = is_bipartite(g)
    if bip:
        assert sides is not None
        a = set(sides[0])
        coloring = Coloring(g, tuple(0 if v in a else 1 for v in range(g.n)))
        return checked_outcome(
            coloring, verify_cfcn, EXACT, note="triangle-free split graph: side coloring"
        )

    v0 = min(canonical.clique)
    colors = [2] * g.n
    for v in canonical.clique:
        colors[v] = 1
    colors[v0] = 0
    coloring = Coloring(g, tuple(colors))
    return checked_outcome(coloring, verify_cfcn, EXACT)


def solve_cograph(g: Graph, t: MDNode, variant: str) -> SolveOutcome:
    """Color via the modular decomposition: one vertex of the first
    root module 0, one vertex of the remaining modules 1, everything
    else 2.  The two specially colored vertices carry globally unique
    colors and the series root joins them to every vertex, so both
    variants verify.  Not always minimum, hence upper-bound-only
    (except the universal-vertex shortcut for closed neighborhoods)."""
    if has_prime_node(t):
        raise ValueError("decomposition tree has a prime node (not a cograph)")
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        if variant == VARIANT_ON:
            raise ValueError("single vertex is isolated: no open-neighborhood coloring")
        return checked_outcome(Coloring(g, (0,)), verify_cfcn, EXACT)
    if t.kind != "series":
        raise ValueError("root is not a series node (graph disconnected?)")

    if variant == VARIANT_CN:
        universal = _universal_vertices(g)
        if universal:
            u = universal[0]
            coloring = Coloring(g, tuple(1 if v == u else 0 for v in range(g.n)))
            return checked_outcome(coloring, verify_cfcn, EXACT)

    first = t.children[0].vertices
    rest = [v for child in t.children[1:] for v in child.vertices]
    colors = [2] * g.n
    colors[min(first)] = 0
    colors[min(rest)] = 1
    coloring = Coloring(g, tuple(colors))
    verifier = verify_cfcn if variant == VARIANT_CN else verify_cfon
    return checked_outcome(coloring, verifier, UPPER_BOUND)


def _residual_cliques(g: Graph, x: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Components of G-X in original vertex ids, smallest member first."""
    xs = set(x)
    keep = [v for v in range(g.n) if v not in xs]
    sub, _ = induced_subgraph(g, keep)
    return [tuple(keep[i] for i in comp) for comp in connected_components(sub)]


def lemma1_cfcn(g: Graph, m: Modulator) -> SolveOutcome:
    """d+2-color closed-neighborhood construction for a cluster
    modulator X: per residual clique its smallest vertex 0 and the rest
    1, plus one private color from {2..d+1} per modulator vertex."""
    if m.residual_class != "cluster" or not validate_modulator(g, m):
        raise ValueError("modulator residual is not a cluster graph")
    x = tuple(sorted(m.vertices))
    colors = [0] * g.n
    for idx, xv in enumerate(x):
        colors[xv] = 2 + idx
    for clique in _residual_cliques(g, x):
        for v in clique[1:]:
            colors[v] = 1
    coloring = Coloring(g, tuple(colors))
    return checked_outcome(coloring, verify_cfcn, UPPER_BOUND)


def lemma1_cfon(g: Graph, m: Modulator) -> SolveOutcome:
    """2d+2-color open-neighborhood construction for a cluster
    modulator X.

    Steps: residual all 0; X gets private colors 1..d; any x whose open
    neighborhood is monochromatic 0 recolors its smallest neighbor with
    a fresh color from {d+1..2d}; any residual clique still entirely 0
    recolors one member with 2d+1 — preferring a member with a modulator
    neighbor, whose presence keeps that member's own neighborhood
    conflict-free.  A clique forming a whole component has no such
    member; if the 2d+1 vertex is then left staring at an all-0
    neighborhood of size >= 2, a second member takes 2d+2.  That repair
    exceeds 2d+2 distinct colors only in degenerate cases (d=0 single
    clique uses max(2d+2, 3) = 3) and flags the outcome.
    """
    if m.residual_class != "cluster" or not validate_modulator(g, m):
        raise ValueError("modulator residual is not a cluster graph")
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise ValueError("isolated vertex: no open-neighborhood coloring exists")
    x = tuple(sorted(m.vertices))
    d = len(x)
    colors = [0] * g.n
    for idx, xv in enumerate(x):
        colors[xv] = 1 + idx

    next_fresh = d + 1
    for xv in x:
        nb = g.neighbors(xv)
        if nb and all(colors[u] == 0 for u in nb):
            colors[min(nb)] = next_fresh
            next_fresh += 1

    note = ""
    xs = set(x)
    for clique in _residual_cliques(g, x):
        if any(colors[v] != 0 for v in clique):
            continue
        with_x = [v for v in clique if any(u in xs for u in g.neighbors(v))]
        u = min(with_x) if with_x else min(clique)
        colors[u] = 2 * d + 1
        nb = g.neighbors(u)
        if len(nb) >= 2 and all(colors[w] == 0 for w in nb):
            colors[min(nb)] = 2 * d + 2
            note = "isolated-clique corner: second recolor with color 2d+2"

    coloring = Coloring(g, tuple(colors))
    return checked_outcome(coloring, verify_cfon, UPPER_BOUND, note=note)
