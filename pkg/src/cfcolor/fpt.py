"""Reductions driven by a small deletion set: an exact kernel for a
cluster modulator and an additive approximation for a threshold modulator.

Kernelization (cluster modulator X, |X| = d).  Vertices of one residual
clique sharing the same modulator adjacency Y are true twins, so at most
cap = k+1 (closed variant) or 2k+1 (open variant) per class matter: any
satisfying assignment can be permuted within the class so that every
color that is the unique color of some neighborhood keeps a
representative among the smallest cap members.  Whole cliques with
identical capped type-count vectors are likewise interchangeable, and
d+1 of each such mega-type suffice because the unique-color providers of
the d modulator vertices touch at most d cliques.  Both deletions are
recorded with enough provenance to lift a kernel coloring back: deleted
cliques copy the coloring of a same-mega-type survivor that provides no
modulator vertex's unique color, and deleted twins take a color already
duplicated (closed) or tripled (open) among their kept siblings, which
by the cap's pigeonhole always exists.

Approximation (threshold modulator X).  Only the modulator's own
neighborhood constraints plus those of singleton residual components are
solved exactly — on the subgraph spanned by X and N(X) with same-class
vertices capped at k+1 — and the smallest feasible color count there is
a lower bound for the whole graph.  A threshold graph has no pair of
disjoint edges, so at most one residual component carries an edge; that
component is itself a connected threshold graph and has an internal
universal vertex, and recoloring it (plus, for open neighborhoods, one
further member) with fresh colors serves every neighborhood constraint
inside the component.  The additive cost is therefore at most one color
for closed neighborhoods and two for open ones.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import Graph, connected_components, induced_subgraph
from .coloring import Coloring, VARIANT_CN, VARIANT_ON, verify
from .oracle import DEFAULT_LIMIT, decide_cf, find_unique_coloring
from .graphclasses import Modulator, validate_modulator
from .polysolve import (
    EXACT,
    UPPER_BOUND,
    SelfCheckError,
    SolveOutcome,
    _residual_cliques,
    checked_outcome,
    lemma1_cfcn,
    lemma1_cfon,
)

MegaType = tuple[tuple[int, int], ...]


def rule1_cap(k: int, variant: str) -> int:
    """Kept twins per (clique, modulator-adjacency) class."""
    return k + 1 if variant == VARIANT_CN else 2 * k + 1


def kernel_size_bound(d: int, k: int, variant: str) -> int:
    """Vertices surviving both rules: d modulator vertices plus at most
    d+1 cliques per capped type-count vector, each of at most 2^d
    classes of at most cap vertices."""
    cap = rule1_cap(k, variant)
    return d + (cap + 1) ** (2**d) * (d + 1) * (2**d) * cap


@dataclass(frozen=True)
class KernelInstance:
    graph: Graph
    x: tuple[int, ...]  # kernel ids of the modulator vertices
    k: int
    variant: str
    kept: tuple[int, ...]  # kept[i] = original id of kernel vertex i
    deleted_vertices: tuple[tuple[int, int, int], ...]  # (v, clique rep, Y-mask)
    deleted_cliques: tuple[tuple[int, int], ...]  # (clique rep, survivor rep)
    cliques_after_rule1: tuple[tuple[int, ...], ...]  # original ids
    tau: tuple[tuple[int, MegaType], ...]  # clique rep -> capped type counts
    short_circuit: SolveOutcome | None = None


@dataclass(frozen=True)
class KernelDecision:
    yes: bool
    witness: Coloring | None
    kernel: KernelInstance
    note: str = ""


def provenance(inst: KernelInstance) -> list[str]:
    """One `dv <vertex> <clique-rep> <Y-bitmask>` line per twin deletion
    and one `dc <clique-rep> <survivor-rep>` line per clique deletion."""
    lines = [f"dv {v} {rep} {y}" for v, rep, y in inst.deleted_vertices]
    lines += [f"dc {rep} {srep}" for rep, srep in inst.deleted_cliques]
    return lines


def _check_modulator(g: Graph, m: Modulator, expected: str) -> tuple[int, ...]:
    if g.n == 0:
        raise ValueError("empty graph")
    if m.residual_class != expected or not validate_modulator(g, m):
        raise ValueError(f"modulator residual is not a {expected} graph")
    return tuple(sorted(m.vertices))


def _type_mask(g: Graph, x_index: dict[int, int], v: int) -> int:
    return sum(1 << x_index[u] for u in g.neighbors(v) if u in x_index)


@dataclass(frozen=True)
class CliqueTypes:
    """Partition of one residual clique by modulator adjacency.

    ``types`` pairs each adjacency bitmask Y (bit i set iff adjacent to
    the i-th smallest modulator vertex) with the sorted clique members
    whose modulator neighborhood is exactly Y.
    """

    clique: tuple[int, ...]
    types: tuple[tuple[int, tuple[int, ...]], ...]

    def vector(self, cap: int | None = None) -> MegaType:
        """Per-type member counts, each clamped to ``cap`` when given."""
        return tuple(
            (y, len(vs) if cap is None else min(len(vs), cap))
            for y, vs in self.types
        )


def compute_types(g: Graph, m: Modulator) -> tuple[CliqueTypes, ...]:
    """Split every residual clique into its modulator-adjacency classes.

    Classes are disjoint and cover the clique; two members of the same
    class are true twins in g, which is what both reduction rules
    exploit.
    """
    x = _check_modulator(g, m, "cluster")
    x_index = {xv: i for i, xv in enumerate(x)}
    out = []
    for clique in _residual_cliques(g, x):
        by_type: dict[int, list[int]] = {}
        for v in clique:  # clique is sorted, so classes stay sorted
            by_type.setdefault(_type_mask(g, x_index, v), []).append(v)
        out.append(
            CliqueTypes(
                clique,
                tuple((y, tuple(vs)) for y, vs in sorted(by_type.items())),
            )
        )
    return tuple(out)


def _reduce(g: Graph, m: Modulator, k: int, variant: str) -> KernelInstance:
    x = _check_modulator(g, m, "cluster")
    if k < 1:
        raise ValueError("need k >= 1")
    if variant == VARIANT_ON and any(g.degree(v) == 0 for v in range(g.n)):
        raise ValueError("isolated vertex: no open-neighborhood coloring exists")
    d = len(x)

    # above the construction threshold the answer is yes outright
    if variant == VARIANT_CN and k >= d + 2:
        sc = lemma1_cfcn(g, m)
    elif variant == VARIANT_ON and k >= 2 * d + 2:
        sc = lemma1_cfon(g, m)
    else:
        sc = None
    if sc is not None and sc.colors_used <= k:
        return KernelInstance(
            Graph(0), (), k, variant, (), (), (), (), (), short_circuit=sc
        )

    x_index = {xv: i for i, xv in enumerate(x)}
    cap = rule1_cap(k, variant)
    deleted_vertices: list[tuple[int, int, int]] = []
    post1: list[tuple[int, ...]] = []
    for ct in compute_types(g, m):
        keep: list[int] = []
        for y, members in ct.types:
            keep.extend(members[:cap])
            deleted_vertices.extend((v, ct.clique[0], y) for v in members[cap:])
        post1.append(tuple(sorted(keep)))

    tau: list[tuple[int, MegaType]] = []
    groups: dict[MegaType, list[tuple[int, ...]]] = {}
    for clique in post1:
        counts = Counter(_type_mask(g, x_index, v) for v in clique)
        mt: MegaType = tuple(sorted(counts.items()))
        tau.append((clique[0], mt))
        groups.setdefault(mt, []).append(clique)

    deleted_cliques: list[tuple[int, int]] = []
    kept_cliques: list[tuple[int, ...]] = []
    for group in groups.values():  # groups arrive ordered by first clique rep
        kept_cliques.extend(group[: d + 1])
        deleted_cliques.extend((c[0], group[0][0]) for c in group[d + 1 :])

    kept = tuple(sorted(set(x) | {v for c in kept_cliques for v in c}))
    kernel, relabel = induced_subgraph(g, kept)
    return KernelInstance(
        kernel,
        tuple(relabel[xv] for xv in x),
        k,
        variant,
        kept,
        tuple(deleted_vertices),
        tuple(deleted_cliques),
        tuple(post1),
        tuple(tau),
    )


def reduce_cfcn(g: Graph, m: Modulator, k: int) -> KernelInstance:
    return _reduce(g, m, k, VARIANT_CN)


def reduce_cfon(g: Graph, m: Modulator, k: int) -> KernelInstance:
    return _reduce(g, m, k, VARIANT_ON)


def _lift(g: Graph, inst: KernelInstance, kernel_coloring: Coloring) -> Coloring:
    """Extend a kernel coloring to the full graph, deleted cliques first."""
    x = tuple(inst.kept[i] for i in inst.x)
    x_index = {xv: i for i, xv in enumerate(x)}
    colors: dict[int, int] = {
        orig: kernel_coloring.colors[i] for i, orig in enumerate(inst.kept)
    }
    post1_by_rep = {c[0]: c for c in inst.cliques_after_rule1}
    tau_by_rep = dict(inst.tau)
    deleted_reps = {rep for rep, _ in inst.deleted_cliques}
    kept_reps = [c[0] for c in inst.cliques_after_rule1 if c[0] not in deleted_reps]

    # cliques providing the unique color of some modulator neighborhood
    # must not be copied; at most d are marked, and d+1 survivors of each
    # mega-type were kept
    marked: set[int] = set()
    rep_of_vertex = {
        v: c[0] for c in inst.cliques_after_rule1 for v in c
    }
    kc = kernel_coloring.colors
    for xk in inst.x:
        nb = inst.graph.closed_neighbors(xk) if inst.variant == VARIANT_CN else inst.graph.neighbors(xk)
        counts = Counter(kc[u] for u in nb)
        unique = sorted(c for c, cnt in counts.items() if cnt == 1)
        if not unique:
            raise SelfCheckError("kernel witness leaves a modulator vertex unserved")
        provider = next(u for u in nb if kc[u] == unique[0])
        orig = inst.kept[provider]
        if orig in rep_of_vertex:
            marked.add(rep_of_vertex[orig])

    def class_members(rep: int, y: int) -> list[int]:
        return [v for v in post1_by_rep[rep] if _type_mask(g, x_index, v) == y]

    for rep, _srep in inst.deleted_cliques:
        mt = tau_by_rep[rep]
        survivor = next(
            r for r in kept_reps if tau_by_rep[r] == mt and r not in marked
        )
        for y, _count in mt:
            for dv, sv in zip(class_members(rep, y), class_members(survivor, y)):
                colors[dv] = colors[sv]

    need = 2 if inst.variant == VARIANT_CN else 3
    for v, rep, y in inst.deleted_vertices:
        counts = Counter(colors[u] for u in class_members(rep, y))
        colors[v] = min(c for c, cnt in counts.items() if cnt >= need)

    return Coloring(g, tuple(colors[v] for v in range(g.n)))


def solve_via_kernel(
    g: Graph,
    m: Modulator,
    k: int,
    variant: str,
    limit: int | None = DEFAULT_LIMIT,
) -> KernelDecision:
    """Decide k-colorability through the kernel and lift any witness."""
    inst = _reduce(g, m, k, variant)
    if inst.short_circuit is not None:
        return KernelDecision(
            True,
            inst.short_circuit.coloring,
            inst,
            note="threshold on k met; constructive witness",
        )
    yes, kernel_witness = decide_cf(inst.graph, variant, k, limit=limit)
    if not yes:
        return KernelDecision(False, None, inst, note="kernel infeasible")
    lifted = _lift(g, inst, kernel_witness)
    if not verify(lifted, variant):
        raise SelfCheckError("lifted coloring failed verification")
    if len(set(lifted.colors)) > k:
        raise SelfCheckError("lifted coloring exceeds the color budget")
    return KernelDecision(True, lifted, inst, note="lifted kernel witness")


# --- threshold-modulator approximation -------------------------------------


def _component_universal(g: Graph, comp: tuple[int, ...]) -> int:
    """Smallest member adjacent to all others; exists in any connected
    threshold graph."""
    for v in comp:
        if all(g.has_edge(v, u) for u in comp if u != v):
            return v
    raise SelfCheckError("residual component has no universal vertex")


def _threshold_base(g: Graph, variant: str) -> SolveOutcome:
    """The modulator-free case: the graph itself is threshold."""
    if variant == VARIANT_CN:
        colors = [0] * g.n
        if g.m == 0:
            return checked_outcome(Coloring(g, tuple(colors)), lambda c: verify(c, variant), EXACT)
        u = min(range(g.n), key=lambda v: (-g.degree(v), v))
        colors[u] = 1
        # a lone 1 on a maximum-degree vertex sits in every non-trivial
        # closed neighborhood, and 2 colors are necessary once m >= 1
        return checked_outcome(
            Coloring(g, tuple(colors)), lambda c: verify(c, variant), EXACT
        )
    colors = [0] * g.n
    u = min(range(g.n), key=lambda v: (-g.degree(v), v))
    w = min(v for v in range(g.n) if v != u)
    colors[u] = 1
    colors[w] = 2
    return checked_outcome(Coloring(g, tuple(colors)), lambda c: verify(c, variant), UPPER_BOUND)


def _approx(g: Graph, m: Modulator, variant: str) -> SolveOutcome:
    x = _check_modulator(g, m, "threshold")
    if variant == VARIANT_ON and any(g.degree(v) == 0 for v in range(g.n)):
        raise ValueError("isolated vertex: no open-neighborhood coloring exists")
    if not x:
        return _threshold_base(g, variant)
    x_index = {xv: i for i, xv in enumerate(x)}

    residual = [v for v in range(g.n) if v not in x_index]
    sub, _ = induced_subgraph(g, residual)
    comps = [tuple(residual[i] for i in c) for c in connected_components(sub)]
    singles = [c[0] for c in comps if len(c) == 1]
    bigs = [c for c in comps if len(c) >= 2]

    # class key for interchangeable non-modulator vertices of the core:
    # modulator adjacency plus whether the vertex carries its own
    # singleton-component constraint
    single_set = set(singles)
    hverts = sorted(set(x) | {u for xv in x for u in g.neighbors(xv)})
    classes: dict[tuple[int, bool], list[int]] = {}
    for v in hverts:
        if v in x_index:
            continue
        key = (_type_mask(g, x_index, v), v in single_set)
        classes.setdefault(key, []).append(v)

    sol = None
    for k in range(1, g.n + 2):
        cap = k + 1
        kept = sorted(
            set(x) | {v for members in classes.values() for v in members[:cap]}
        )
        kept_set = set(kept)
        relabel = {v: i for i, v in enumerate(kept)}
        csets: list[tuple[int, ...]] = []
        for xv in x:
            nb = [u for u in g.neighbors(xv) if u in kept_set]
            if variant == VARIANT_CN:
                nb.append(xv)
            csets.append(tuple(sorted(relabel[u] for u in nb)))
        for v in singles:
            if v not in kept_set:
                continue
            nb = list(g.neighbors(v))  # entirely inside X
            if variant == VARIANT_CN:
                nb.append(v)
            elif not nb:
                continue
            csets.append(tuple(sorted(relabel[u] for u in nb)))
        witness = find_unique_coloring(len(kept), csets, k)
        if witness is not None:
            sol = (k, kept, witness)
            break
    assert sol is not None, "all-distinct coloring satisfies every constraint"
    kstar, kept, witness = sol

    colors = [0] * g.n  # smallest used color fills the unconstrained rest
    for i, v in enumerate(kept):
        colors[v] = witness[i]
    kept_set = set(kept)
    need = 2
    for members in classes.values():
        kept_members = [v for v in members if v in kept_set]
        dropped = [v for v in members if v not in kept_set]
        if not dropped:
            continue
        counts = Counter(colors[v] for v in kept_members)
        dup = min(c for c, cnt in counts.items() if cnt >= need)
        for v in dropped:
            colors[v] = dup

    # two residual components each holding an edge would induce a pair of
    # disjoint edges, impossible in a threshold graph
    assert len(bigs) <= 1
    fresh = kstar
    for comp in bigs:
        u = _component_universal(g, comp)
        colors[u] = fresh
        fresh += 1
        if variant == VARIANT_ON:
            w = min(v for v in comp if v != u)
            colors[w] = fresh
            fresh += 1

    return checked_outcome(
        Coloring(g, tuple(colors)),
        lambda c: verify(c, variant),
        UPPER_BOUND,
        note=f"core optimum {kstar}",
    )


def approx_cfcn_threshold(g: Graph, m: Modulator) -> SolveOutcome:
    """Closed-neighborhood coloring within one color of the optimum."""
    return _approx(g, m, VARIANT_CN)


def approx_cfon_threshold(g: Graph, m: Modulator) -> SolveOutcome:
    """Open-neighborhood coloring within two colors of the optimum."""
    return _approx(g, m, VARIANT_ON)
