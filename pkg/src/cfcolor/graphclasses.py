"""Graph-class recognizers with certificates, and deletion modulators.

Recognized classes and their certificates:

  bipartite  - a two-sided partition with every edge crossing
  cluster    - the list of disjoint cliques (P3-free)
  split      - a (clique, independent) partition with the clique maximum
  threshold  - an isolated/universal elimination order
  cograph    - a modular decomposition tree without Prime nodes

Split recognition uses the degree-sequence characterization: with
degrees d_1 >= ... >= d_n and m = max{i : d_i >= i-1}, the graph is
split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, in which case the m
vertices of largest degree (ties broken by smaller id) form a maximum
clique and the rest are independent.

The modular decomposition is the simplified recursive one: a Parallel
node when the graph is disconnected, a Series node when the complement
is, otherwise a Prime node whose children are left as single leaves.
That is exact on cographs (the only consumers) -- a cograph never
reaches the Prime case at any level.

Modulators are found by bounded-depth branching on the first forbidden
induced subgraph in lexicographic vertex order: P3 (3-way) for cluster,
P4/C4/2K2 (4-way) for threshold.  Among all hitting sets of size at
most the budget the minimum-size one with the lexicographically
smallest sorted vertex tuple is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, complement, connected_components, induced_subgraph


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    independent: tuple[int, ...]


@dataclass(frozen=True)
class Modulator:
    vertices: tuple[int, ...]
    residual_class: str  # "cluster" or "threshold"


@dataclass(frozen=True)
class MDNode:
    kind: str  # "leaf" | "series" | "parallel" | "prime"
    vertices: tuple[int, ...]
    children: tuple["MDNode", ...] = ()

    @property
    def vertex(self) -> int:
        assert self.kind == "leaf"
        return self.vertices[0]


@dataclass(frozen=True)
class RecognitionReport:
    labels: frozenset[str]
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    cliques: tuple[tuple[int, ...], ...] | None = None
    split_partition: SplitPartition | None = None
    elimination_order: tuple[tuple[int, str], ...] | None = None
    md_tree: MDNode | None = None


def is_bipartite(g: Graph) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """BFS two-coloring; component roots (smallest ids) land on side A."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False, None
    a = tuple(v for v in range(g.n) if side[v] == 0)
    b = tuple(v for v in range(g.n) if side[v] == 1)
    return True, (a, b)


def is_cluster(g: Graph) -> tuple[bool, tuple[tuple[int, ...], ...] | None]:
    """Every connected component must be a clique."""
    comps = connected_components(g)
    for comp in comps:
        k = len(comp)
        for i in range(k):
            for j in range(i + 1, k):
                if not g.has_edge(comp[i], comp[j]):
                    return False, None
    return True, tuple(comps)


def is_split(g: Graph) -> tuple[bool, SplitPartition | None]:
    if g.n == 0:
        return True, SplitPartition((), ())
    degs = sorted(((g.degree(v), v) for v in range(g.n)), key=lambda t: (-t[0], t[1]))
    d = [t[0] for t in degs]
    m = 0
    for i in range(1, g.n + 1):
        if d[i - 1] >= i - 1:
            m = i
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return False, None
    clique = tuple(sorted(v for _, v in degs[:m]))
    independent = tuple(sorted(v for _, v in degs[m:]))
    # the characterization guarantees this partition is valid; check anyway
    for i, u in enumerate(clique):
        for w in clique[i + 1:]:
            assert g.has_edge(u, w), "degree characterization produced a non-clique"
    for i, u in enumerate(independent):
        for w in independent[i + 1:]:
            assert not g.has_edge(u, w), "degree characterization produced a non-stable set"
    return True, SplitPartition(clique, independent)


def is_threshold(g: Graph) -> tuple[bool, tuple[tuple[int, str], ...] | None]:
    """Repeatedly strip an isolated vertex, else a universal one (smallest id).

    The elimination order, replayed in reverse, is a construction
    sequence certificate.
    """
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    order: list[tuple[int, str]] = []
    while alive:
        isolated = sorted(v for v in alive if deg[v] == 0)
        if isolated:
            v, kind = isolated[0], "isolated"
        else:
            universal = sorted(v for v in alive if deg[v] == len(alive) - 1)
            if not universal:
                return False, None
            v, kind = universal[0], "universal"
        order.append((v, kind))
        alive.remove(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return True, tuple(order)


def replay_elimination(n: int, order: tuple[tuple[int, str], ...]) -> Graph:
    """Rebuild a graph from an elimination certificate (reverse = construction)."""
    present: list[int] = []
    edges: list[tuple[int, int]] = []
    for v, kind in reversed(order):
        if kind == "universal":
            edges.extend((v, u) for u in present)
        elif kind != "isolated":
            raise ValueError(f"unknown elimination tag {kind!r}")
        present.append(v)
    return Graph(n, edges)


def modular_decomposition(g: Graph) -> MDNode:
    def build(vertices: tuple[int, ...], sub: Graph, relabel_back: dict[int, int]) -> MDNode:
        if len(vertices) == 1:
            return MDNode("leaf", vertices)
        comps = connected_components(sub)
        if len(comps) > 1:
            kind = "parallel"
        else:
            comps = connected_components(complement(sub))
            kind = "series" if len(comps) > 1 else "prime"
        if kind == "prime":
            children = tuple(MDNode("leaf", (v,)) for v in vertices)
            return MDNode("prime", vertices, children)
        children = []
        for comp in comps:
            orig = tuple(sorted(relabel_back[v] for v in comp))
            csub, relabel = induced_subgraph(sub, comp)
            back = {new: relabel_back[old] for old, new in relabel.items()}
            children.append(build(orig, csub, back))
        children.sort(key=lambda node: node.vertices[0])
        return MDNode(kind, vertices, tuple(children))

    if g.n == 0:
        raise ValueError("modular decomposition of the empty graph is undefined")
    return build(tuple(range(g.n)), g, {v: v for v in range(g.n)})


def has_prime_node(node: MDNode) -> bool:
    if node.kind == "prime":
        return True
    return any(has_prime_node(c) for c in node.children)


def is_cograph(g: Graph) -> tuple[bool, MDNode | None]:
    if g.n == 0:
        return True, None
    tree = modular_decomposition(g)
    if has_prime_node(tree):
        return False, tree
    return True, tree


def recognize(g: Graph) -> RecognitionReport:
    labels = set()
    bip_ok, bipartition = is_bipartite(g)
    if bip_ok:
        labels.add("bipartite")
    clu_ok, cliques = is_cluster(g)
    if clu_ok:
        labels.add("cluster")
    spl_ok, partition = is_split(g)
    if spl_ok:
        labels.add("split")
    thr_ok, order = is_threshold(g)
    if thr_ok:
        labels.add("threshold")
    cog_ok, tree = is_cograph(g)
    if cog_ok:
        labels.add("cograph")
    return RecognitionReport(
        labels=frozenset(labels),
        bipartition=bipartition if bip_ok else None,
        cliques=cliques if clu_ok else None,
        split_partition=partition if spl_ok else None,
        elimination_order=order if thr_ok else None,
        md_tree=tree,
    )


def _first_induced_p3(g: Graph, removed: set[int]) -> tuple[int, int, int] | None:
    """Lexicographically first vertex triple inducing a path on three vertices."""
    alive = [v for v in range(g.n) if v not in removed]
    k = len(alive)
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                a, b, c = alive[i], alive[j], alive[l]
                e = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c)
                if e == 2:
                    return a, b, c
    return None


_THRESHOLD_OBSTRUCTIONS = ("P4", "C4", "2K2")


def _induced_4_obstruction(g: Graph, quad: tuple[int, int, int, int]) -> str | None:
    pairs = [
        (quad[i], quad[j]) for i in range(4) for j in range(i + 1, 4)
    ]
    present = [p for p in pairs if g.has_edge(*p)]
    k = len(present)
    deg = {v: 0 for v in quad}
    for u, v in present:
        deg[u] += 1
        deg[v] += 1
    counts = sorted(deg.values())
    if k == 2 and counts == [1, 1, 1, 1]:
        return "2K2"
    if k == 3 and counts == [1, 1, 2, 2]:
        return "P4"
    if k == 4 and counts == [2, 2, 2, 2]:
        return "C4"
    return None


def _first_threshold_obstruction(
    g: Graph, removed: set[int]
) -> tuple[int, int, int, int] | None:
    alive = [v for v in range(g.n) if v not in removed]
    k = len(alive)
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                for p in range(l + 1, k):
                    quad = (alive[i], alive[j], alive[l], alive[p])
                    if _induced_4_obstruction(g, quad) is not None:
                        return quad
    return None


def _branch_modulator(g: Graph, budget: int, finder, residual_class: str) -> Modulator | None:
    """Bounded-depth branching on forbidden induced subgraphs.

    Every inclusion-minimal hitting set of size <= budget appears as a
    leaf of the branching tree, so taking the best leaf by
    (size, sorted tuple) yields the minimum-size, lexicographically
    smallest modulator within the budget.
    """
    best: tuple[int, tuple[int, ...]] | None = None
    removed: set[int] = set()

    def rec(depth_left: int):
        nonlocal best
        obstruction = finder(g, removed)
        if obstruction is None:
            cand = (len(removed), tuple(sorted(removed)))
            if best is None or cand < best:
                best = cand
            return
        if depth_left == 0:
            return
        for v in obstruction:
            removed.add(v)
            rec(depth_left - 1)
            removed.remove(v)

    rec(budget)
    if best is None:
        return None
    return Modulator(best[1], residual_class)


def cluster_modulator(g: Graph, budget: int) -> Modulator | None:
    """Vertex set X, |X| <= budget, with G-X a disjoint union of cliques."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    return _branch_modulator(g, budget, _first_induced_p3, "cluster")


def threshold_modulator(g: Graph, budget: int) -> Modulator | None:
    """Vertex set X, |X| <= budget, with G-X a threshold graph."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    return _branch_modulator(g, budget, _first_threshold_obstruction, "threshold")


def validate_modulator(g: Graph, modulator: Modulator) -> bool:
    rest = [v for v in range(g.n) if v not in set(modulator.vertices)]
    sub, _ = induced_subgraph(g, rest)
    if modulator.residual_class == "cluster":
        return is_cluster(sub)[0]
    if modulator.residual_class == "threshold":
        return is_threshold(sub)[0]
    raise ValueError(f"unknown residual class {modulator.residual_class!r}")
