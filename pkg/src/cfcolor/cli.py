"""Command-line front end for the conflict-free coloring toolkit.

Every subcommand prints a machine-parseable run report, one `key: value`
line per fact: the command echo, a sha256 digest per input file, the
result summary, elapsed milliseconds, and the paths of any artifacts
written.  Exit codes are uniform across subcommands:

    0  success / valid coloring / YES decision
    1  invalid coloring / NO decision / nothing found / infeasible
    2  usage, file format, or I/O error
    3  size-guard refusal (instance too large for an exhaustive step)
    4  self-verification failure (a solver or reduction contradicted
       its own checker -- an internal defect, never silent)

The `solve --strategy auto` dispatch is deterministic: an exact
class-specific solver when the input is recognized (split CF-CN, then
bipartite CF-CN, then cograph, then interval when a representation is
supplied), otherwise the cheapest computed modulator drives the
parameterized route (cluster -> few-color upper bound, threshold ->
additive approximation; ties prefer cluster), otherwise the exact
oracle when the instance fits under the guard, otherwise refusal.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .graph import Graph, GraphFormatError, SizeGuardError, parse_graph, write_graph
from .coloring import (
    Coloring,
    VARIANT_CN,
    VARIANT_ON,
    VARIANTS,
    parse_coloring,
    verify,
    write_coloring,
)
from .oracle import DEFAULT_LIMIT, decide_cf, exact_cf
from .graphclasses import (
    MDNode,
    Modulator,
    cluster_modulator,
    is_bipartite,
    is_cograph,
    is_split,
    recognize,
    threshold_modulator,
)
from .polysolve import (
    EXACT,
    SelfCheckError,
    SolveOutcome,
    lemma1_cfcn,
    lemma1_cfon,
    solve_bipartite_cfcn,
    solve_cograph,
    solve_split_cfcn,
)
from .interval import parse_intervals, write_intervals, cfcn_interval, cfon_interval
from .fpt import (
    approx_cfcn_threshold,
    approx_cfon_threshold,
    kernel_size_bound,
    provenance,
    reduce_cfcn,
    reduce_cfon,
    solve_via_kernel,
)
from .hardness import cross_validate, encode
from .generators import GenSpec, gen

DEFAULT_BUDGET = 6


@dataclass
class RunReport:
    """Ordered `key: value` lines; rendered once per process."""

    lines: list[tuple[str, str]] = field(default_factory=list)

    def add(self, key: str, value) -> None:
        self.lines.append((key, str(value)))

    def render(self) -> str:
        return "\n".join(f"{key}: {value}" for key, value in self.lines)


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _load_graph(path_str: str, report: RunReport) -> Graph:
    path = Path(path_str)
    text = path.read_text()
    report.add("input_graph", f"{path} sha256={_digest(path)}")
    return parse_graph(text)


def _load_coloring(path_str: str, g: Graph, report: RunReport) -> Coloring:
    path = Path(path_str)
    text = path.read_text()
    report.add("input_coloring", f"{path} sha256={_digest(path)}")
    return parse_coloring(text, g)


def _load_intervals(path_str: str, g: Graph, report: RunReport):
    path = Path(path_str)
    text = path.read_text()
    report.add("input_intervals", f"{path} sha256={_digest(path)}")
    return parse_intervals(text, g.n)


def _emit(path: Path, text: str, report: RunReport, key: str) -> None:
    path.write_text(text)
    report.add(key, str(path))


def _stem(args) -> Path:
    if getattr(args, "out", None):
        return Path(args.out)
    return Path(args.graph).with_suffix("")


def _limit(value: int) -> int | None:
    return None if value <= 0 else value


def _tree_sexp(node: MDNode) -> str:
    if node.kind == "leaf":
        return str(node.vertex)
    return "(" + " ".join([node.kind] + [_tree_sexp(c) for c in node.children]) + ")"


def _parse_modulator(g: Graph, spec: str, residual: str, budget: int) -> Modulator:
    """`auto` searches within the budget; otherwise a comma-separated
    vertex list is trusted (the solvers re-validate the residual)."""
    if spec == "auto":
        finder = cluster_modulator if residual == "cluster" else threshold_modulator
        m = finder(g, budget)
        if m is None:
            raise ValueError(f"no {residual} modulator of size <= {budget}")
        return m
    try:
        vertices = tuple(sorted({int(tok) for tok in spec.split(",") if tok.strip()}))
    except ValueError:
        raise ValueError(f"modulator must be 'auto' or comma-separated vertices, got {spec!r}")
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"modulator vertex {v} out of range")
    return Modulator(vertices, residual)


# --- subcommands -----------------------------------------------------------


def _cmd_verify(args, report: RunReport) -> int:
    g = _load_graph(args.graph, report)
    coloring = _load_coloring(args.coloring, g, report)
    verdict = verify(coloring, args.variant)
    report.add("verdict", "valid" if verdict else "invalid")
    if verdict:
        report.add("colors_used", coloring.num_colors)
        return 0
    report.add("failing_vertex", verdict.failing_vertex)
    report.add("reason", verdict.reason)
    return 1


def _cmd_oracle(args, report: RunReport) -> int:
    g = _load_graph(args.graph, report)
    limit = _limit(args.limit)
    stem = _stem(args)
    if args.k is not None:
        yes, witness = decide_cf(g, args.variant, args.k, limit=limit)
        report.add("decision", "yes" if yes else "no")
        if not yes:
            return 1
        report.add("colors_used", witness.num_colors)
        _emit(stem.with_suffix(f".{args.variant}.col"), write_coloring(witness), report, "witness_file")
        return 0
    result = exact_cf(g, args.variant, limit=limit)
    if result.infeasible:
        report.add("chromatic", "infeasible")
        report.add("reason", "an isolated vertex leaves an open neighborhood empty")
        return 1
    report.add("chromatic", result.chromatic)
    _emit(stem.with_suffix(f".{args.variant}.col"), write_coloring(result.witness), report, "witness_file")
    return 0


def _auto_solve(g: Graph, args, rep, limit, report: RunReport):
    if args.variant == VARIANT_CN:
        ok, partition = is_split(g)
        if ok:
            return "split", solve_split_cfcn(g, partition)
        ok, sides = is_bipartite(g)
        if ok and g.m:
            return "bipartite", solve_bipartite_cfcn(g, sides)
    ok, tree = is_cograph(g)
    if ok:
        return "cograph", solve_cograph(g, tree, args.variant)
    if rep is not None:
        runner = cfcn_interval if args.variant == VARIANT_CN else cfon_interval
        return "interval", runner(g, rep)
    cluster_m = cluster_modulator(g, args.budget)
    threshold_m = threshold_modulator(g, args.budget)
    if cluster_m is not None and (
        threshold_m is None or len(cluster_m.vertices) <= len(threshold_m.vertices)
    ):
        runner = lemma1_cfcn if args.variant == VARIANT_CN else lemma1_cfon
        return "lemma1", runner(g, cluster_m)
    if threshold_m is not None:
        runner = approx_cfcn_threshold if args.variant == VARIANT_CN else approx_cfon_threshold
        return "approx", runner(g, threshold_m)
    if limit is None or g.n <= limit:
        result = exact_cf(g, args.variant, limit=limit)
        return "oracle", SolveOutcome(result.witness, result.chromatic, EXACT, "exhaustive search")
    raise SizeGuardError(
        f"no polynomial strategy applies and {g.n} vertices exceed the oracle guard ({limit})"
    )


def _cmd_solve(args, report: RunReport) -> int:
    g = _load_graph(args.graph, report)
    rep = _load_intervals(args.intervals, g, report) if args.intervals else None
    limit = _limit(args.limit)
    if args.variant == VARIANT_ON and any(g.degree(v) == 0 for v in range(g.n)):
        report.add("result", "infeasible")
        report.add("reason", "an isolated vertex leaves an open neighborhood empty")
        return 1

    strategy = args.strategy
    if strategy == "fpt":
        if args.k is None:
            raise ValueError("the fpt strategy needs --k")
        m = _parse_modulator(g, args.modulator, "cluster", args.budget)
        report.add("modulator", " ".join(map(str, m.vertices)) or "(empty)")
        decision = solve_via_kernel(g, m, args.k, args.variant, limit=limit)
        report.add("strategy", "fpt")
        report.add("decision", "yes" if decision.yes else "no")
        if decision.note:
            report.add("note", decision.note)
        if not decision.yes:
            return 1
        report.add("colors_used", decision.witness.num_colors)
        _emit(
            _stem(args).with_suffix(f".{args.variant}.col"),
            write_coloring(decision.witness),
            report,
            "coloring_file",
        )
        return 0

    if strategy == "auto":
        strategy, outcome = _auto_solve(g, args, rep, limit, report)
    elif strategy == "bipartite":
        if args.variant != VARIANT_CN:
            raise ValueError("the bipartite strategy handles only --variant cn")
        ok, sides = is_bipartite(g)
        if not ok:
            raise ValueError("the graph is not bipartite")
        outcome = solve_bipartite_cfcn(g, sides)
    elif strategy == "split":
        if args.variant != VARIANT_CN:
            raise ValueError(
                "the split strategy handles only --variant cn; the open variant "
                "on split graphs is as hard as graph coloring (see gadget)"
            )
        ok, partition = is_split(g)
        if not ok:
            raise ValueError("the graph is not split")
        outcome = solve_split_cfcn(g, partition)
    elif strategy == "cograph":
        ok, tree = is_cograph(g)
        if not ok:
            raise ValueError("the graph is not a cograph")
        outcome = solve_cograph(g, tree, args.variant)
    elif strategy == "interval":
        if rep is None:
            raise ValueError("the interval strategy needs --intervals")
        runner = cfcn_interval if args.variant == VARIANT_CN else cfon_interval
        outcome = runner(g, rep)
    elif strategy == "lemma1":
        m = _parse_modulator(g, args.modulator, "cluster", args.budget)
        report.add("modulator", " ".join(map(str, m.vertices)) or "(empty)")
        runner = lemma1_cfcn if args.variant == VARIANT_CN else lemma1_cfon
        outcome = runner(g, m)
    elif strategy == "approx":
        m = _parse_modulator(g, args.modulator, "threshold", args.budget)
        report.add("modulator", " ".join(map(str, m.vertices)) or "(empty)")
        runner = approx_cfcn_threshold if args.variant == VARIANT_CN else approx_cfon_threshold
        outcome = runner(g, m)
    else:  # oracle
        result = exact_cf(g, args.variant, limit=limit)
        outcome = SolveOutcome(result.witness, result.chromatic, EXACT, "exhaustive search")

    verdict = verify(outcome.coloring, args.variant)
    if not verdict:
        raise SelfCheckError(
            f"vertex {verdict.failing_vertex} fails re-verification ({verdict.reason})"
        )
    report.add("strategy", strategy)
    report.add("colors_used", outcome.colors_used)
    report.add("optimality", outcome.optimality)
    if outcome.note:
        report.add("note", outcome.note)
    _emit(
        _stem(args).with_suffix(f".{args.variant}.col"),
        write_coloring(outcome.coloring),
        report,
        "coloring_file",
    )
    return 0


def _cmd_recognize(args, report: RunReport) -> int:
    g = _load_graph(args.graph, report)
    rr = recognize(g)
    report.add("labels", " ".join(sorted(rr.labels)) or "none")
    report.add("bipartite", "yes" if "bipartite" in rr.labels else "no")
    if rr.bipartition is not None:
        left, right = rr.bipartition
        report.add("bipartition_left", " ".join(map(str, left)))
        report.add("bipartition_right", " ".join(map(str, right)))
    report.add("cluster", "yes" if "cluster" in rr.labels else "no")
    if rr.cliques is not None:
        report.add("cliques", " | ".join(" ".join(map(str, c)) for c in rr.cliques))
    report.add("split", "yes" if "split" in rr.labels else "no")
    if rr.split_partition is not None:
        report.add("split_clique", " ".join(map(str, rr.split_partition.clique)))
        report.add("split_independent", " ".join(map(str, rr.split_partition.independent)))
    report.add("threshold", "yes" if "threshold" in rr.labels else "no")
    if rr.elimination_order is not None:
        report.add(
            "threshold_order",
            " ".join(f"{v}:{kind}" for v, kind in rr.elimination_order),
        )
    report.add("cograph", "yes" if "cograph" in rr.labels else "no")
    if rr.md_tree is not None:
        report.add("cograph_tree", _tree_sexp(rr.md_tree))
    return 0


def _cmd_modulator(args, report: RunReport) -> int:
    g = _load_graph(args.graph, report)
    finder = cluster_modulator if args.klass == "cluster" else threshold_modulator
    m = finder(g, args.budget)
    if m is None:
        report.add("modulator", "none")
        return 1
    report.add("modulator", " ".join(map(str, m.vertices)) or "(empty)")
    report.add("size", len(m.vertices))
    report.add("residual", m.residual_class)
    return 0


def _cmd_kernelize(args, report: RunReport) -> int:
    g = _load_graph(args.graph, report)
    m = _parse_modulator(g, args.modulator, "cluster", args.budget)
    report.add("modulator", " ".join(map(str, m.vertices)) or "(empty)")
    reducer = reduce_cfcn if args.variant == VARIANT_CN else reduce_cfon
    inst = reducer(g, m, args.k)
    stem = _stem(args)
    report.add("kernel_vertices", inst.graph.n)
    report.add("kernel_edges", inst.graph.m)
    report.add("size_bound", kernel_size_bound(len(m.vertices), args.k, args.variant))
    if inst.short_circuit is not None:
        report.add("short_circuit", "yes")
        report.add("colors_used", inst.short_circuit.colors_used)
        _emit(
            stem.with_suffix(f".{args.variant}.col"),
            write_coloring(inst.short_circuit.coloring),
            report,
            "witness_file",
        )
    else:
        report.add("short_circuit", "no")
    _emit(stem.with_suffix(".kernel.cf"), write_graph(inst.graph), report, "kernel_file")
    _emit(stem.with_suffix(".prov"), "\n".join(provenance(inst)) + "\n", report, "provenance_file")
    return 0


def _cmd_gadget(args, report: RunReport) -> int:
    g = _load_graph(args.graph, report)
    if args.mode == "encode":
        inst = encode(g, args.k)
        report.add("gadget_vertices", inst.graph.n)
        report.add("gadget_edges", inst.graph.m)
        report.add("clique_size", len(inst.clique))
        report.add("edge_slots", len(inst.independent))
        stem = _stem(args)
        _emit(stem.with_suffix(".gadget.cf"), write_graph(inst.graph), report, "gadget_file")
        lines = [f"x {inst.x}", f"y {inst.y}"]
        lines += [
            f"slot {slot} {u} {v}"
            for slot, (u, v) in zip(inst.independent, inst.pair_of)
        ]
        _emit(stem.with_suffix(".map"), "\n".join(lines) + "\n", report, "map_file")
        return 0
    cross = cross_validate(g, args.k, limit=_limit(args.limit))
    report.add("source_colorable", "yes" if cross.source_yes else "no")
    report.add("gadget_colorable", "yes" if cross.gadget_yes else "no")
    report.add("match", "yes" if cross.match else "no")
    return 0 if cross.match else 4


def _cmd_gen(args, report: RunReport) -> int:
    cliques = None
    if args.cliques:
        cliques = tuple(int(tok) for tok in args.cliques.split(",") if tok.strip())
    spec = GenSpec(tag=args.klass, n=args.n, seed=args.seed, d=args.d, cliques=cliques)
    result = gen(spec)
    stem = Path(args.out) if args.out else Path(
        f"{args.klass}-n{args.n}-s{args.seed}" + (f"-d{args.d}" if args.d is not None else "")
    )
    report.add("vertices", result.graph.n)
    report.add("edges", result.graph.m)
    _emit(stem.with_suffix(".cf"), write_graph(result.graph), report, "graph_file")
    if result.representation is not None:
        _emit(stem.with_suffix(".ivl"), write_intervals(result.representation), report, "intervals_file")
    cert_lines: list[str] = []
    if result.cliques is not None:
        cert_lines += ["clique " + " ".join(map(str, c)) for c in result.cliques]
    if result.creation is not None:
        cert_lines += [f"step {v} {kind}" for v, kind in result.creation]
    if result.partition is not None:
        cert_lines.append("clique " + " ".join(map(str, result.partition.clique)))
        cert_lines.append("independent " + " ".join(map(str, result.partition.independent)))
    if result.modulator is not None:
        cert_lines.append("modulator " + " ".join(map(str, result.modulator.vertices)))
        cert_lines.append(f"residual {result.modulator.residual_class}")
    if cert_lines:
        _emit(stem.with_suffix(".cert"), "\n".join(cert_lines) + "\n", report, "certificate_file")
    return 0


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfcolor",
        description="conflict-free graph coloring: verify, solve, kernelize, reduce",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, variant=True, limit=False, out=False):
        if variant:
            p.add_argument("--variant", choices=VARIANTS, required=True,
                           help="cn = closed neighborhoods, on = open neighborhoods")
        if limit:
            p.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                           help="exhaustive-search vertex guard; <= 0 disables")
        if out:
            p.add_argument("--out", help="artifact path stem (default: input stem)")

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    common(p)
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="exact chromatic number or k-decision by backtracking")
    common(p, limit=True, out=True)
    p.add_argument("--k", type=int, help="decide `<= k colors` instead of optimizing")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("solve", help="construct a conflict-free coloring")
    common(p, limit=True, out=True)
    p.add_argument(
        "--strategy",
        choices=("auto", "bipartite", "split", "cograph", "interval", "lemma1", "fpt", "approx", "oracle"),
        default="auto",
    )
    p.add_argument("--intervals", help="interval representation file (interval strategy)")
    p.add_argument("--k", type=int, help="color budget (fpt strategy)")
    p.add_argument("--modulator", default="auto",
                   help="comma-separated vertices or 'auto' (lemma1/fpt/approx)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max modulator size for 'auto' search")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("recognize", help="class labels with certificates")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("modulator", help="small vertex set whose removal lands in a class")
    p.add_argument("--class", dest="klass", choices=("cluster", "threshold"), required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("graph")
    p.set_defaults(func=_cmd_modulator)

    p = sub.add_parser("kernelize", help="shrink to an equivalent bounded-size instance")
    common(p, out=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--modulator", default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("graph")
    p.set_defaults(func=_cmd_kernelize)

    p = sub.add_parser("gadget", help="hardness reduction: proper k-coloring vs CF-ON k+2")
    p.add_argument("mode", choices=("encode", "validate"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                   help="oracle guard for validate; <= 0 disables")
    p.add_argument("--out", help="artifact path stem (default: input stem)")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("gen", help="seeded instance generators with certificates")
    p.add_argument("--class", dest="klass", required=True,
                   choices=("cluster", "threshold", "split", "interval",
                            "cluster-modulator", "threshold-modulator"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--d", type=int, help="modulator size for *-modulator classes")
    p.add_argument("--cliques", help="explicit clique sizes, e.g. 3,1,2 (cluster)")
    p.add_argument("--out", help="artifact path stem (default: <class>-n<n>-s<seed>)")
    p.set_defaults(func=_cmd_gen)

    return parser


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints usage itself
        return int(exc.code or 0)
    report = RunReport()
    report.add("command", " ".join(["cfcolor"] + argv))
    start = time.perf_counter()
    try:
        code = args.func(args, report)
    except SizeGuardError as exc:
        report.add("error", str(exc))
        code = 3
    except SelfCheckError as exc:
        report.add("error", str(exc))
        code = 4
    except (GraphFormatError, OSError, ValueError) as exc:
        report.add("error", str(exc))
        code = 2
    report.add("time_ms", f"{(time.perf_counter() - start) * 1000:.1f}")
    print(report.render())
    return code


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
