"""Verifier semantics: unique colors, CF-CN / CF-ON verdicts, file I/O."""

import random

import pytest
from hypothesis import given

from cfcolor.coloring import (
    Coloring,
    has_unique_color,
    parse_coloring,
    verify,
    verify_cfcn,
    verify_cfon,
    write_coloring,
)
from cfcolor.graph import Graph, GraphFormatError
from strategies import colored_graphs

P3 = Graph(3, [(0, 1), (1, 2)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
K2 = Graph(2, [(0, 1)])


def test_unique_color_smallest():
    c = Coloring(P3, (0, 1, 1))
    assert has_unique_color(c, [0, 1, 2]) == 0
    assert has_unique_color(c, [1, 2]) is None
    assert has_unique_color(c, []) is None
    # two unique colors present: report the smallest
    c2 = Coloring(P3, (2, 1, 1))
    assert has_unique_color(c2, [0, 1]) == 1


def test_cfcn_accepts_p3_010():
    assert verify_cfcn(Coloring(P3, (0, 1, 0))).ok


def test_cfcn_rejects_all_same_on_edge():
    res = verify_cfcn(Coloring(K2, (0, 0)))
    assert not res.ok
    assert res.failing_vertex == 0


def test_cfon_accepts_c4_0011():
    assert verify_cfon(Coloring(C4, (0, 0, 1, 1))).ok


def test_cfon_rejects_isolated_vertex():
    g = Graph(3, [(0, 1)])
    res = verify_cfon(Coloring(g, (0, 1, 2)))
    assert not res.ok
    assert res.failing_vertex == 2
    # CF-CN is fine with the isolated vertex
    assert verify_cfcn(Coloring(g, (0, 1, 0))).ok


def test_cfon_rejects_p3_010():
    # center sees two identical leaf colors
    res = verify_cfon(Coloring(P3, (0, 1, 0)))
    assert not res.ok
    assert res.failing_vertex == 1


def test_first_failing_vertex_is_smallest():
    g = Graph(4, [(0, 1), (2, 3)])
    res = verify_cfcn(Coloring(g, (5, 5, 5, 5)))
    assert res.failing_vertex == 0


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring(K2, (0,))
    with pytest.raises(ValueError):
        Coloring(K2, (0, -1))


def test_round_trip():
    c = Coloring(P3, (0, 1, 0))
    assert parse_coloring(write_coloring(c), P3) == c


def test_parse_coloring_errors():
    with pytest.raises(GraphFormatError, match="twice"):
        parse_coloring("v 0 1\nv 0 2\nv 1 0\nv 2 0\n", P3)
    with pytest.raises(GraphFormatError, match="without a color"):
        parse_coloring("v 0 1\n", P3)
    with pytest.raises(GraphFormatError, match="out of range"):
        parse_coloring("v 9 1\n", P3)
    with pytest.raises(GraphFormatError, match="malformed"):
        parse_coloring("v 0\n", P3)


@given(colored_graphs(max_n=7))
def test_verdict_invariant_under_color_permutation(gc):
    g, colors = gc
    rng = random.Random(7)
    palette = sorted(set(colors))
    image = list(range(len(palette)))
    rng.shuffle(image)
    perm = {c: image[i] for i, c in enumerate(palette)}
    permuted = tuple(perm[c] for c in colors)
    for variant in ("cn", "on"):
        assert verify(Coloring(g, colors), variant).ok == verify(
            Coloring(g, permuted), variant
        ).ok


@given(colored_graphs(max_n=7))
def test_verdict_invariant_under_relabeling(gc):
    g, colors = gc
    rng = random.Random(11)
    sigma = list(range(g.n))
    rng.shuffle(sigma)
    relabeled = Graph(g.n, [(sigma[u], sigma[v]) for u, v in g.edges])
    new_colors = [0] * g.n
    for v in range(g.n):
        new_colors[sigma[v]] = colors[v]
    for variant in ("cn", "on"):
        assert verify(Coloring(g, colors), variant).ok == verify(
            Coloring(relabeled, tuple(new_colors)), variant
        ).ok
