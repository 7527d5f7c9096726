import random

import pytest
from hypothesis import given, strategies as st

import oracles
from parflex import gallery
from parflex.apc import compute_apc
from parflex.core import Graph, complete_graph, cycle_graph
from parflex.nac import (
    BLUE, RED, EdgeColoring, color_changes, colorings_from_apc, induced_cycles, is_cartesian_nac, is_nac,
    verify_color_changes,
)
from strategies import clean_frameworks, connected_graphs


@given(connected_graphs(), st.integers(0, 2 ** 32 - 1))
def test_component_test_matches_cycle_definition(edges, seed):
    col = oracles.random_coloring(random.Random(seed), edges)
    g = Graph(edges)
    verdict = is_nac(g, col)
    assert verdict.is_nac == oracles.nac_bruteforce(edges, col)
    if not verdict:
        cyc = verdict.witness_cycle
        colors = [col[tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)])))] for i in range(len(cyc))]
        assert min(colors.count(RED), colors.count(BLUE)) == 1


@given(connected_graphs(), st.integers(0, 2 ** 32 - 1))
def test_cartesian_matches_oracle_and_color_changes(edges, seed):
    col = oracles.random_coloring(random.Random(seed), edges)
    g = Graph(edges)
    cart = is_cartesian_nac(g, col).is_cartesian
    assert cart == oracles.cartesian_bruteforce(edges, col)
    assert cart == verify_color_changes(g, col)


@given(clean_frameworks(), st.integers(0, 2 ** 32 - 1), st.booleans())
def test_cartesian_iff_classes_monochromatic(fw, seed, class_constant):
    rng = random.Random(seed)
    part = compute_apc(fw.graph)
    col = oracles.class_constant_coloring(rng, [set(c) for c in part.classes]) if class_constant else None
    if col is None:
        col = oracles.random_coloring(rng, fw.graph.edges)
    mono = all(len({col[e] for e in c}) == 1 for c in part.classes)
    assert is_cartesian_nac(fw.graph, col).is_cartesian == mono


def test_figure_colorings():
    g = gallery.nac_framework().graph
    left, middle, right = (gallery.nac_coloring(w) for w in ("left", "middle", "right"))
    assert not is_nac(g, left)
    assert is_cartesian_nac(g, middle)
    right_verdict = is_cartesian_nac(g, right)
    assert right_verdict.is_nac and not right_verdict.is_cartesian
    u, v = right_verdict.pair
    assert right_verdict.red_path[0] == u and right_verdict.blue_path[-1] == v


def test_coloring_container():
    g = cycle_graph(4)
    col = EdgeColoring.from_red(g, [(1, 0), (2, 3)])
    assert col[(0, 1)] == RED and col[(1, 2)] == BLUE
    assert col.swapped()[(0, 1)] == BLUE
    assert sorted(col.edges_of(RED)) == [(0, 1), (2, 3)]
    with pytest.raises(ValueError):
        EdgeColoring({(0, 1): "green"})


def test_monochromatic_is_not_nac():
    g = cycle_graph(4)
    assert not is_nac(g, {e: RED for e in g.edges})
    with pytest.raises(ValueError):
        verify_color_changes(g, {e: RED for e in g.edges})


def test_induced_cycles_of_k4_are_triangles():
    assert sorted(induced_cycles(complete_graph(4))) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert color_changes(EdgeColoring({(0, 1): RED, (1, 2): BLUE, (0, 2): RED}), (0, 1, 2)) == 2


def test_colorings_from_classes():
    part = compute_apc(gallery.flex_example().graph)
    cols = list(colorings_from_apc(part))
    assert len(cols) == 2 ** (len(part) - 1) - 1
    assert all(is_cartesian_nac(part.graph, c) for c in cols)
    assert list(colorings_from_apc(compute_apc(complete_graph(3)))) == []
