"""Hypothesis strategies shared by the property tests."""
import random

from hypothesis import strategies as st

import oracles


@st.composite
def connected_graphs(draw, min_n=3, max_n=10):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from((0.1, 0.2, 0.35, 0.5)))
    return oracles.random_connected_graph(random.Random(seed), n, p)


@st.composite
def grid_frameworks(draw, perturb=0.3):
    """Random grid subgraph with integer steps; (edges, pos)."""
    rng = random.Random(draw(st.integers(0, 2 ** 32 - 1)))
    rows = draw(st.integers(2, 3))
    cols = draw(st.integers(2, 4))
    while True:
        edges, pos = oracles.random_grid_framework(rng, rows, cols, perturb=perturb)
        if all(pos[u] != pos[v] for u, v in edges):
            return edges, pos


def _clean(edges, pos):
    from parflex.apc import compute_apc
    from parflex.core import Framework, Graph, degenerate_triangles, validate_parallelogram_placement
    from parflex.walk import check_walk_independence
    fw = Framework(Graph(edges), pos)
    if not validate_parallelogram_placement(fw).valid or degenerate_triangles(fw):
        return None
    if not check_walk_independence(fw, compute_apc(fw.graph), minimize_witness=False).independent:
        return None
    return fw


@st.composite
def clean_frameworks(draw):
    """Walk-independent parallelogram placements without flat triangles."""
    rng = random.Random(draw(st.integers(0, 2 ** 32 - 1)))
    rows = draw(st.integers(2, 3))
    cols = draw(st.integers(2, 4))
    while True:
        edges, pos = oracles.random_grid_framework(rng, rows, cols, perturb=0.0)
        if all(pos[u] != pos[v] for u, v in edges):
            fw = _clean(edges, pos)
            if fw is not None:
                return fw
