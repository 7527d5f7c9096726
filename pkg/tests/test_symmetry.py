import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from parflex import gallery
from parflex.apc import compute_apc
from parflex.core import EXACT, Framework, Graph
from parflex.errors import RigidError, SymmetryError
from parflex.symmetry import (
    CyclicAction, action_from_rotation, cn_colorings, cn_flex, compute_cn_apc, equivariance_residual,
    evaluate_cn_flex, is_cn_symmetric_nac, recentered, validate_cn_symmetric,
)


@st.composite
def circulants(draw):
    """Connected circulant graph on k vertices with its shift automorphism."""
    k = draw(st.integers(4, 12))
    rng = random.Random(draw(st.integers(0, 2 ** 32 - 1)))
    jumps = {1} | {j for j in range(2, k // 2 + 1) if rng.random() < 0.3}
    edges = {tuple(sorted((i, (i + j) % k))) for i in range(k) for j in jumps}
    d = draw(st.sampled_from([d for d in range(1, k) if k % d == 0 and d < k]))
    return sorted(edges), {i: (i + d) % k for i in range(k)}, k // math.gcd(k, d)


@given(circulants())
def test_cn_classes_match_oracle(case):
    edges, omega, n = case
    if n < 2:
        return
    g = Graph(edges)
    got = {frozenset(c) for c in compute_cn_apc(g, CyclicAction(n, omega)).classes}
    assert got == set(oracles.naive_cn_classes(edges, omega))


def test_centered_square():
    c4 = gallery.centered_square()
    a4 = action_from_rotation(c4, 4)
    assert validate_cn_symmetric(c4, a4).valid
    assert len(compute_cn_apc(c4.graph, a4)) == 1
    fp, cn = cn_flex(c4, a4)
    with pytest.raises(RigidError):
        evaluate_cn_flex(fp, a4, cn, [0.0])
    a2 = action_from_rotation(c4, 2)
    fp, cn = cn_flex(c4, a2)
    assert len(cn) == 2
    for t in np.linspace(-3, 3, 13):
        assert equivariance_residual(evaluate_cn_flex(fp, a2, cn, [0.0, t]), a2) <= 1e-9


def test_symflex():
    fw = gallery.symflex_example()
    action = action_from_rotation(fw, 3)
    assert validate_cn_symmetric(fw, action).valid
    fp, cn = cn_flex(fw, action)
    assert len(cn) == 3
    pl = evaluate_cn_flex(fp, action, cn, [0.0, 0.3, -0.2])
    assert equivariance_residual(pl, action) <= 1e-9
    for u, v in fw.graph.edges:
        assert math.dist(pl[u], pl[v]) == pytest.approx(math.dist(fw.placement[u], fw.placement[v]), abs=1e-9)
    cols = list(cn_colorings(cn))
    assert len(cols) == 3 and all(is_cn_symmetric_nac(fw.graph, action, c) for c in cols)


def test_asymmetric_coloring_rejected():
    # a quarter turn swaps the two classes of the square
    c4 = gallery.centered_square()
    action = action_from_rotation(c4, 4)
    part = compute_apc(c4.graph)
    col = {e: ("red" if part.class_of[e] == 0 else "blue") for e in c4.graph.edges}
    verdict = is_cn_symmetric_nac(c4.graph, action, col)
    assert not verdict and "image" in verdict.reason


def test_orientation_matters():
    # the clockwise default and the counterclockwise variant give inverse maps
    c4 = gallery.centered_square()
    cw = action_from_rotation(c4, 4, "cw")
    ccw = action_from_rotation(c4, 4, "ccw")
    assert all(ccw(cw(v)) == v for v in c4.graph.vertices)


def test_exact_quarter_turn():
    fw = Framework(Graph([(0, 1), (1, 2), (2, 3), (3, 0)]),
                   {0: (1, 0), 1: (0, -1), 2: (-1, 0), 3: (0, 1)}, EXACT)
    action = action_from_rotation(fw, 4)
    verdict = validate_cn_symmetric(fw, action)
    assert verdict.valid and verdict.max_residual == 0


def test_invalid_actions():
    with pytest.raises(SymmetryError):
        CyclicAction(3, {0: 1, 1: 1, 2: 0})
    with pytest.raises(SymmetryError):
        CyclicAction(1, {0: 0})
    off = recentered(gallery.centered_square(), (Fraction(1, 3), 0))
    with pytest.raises(SymmetryError):
        action_from_rotation(off, 4)
    tri = gallery.triangle()
    verdict = validate_cn_symmetric(tri, CyclicAction(2, {0: 1, 1: 0, 2: 2}))
    assert not verdict.valid and verdict.invariant_vertices == (2,)
    with pytest.raises(SymmetryError):
        validate_cn_symmetric(gallery.square(), CyclicAction(2, {0: 1, 1: 0, 2: 2, 3: 3}))
