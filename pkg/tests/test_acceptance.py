"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v -s`` to see the lines, or
``python3 tests/test_acceptance.py`` for the lines alone.
"""
from __future__ import annotations

import math
import random
import sys
import time
import warnings
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from parflex import gallery  # noqa: E402
from parflex.apc import compute_apc  # noqa: E402
from parflex.core import Framework, Graph, degenerate_triangles  # noqa: E402
from parflex.flex import decompose, evaluate_flex, infinitesimal_flex, rigidity_matrix_rank, rot  # noqa: E402
from parflex.nac import is_cartesian_nac, is_nac, verify_color_changes  # noqa: E402
from parflex.product import embed, quotient_graphs  # noqa: E402
from parflex.symmetry import (  # noqa: E402
    action_from_rotation, cn_colorings, cn_flex, compute_cn_apc, equivariance_residual,
    evaluate_cn_flex, is_cn_symmetric_nac, validate_cn_symmetric,
)
from parflex.tilings import TilingSpec, generate_patch, square_patch  # noqa: E402
from parflex.walk import check_walk_independence, verify_witness  # noqa: E402

# tolerances and budgets
FIG_PARTITION_SECONDS = 1.0
TESSELLATION_SECONDS = 10.0
WITNESS_SECONDS = 1.0
ORACLE_TRIALS = 500
ORACLE_MAX_VERTICES = 12
FLEX_SAMPLES = 100
FLEX_TOL = 1e-9
FD_STEPS = [1e-2 / 2 ** k for k in range(10)]  # 1e-2 down to about 2e-5
FD_HALVING = (1.8, 2.2)
SYMMETRY_TOL = 1e-9
SCALING_EDGES = 100_000
SCALING_RATIO = 2.5
SCALING_SECONDS = 5.0

TESSELLATION_COUNTS = {
    "3.6.3.6": 4,
    "3^6;3^2.4.3.4;3^2.4.3.4": 2,
    "3.4.6.4;3^2.4.3.4": 5,
    "3.3.4.3.4;3.4.6.4;3.4.4.6": 5,
    "3^2.6^2;3.6.3.6;6^3": 7,
    "3^6": 1,
}
INFINITE_TILING = "3.4.6.4;3.4.6.4;3.4.4.6"


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _capsys
    _capsys = capsys
    yield


_capsys = None


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    with _capsys.disabled():
        print("\n" + line, flush=True)
    assert ok, line


# ---- 1 ----

def test_criterion_1_figure_partitions():
    start = time.perf_counter()
    left = sorted(compute_apc(gallery.eqclasses_left().graph).sizes())
    middle = sorted(compute_apc(gallery.eqclasses_middle_graph()).sizes())
    newfw = sorted(compute_apc(gallery.new_framework().graph).sizes())
    elapsed = time.perf_counter() - start
    ok = (left == [6, 9] and middle == [3, 3, 7] and newfw == [5, 8, 12]
          and elapsed < FIG_PARTITION_SECONDS)
    report(1, "figure partitions", ok, f"sizes {left} {middle} {newfw}, {elapsed:.3f}s")


# ---- 2 ----

def test_criterion_2_tessellation_counts():
    start = time.perf_counter()
    got = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for name in TESSELLATION_COUNTS:
            got[name] = len(compute_apc(generate_patch(TilingSpec(name, 2, augment_hexagons=True)).graph))
        series = [len(compute_apc(generate_patch(TilingSpec(INFINITE_TILING, e, augment_hexagons=True)).graph))
                  for e in (1, 2, 3, 4)]
    elapsed = time.perf_counter() - start
    counts_ok = got == TESSELLATION_COUNTS
    increasing = all(a < b for a, b in zip(series, series[1:]))
    ok = counts_ok and increasing and elapsed < TESSELLATION_SECONDS
    report(2, "tessellation class counts", ok,
           f"{got}, growing series {series}, {elapsed:.2f}s")


# ---- 3 ----

def test_criterion_3_walk_witness():
    start = time.perf_counter()
    fw = gallery.new_framework(moved=True)
    part = compute_apc(fw.graph)
    rep = check_walk_independence(fw, part)
    left = check_walk_independence(gallery.new_framework(), compute_apc(gallery.new_framework().graph))
    elapsed = time.perf_counter() - start
    w = rep.witness
    nonzero = w is not None and math.hypot(*map(float, w.vector)) > 1e-9
    # re-verify the class sum by hand
    resum = None
    if w is not None:
        sx = sy = 0.0
        k = len(w.cycle)
        for i in range(k):
            a, b = w.cycle[i], w.cycle[(i + 1) % k]
            if part.of(a, b) == w.class_index:
                sx += fw.placement[b][0] - fw.placement[a][0]
                sy += fw.placement[b][1] - fw.placement[a][1]
        resum = (sx, sy)
    reverified = (resum is not None and abs(resum[0] - w.vector[0]) < 1e-9
                  and abs(resum[1] - w.vector[1]) < 1e-9 and verify_witness(fw, part, w))
    figure_cycle = any(set(a.cycle) == {8, 9, 11, 13, 14} for a in rep.alternatives)
    ok = (not rep.independent and nonzero and reverified and left.independent
          and elapsed < WITNESS_SECONDS)
    report(3, "walk-independence witness", ok,
           f"witness {w.cycle if w else None} class {w.class_index if w else None} sum {resum}, "
           f"figure cycle among alternatives: {figure_cycle}, left independent: {left.independent}, "
           f"{elapsed:.3f}s")


# ---- 4 ----

def _apc_trials(rng):
    bad = 0
    for _ in range(ORACLE_TRIALS):
        n = rng.randint(3, ORACLE_MAX_VERTICES)
        edges = oracles.random_connected_graph(rng, n, rng.choice((0.1, 0.2, 0.35)))
        lib = {frozenset(c) for c in compute_apc(Graph(edges)).classes}
        if lib != set(oracles.naive_apc(edges)):
            bad += 1
    return bad


def _grid_framework(rng):
    while True:
        rows, cols = rng.choice(((2, 3), (3, 3), (3, 4), (2, 5), (2, 6)))
        edges, pos = oracles.random_grid_framework(rng, rows, cols)
        if all(pos[u] != pos[v] for u, v in edges):
            return edges, pos


def _walk_trials(rng):
    bad = violated = 0
    for _ in range(ORACLE_TRIALS):
        edges, pos = _grid_framework(rng)
        fw = Framework(Graph(edges, vertices=pos), pos)
        part = compute_apc(fw.graph)
        lib = check_walk_independence(fw, part, minimize_witness=False).independent
        ref = oracles.walk_independent_bruteforce(edges, pos, [set(c) for c in part.classes])
        violated += not ref
        bad += lib != ref
    return bad, violated


def _nac_trials(rng):
    bad = positives = 0
    for trial in range(ORACLE_TRIALS):
        n = rng.randint(3, ORACLE_MAX_VERTICES)
        if trial % 2:
            edges, _ = _grid_framework(rng)
            classes = oracles.naive_apc(edges)
            col = oracles.class_constant_coloring(rng, classes) or oracles.random_coloring(rng, edges)
        else:
            edges = oracles.random_connected_graph(rng, n, 0.15)
            col = oracles.random_coloring(rng, edges)
        g = Graph(edges)
        lib = is_nac(g, col).is_nac
        ref = oracles.nac_bruteforce(edges, col)
        positives += ref
        bad += lib != ref
    return bad, positives


def _color_change_trials(rng):
    bad = positives = 0
    for trial in range(ORACLE_TRIALS):
        if trial % 2:
            edges, _ = _grid_framework(rng)
            col = oracles.class_constant_coloring(rng, oracles.naive_apc(edges)) or oracles.random_coloring(rng, edges)
        else:
            n = rng.randint(3, ORACLE_MAX_VERTICES)
            edges = oracles.random_connected_graph(rng, n, 0.15)
            col = oracles.random_coloring(rng, edges)
        g = Graph(edges)
        a = verify_color_changes(g, col)
        b = is_cartesian_nac(g, col).is_cartesian
        positives += b
        bad += a != b
    return bad, positives


def test_criterion_4_oracle_suites():
    rng = random.Random(20240611)
    apc_bad = _apc_trials(rng)
    walk_bad, walk_neg = _walk_trials(rng)
    nac_bad, nac_pos = _nac_trials(rng)
    cc_bad, cc_pos = _color_change_trials(rng)
    ok = apc_bad == walk_bad == nac_bad == cc_bad == 0
    report(4, "oracle equivalence suites", ok,
           f"{ORACLE_TRIALS} trials each; disagreements apc {apc_bad}, walk {walk_bad} "
           f"({walk_neg} violated), nac {nac_bad} ({nac_pos} NAC), color-changes {cc_bad} ({cc_pos} Cartesian)")


# ---- 5 ----

def _flexible_corpus():
    out = {}
    for name, fw in gallery.corpus().items():
        part = compute_apc(fw.graph)
        if len(part) < 2:
            continue
        if not check_walk_independence(fw, part, minimize_witness=False).independent:
            continue
        out[name] = (fw, part)
    return out


def test_criterion_5_flex_numerics():
    rng = np.random.default_rng(7)
    worst_len = worst_dir = 0.0
    fd_ok = True
    fd_detail = []
    corpus = _flexible_corpus()
    for name, (fw, part) in corpus.items():
        fp = decompose(fw, part)
        base = {e: math.dist(fw.placement[e[0]], fw.placement[e[1]]) for e in fw.graph.edges}
        for _ in range(FLEX_SAMPLES):
            t = np.concatenate([[0.0], rng.uniform(0, 2 * math.pi, len(part) - 1)])
            pl = evaluate_flex(fp, t)
            for (u, v), length in base.items():
                worst_len = max(worst_len, abs(math.dist(pl[u], pl[v]) - length))
                j = part.of(u, v)
                want = rot(t[j]) @ np.array([float(fw.placement[u][0] - fw.placement[v][0]),
                                              float(fw.placement[u][1] - fw.placement[v][1])])
                got = np.array([pl[u][0] - pl[v][0], pl[u][1] - pl[v][1]])
                worst_dir = max(worst_dir, float(np.abs(got - want).max()))
        zero = np.zeros(len(part))
        p0 = fp.positions(zero)
        for j in range(1, len(part)):
            phi = infinitesimal_flex(fp, j).phi
            target = np.array([[float(phi[v][0]), float(phi[v][1])] for v in fp.vertices])
            res = []
            for h in FD_STEPS:
                t = zero.copy()
                t[j] = h
                res.append(float(np.abs((fp.positions(t) - p0) / h - target).max()))
            ratios = [a / b for a, b in zip(res, res[1:])]
            if not all(FD_HALVING[0] <= r <= FD_HALVING[1] for r in ratios):
                fd_ok = False
                fd_detail.append(f"{name}/class {j}: ratios {[round(r, 3) for r in ratios]}")
    ok = worst_len <= FLEX_TOL and worst_dir <= FLEX_TOL and fd_ok
    report(5, "flex numerics", ok,
           f"{len(corpus)} flexible frameworks, max length drift {worst_len:.1e}, "
           f"max direction error {worst_dir:.1e}, first-order FD {'ok' if fd_ok else fd_detail}")


# ---- 6 ----

def test_criterion_6_rank_equivalence():
    checked = 0
    disagreements = []
    for name, fw in gallery.corpus().items():
        part = compute_apc(fw.graph)
        if not check_walk_independence(fw, part, minimize_witness=False).independent:
            continue
        if degenerate_triangles(fw):
            continue
        checked += 1
        deficient = rigidity_matrix_rank(fw) < 2 * fw.graph.n - 3
        if deficient != (len(part) >= 2):
            disagreements.append(name)
    report(6, "rank deficiency iff two or more classes", not disagreements and checked > 0,
           f"{checked} frameworks, disagreements {disagreements}")


# ---- 7 ----

def test_criterion_7_cartesian_embedding():
    failures = []
    checked = 0
    for name, fw in gallery.corpus().items():
        part = compute_apc(fw.graph)
        if len(part) < 2 or not check_walk_independence(fw, part, minimize_witness=False).independent:
            continue
        checked += 1
        try:
            embed(fw.graph, quotient_graphs(fw.graph, part))
        except Exception as exc:  # any failed check counts
            failures.append(f"{name}: {exc}")
    sq = gallery.square()
    emb = embed(sq.graph, quotient_graphs(sq.graph, compute_apc(sq.graph)))
    c4_ok = emb.factor_sizes == (2, 2) and emb.is_full_product() and all(
        len(q.edges) == 1 for q in emb.quotients)
    report(7, "Cartesian product embedding", not failures and c4_ok and checked > 0,
           f"{checked} frameworks embedded, failures {failures}, C4 = K2 x K2: {c4_ok}")


# ---- 8 ----

def test_criterion_8_symmetry():
    c4 = gallery.centered_square()
    a4 = action_from_rotation(c4, 4)
    ok4 = validate_cn_symmetric(c4, a4).valid and len(compute_cn_apc(c4.graph, a4)) == 1
    a2 = action_from_rotation(c4, 2)
    fp, cn2 = cn_flex(c4, a2)
    res2 = max(equivariance_residual(evaluate_cn_flex(fp, a2, cn2, [0.0, t]), a2)
               for t in np.linspace(0.1, 3.0, 12))
    ok2 = validate_cn_symmetric(c4, a2).valid and len(cn2) == 2 and res2 <= SYMMETRY_TOL

    sym = gallery.symflex_example()
    a3 = action_from_rotation(sym, 3)
    fp3, cn3 = cn_flex(sym, a3)
    dof = len(cn3) - 1
    res3 = max(equivariance_residual(evaluate_cn_flex(fp3, a3, cn3, [0.0, s, t]), a3)
               for s, t in [(0.3, 0.0), (0.0, 0.4), (0.2, -0.5)])
    colorings = list(cn_colorings(cn3))
    all_pass = bool(colorings) and all(is_cn_symmetric_nac(sym.graph, a3, c).is_cn_nac for c in colorings)
    ok3 = validate_cn_symmetric(sym, a3).valid and dof == 2 and res3 <= SYMMETRY_TOL and all_pass
    report(8, "cyclic symmetry", ok4 and ok2 and ok3,
           f"C4/n=4 one class: {ok4}; C4/n=2 two classes, residual {res2:.1e}; "
           f"symflex {len(cn3)} classes -> {dof} symmetric flexes, residual {res3:.1e}, "
           f"{len(colorings)} class-constant colorings all symmetric NAC: {all_pass}")


# ---- 9 ----

def _apc_seconds(graph, repeats=3):
    best = math.inf
    for _ in range(repeats):
        g = Graph(graph.edges, vertices=graph.vertices)  # fresh graph: no cached adjacency arrays
        start = time.perf_counter()
        compute_apc(g)
        best = min(best, time.perf_counter() - start)
    return best


def test_criterion_9_scaling():
    side = math.ceil(math.sqrt(SCALING_EDGES / 2)) + 1
    small = square_patch(side, side).graph
    while small.m < SCALING_EDGES:
        side += 1
        small = square_patch(side, side).graph
    big_side = round(side * math.sqrt(2))
    big = square_patch(big_side, big_side).graph
    t_small = _apc_seconds(small)
    t_big = _apc_seconds(big)
    ratio = (t_big / t_small) / (big.m / small.m) * 2
    ok = ratio < SCALING_RATIO and t_small < SCALING_SECONDS and t_big < 2 * SCALING_SECONDS
    report(9, "near-linear scaling", ok,
           f"{small.m} edges {t_small:.2f}s, {big.m} edges {t_big:.2f}s, doubling ratio {ratio:.2f}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
