"""Flexibility verdicts and explicit flexes.

Each class ``i`` contributes a vector field ``rho_i``: the sum of class-``i``
edge vectors along any path from the base vertex.  Rotating every ``rho_i``
by its own angle and adding them up moves the framework while keeping all
edge lengths, because each edge only ever sees its own class's rotation.

Rotations are clockwise: ``rot(t) @ (0, 1) == (sin t, cos t)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .apc import APCPartition, compute_apc
from .core import Framework, Placement, vadd, vsub, validate_parallelogram_placement
from .errors import FrameworkError, RigidError, WalkIndependenceError
from .walk import bfs_tree, check_walk_independence

# derivative of rot(t) at t = 0, i.e. rot(pi/2)
QUARTER_TURN = np.array([[0.0, 1.0], [-1.0, 0.0]])


def rot(t: float) -> np.ndarray:
    """Clockwise rotation matrix by ``t`` radians."""
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, s], [-s, c]])


class FlexParametrization:
    """Per-class decomposition of a walk-independent placement.

    Attributes
    ----------
    base : int
        Vertex mapped to the origin for every angle vector.
    components : dict
        ``components[i][v]`` is the class-``i`` part of ``rho(v) - rho(base)``.
    """

    def __init__(self, framework: Framework, partition: APCPartition, base: int, components: dict):
        self.framework = framework
        self.partition = partition
        self.base = base
        self.components = components
        self.vertices = framework.graph.vertices
        self._stack = np.array(
            [[[float(components[i][v][0]), float(components[i][v][1])] for v in self.vertices]
             for i in range(len(partition))]
        ).reshape(len(partition), len(self.vertices), 2)

    @property
    def class_count(self) -> int:
        return len(self.partition)

    def as_array(self) -> np.ndarray:
        """Components as an array of shape (classes, vertices, 2)."""
        return self._stack.copy()

    def positions(self, t: Sequence[float]) -> np.ndarray:
        """Vertex positions (rows in vertex order) for the angle vector ``t``."""
        t = np.asarray(t, dtype=float)
        if t.shape != (self.class_count,):
            raise ValueError(f"expected {self.class_count} angles, got {t.shape[0] if t.ndim else 0}")
        if t[0] != 0:
            raise ValueError("the angle of class 0 is fixed at 0")
        c, s = np.cos(t), np.sin(t)
        x = self._stack[:, :, 0]
        y = self._stack[:, :, 1]
        px = (c[:, None] * x + s[:, None] * y).sum(axis=0)
        py = (-s[:, None] * x + c[:, None] * y).sum(axis=0)
        return np.stack([px, py], axis=1)


def decompose(fw: Framework, partition: APCPartition | None = None, base: int | None = None,
              verified: bool = False) -> FlexParametrization:
    """Split ``rho - rho(base)`` into one vector field per class.

    Walk-independence is checked first unless ``verified`` is set; without it
    the fields would depend on the chosen paths.
    """
    partition = compute_apc(fw.graph) if partition is None else partition
    if not verified:
        report = check_walk_independence(fw, partition, minimize_witness=False)
        if not report.independent:
            raise WalkIndependenceError(
                f"framework is not walk-independent (class {report.witness.class_index} "
                f"fails on cycle {report.witness.cycle}); run check_walk_independence"
            )
    else:
        partition.check_graph(fw.graph)
    base = fw.graph.vertices[0] if base is None else base
    tree = bfs_tree(fw.graph, base)
    zero = (Fraction(0), Fraction(0)) if fw.tolerance.exact else (0.0, 0.0)
    ell = len(partition)
    comps = [{base: zero} for _ in range(ell)]
    pts = fw.placement
    for c in tree.order[1:]:
        p, e = tree.parent[c]
        r = partition.class_of[e]
        step = vsub(pts[c], pts[p])
        for i in range(ell):
            comps[i][c] = vadd(comps[i][p], step) if i == r else comps[i][p]
    return FlexParametrization(fw, partition, base, {i: comps[i] for i in range(ell)})


def evaluate_flex(fp: FlexParametrization, t: Sequence[float]) -> Placement:
    """Placement ``sum_i rot(t_i) rho_i`` for angles ``t`` with ``t[0] == 0``."""
    pos = fp.positions(t)
    return Placement({v: (float(pos[k, 0]), float(pos[k, 1])) for k, v in enumerate(fp.vertices)})


@dataclass(frozen=True)
class InfinitesimalFlex:
    phi: dict

    def residual(self, fw: Framework) -> float:
        """Largest |(rho(u) - rho(v)) . (phi(u) - phi(v))| over edges."""
        worst = 0
        for u, v in fw.graph.edges:
            d = vsub(fw.placement[u], fw.placement[v])
            w = vsub(self.phi[u], self.phi[v])
            worst = max(worst, abs(d[0] * w[0] + d[1] * w[1]))
        return worst


def infinitesimal_flex(fp: FlexParametrization, class_index: int) -> InfinitesimalFlex:
    """Velocity of the flex that turns only class ``class_index``.

    ``phi(w) = rot(pi/2) rho_r(w)``, the derivative at ``t = 0`` of the
    clockwise flex, so finite differences of :func:`evaluate_flex` converge
    to it.
    """
    if fp.class_count < 2:
        raise RigidError("a single class admits no non-trivial infinitesimal flex")
    if not 0 < class_index < fp.class_count:
        raise ValueError(f"class index must be in 1..{fp.class_count - 1}")
    comp = fp.components[class_index]
    return InfinitesimalFlex({v: (comp[v][1] + 0, -comp[v][0] + 0) for v in fp.vertices})


def rigid_motion_residual(fw: Framework, phi: dict) -> float:
    """Distance (least squares) from ``phi`` to the nearest infinitesimal
    rigid motion ``v -> w * J rho(v) + b``."""
    verts = fw.graph.vertices
    rows, rhs = [], []
    for v in verts:
        x, y = float(fw.placement[v][0]), float(fw.placement[v][1])
        rows.append([-y, 1.0, 0.0])
        rows.append([x, 0.0, 1.0])
        rhs.extend([float(phi[v][0]), float(phi[v][1])])
    a = np.array(rows)
    b = np.array(rhs)
    sol, *_ = np.linalg.lstsq(a, b, rcond=None)
    return float(np.linalg.norm(a @ sol - b))


@dataclass(frozen=True)
class RigidityVerdict:
    flexible: bool
    class_count: int
    dof: int
    partition: APCPartition

    def describe(self) -> str:
        word = "flexible" if self.flexible else "rigid"
        cls = "class" if self.class_count == 1 else "classes"
        return f"{word}, {self.class_count} {cls}, {self.dof} dof"


def rigidity_verdict(fw: Framework, partition: APCPartition | None = None) -> RigidityVerdict:
    """Flexible exactly when there are two or more classes; ``dof`` counts
    the independent class rotations."""
    report = validate_parallelogram_placement(fw)
    if not report.valid:
        raise FrameworkError(report.summary())
    partition = compute_apc(fw.graph) if partition is None else partition
    wi = check_walk_independence(fw, partition, minimize_witness=False)
    if not wi.independent:
        raise WalkIndependenceError(
            "walk-independence is violated, so the class count does not decide "
            "flexibility; run check_walk_independence for a witness cycle"
        )
    ell = len(partition)
    return RigidityVerdict(ell >= 2, ell, ell - 1, partition)


def rigidity_matrix(fw: Framework) -> np.ndarray:
    verts = fw.graph.vertices
    col = {v: i for i, v in enumerate(verts)}
    mat = np.zeros((fw.graph.m, 2 * len(verts)))
    for k, (u, v) in enumerate(fw.graph.edges):
        dx = float(fw.placement[u][0] - fw.placement[v][0])
        dy = float(fw.placement[u][1] - fw.placement[v][1])
        mat[k, 2 * col[u]:2 * col[u] + 2] = (dx, dy)
        mat[k, 2 * col[v]:2 * col[v] + 2] = (-dx, -dy)
    return mat


def _exact_rank(fw: Framework) -> int:
    verts = fw.graph.vertices
    col = {v: i for i, v in enumerate(verts)}
    rows = []
    for u, v in fw.graph.edges:
        d = vsub(fw.placement[u], fw.placement[v])
        row = {2 * col[u]: d[0], 2 * col[u] + 1: d[1], 2 * col[v]: -d[0], 2 * col[v] + 1: -d[1]}
        rows.append({k: x for k, x in row.items() if x != 0})
    pivots: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while row:
            k = min(row)
            if k not in pivots:
                pivots[k] = row
                break
            prow = pivots[k]
            f = row[k] / prow[k]
            for j, x in prow.items():
                y = row.get(j, 0) - f * x
                if y == 0:
                    row.pop(j, None)
                else:
                    row[j] = y
    return len(pivots)


def rigidity_matrix_rank(fw: Framework) -> int:
    """Rank of the rigidity matrix: exact elimination in exact mode, else the
    number of singular values above ``eps`` times the largest."""
    if fw.graph.m == 0:
        return 0
    if fw.tolerance.exact:
        return _exact_rank(fw)
    s = np.linalg.svd(rigidity_matrix(fw), compute_uv=False)
    return int((s > fw.eps * s[0]).sum())
