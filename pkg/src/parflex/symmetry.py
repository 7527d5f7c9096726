"""Cyclic symmetry: validation, symmetric classes, symmetric flexes and
symmetric NAC-colorings.

A framework is Cn-symmetric under a vertex permutation ``omega`` of order
``n`` when ``rho(omega v) = theta rho(v)`` for the rotation ``theta`` by
``2 pi / n`` about the origin.  Rotations default to clockwise, matching
:func:`parflex.flex.rot`; pass ``orientation="ccw"`` for the other sense.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .apc import APCPartition, DisjointSet, compute_apc
from .core import Framework, Graph, Placement, edge_key
from .errors import RigidError, SymmetryError
from .flex import FlexParametrization, decompose
from .nac import BLUE, RED, EdgeColoring, color_components, colorings_from_apc, is_nac

ORIENTATIONS = ("cw", "ccw")
# exact rotations exist over the rationals only for these orders
_EXACT_ORDERS = {1: (1, 0), 2: (-1, 0), 4: (0, 1)}


class CyclicAction:
    """Automorphism ``omega`` generating a cyclic group of order ``n``,
    realized by rotation through ``2 pi / n``."""

    def __init__(self, n: int, omega: Mapping[int, int], orientation: str = "cw"):
        if n < 2:
            raise SymmetryError(f"order must be at least 2, got {n}")
        if orientation not in ORIENTATIONS:
            raise SymmetryError(f"orientation must be 'cw' or 'ccw', got {orientation!r}")
        omega = {int(k): int(v) for k, v in omega.items()}
        if sorted(omega.values()) != sorted(omega):
            raise SymmetryError("omega is not a permutation of its vertex set")
        self.n = n
        self.omega = omega
        self.orientation = orientation

    def __repr__(self):
        return f"CyclicAction(n={self.n}, {self.orientation}, moved={sum(1 for k, v in self.omega.items() if k != v)})"

    def __call__(self, v: int) -> int:
        return self.omega[v]

    def power(self, k: int) -> dict[int, int]:
        k %= self.n
        out = {v: v for v in self.omega}
        for _ in range(k):
            out = {v: self.omega[w] for v, w in out.items()}
        return out

    def edge_image(self, e) -> tuple[int, int]:
        return edge_key(self.omega[e[0]], self.omega[e[1]])

    def orbit(self, v: int) -> list[int]:
        out = [v]
        w = self.omega[v]
        while w != v:
            out.append(w)
            w = self.omega[w]
        return out

    def theta_cs(self, exact: bool = False):
        """``(cos, sin)`` of the signed rotation angle (negative for clockwise)."""
        if exact and self.n in _EXACT_ORDERS:
            c, s = _EXACT_ORDERS[self.n]
            return c, (-s if self.orientation == "cw" else s)
        a = 2 * math.pi / self.n
        return math.cos(a), (-math.sin(a) if self.orientation == "cw" else math.sin(a))

    @property
    def theta(self) -> np.ndarray:
        c, s = self.theta_cs()
        return np.array([[c, -s], [s, c]])

    def rotate(self, p, exact: bool = False):
        c, s = self.theta_cs(exact)
        return (c * p[0] - s * p[1], s * p[0] + c * p[1])


def _tolerance(fw: Framework, action: CyclicAction) -> float:
    if fw.tolerance.exact:
        return 0 if action.n in _EXACT_ORDERS else 1e-12
    return fw.eps


@dataclass(frozen=True)
class SymmetryVerdict:
    valid: bool
    problems: tuple[str, ...] = ()
    invariant_vertices: tuple[int, ...] = ()
    max_residual: float = 0.0

    def __bool__(self):
        return self.valid


def check_automorphism(graph: Graph, action: CyclicAction) -> None:
    if set(action.omega) != set(graph.vertices):
        raise SymmetryError("omega must be defined on exactly the graph's vertices")
    for u, v in graph.edges:
        if not graph.has_edge(action(u), action(v)):
            raise SymmetryError(f"omega is not an automorphism: edge {(u, v)} maps to a non-edge")


def validate_cn_symmetric(fw: Framework, action: CyclicAction) -> SymmetryVerdict:
    """Check the graph conditions and placement equivariance.

    Raises SymmetryError when omega is not an automorphism; everything else
    is reported as a problem in the verdict.
    """
    g = fw.graph
    check_automorphism(g, action)
    problems = []
    if any(v != w for v, w in action.power(action.n).items()):
        problems.append(f"omega^{action.n} is not the identity")
    invariant = tuple(v for v in g.vertices if action(v) == v)
    inv_set = set(invariant)
    for u, v in g.edges:
        if u in inv_set and v in inv_set:
            problems.append(f"invariant vertices {u} and {v} are adjacent")
    for k in range(1, action.n):
        pk = action.power(k)
        for v in g.vertices:
            if pk[v] == v and v not in inv_set:
                problems.append(f"vertex {v} is fixed by omega^{k} but not by omega")
    exact = fw.tolerance.exact
    tol = _tolerance(fw, action)
    worst = 0.0
    for v in invariant:
        p = fw.placement[v]
        if abs(p[0]) > tol or abs(p[1]) > tol:
            problems.append(f"invariant vertex {v} is not placed at the origin")
    for v in g.vertices:
        want = action.rotate(fw.placement[v], exact)
        got = fw.placement[action(v)]
        r = max(abs(got[0] - want[0]), abs(got[1] - want[1]))
        worst = max(worst, float(r))
        if r > tol:
            problems.append(f"placement of {action(v)} is not the rotated placement of {v}")
    return SymmetryVerdict(not problems, tuple(dict.fromkeys(problems)), invariant, worst)


def recentered(fw: Framework, center: Sequence) -> Framework:
    """Translate so that ``center`` becomes the origin."""
    cx, cy = fw.tolerance.coerce(center[0]), fw.tolerance.coerce(center[1])
    return fw.with_placement({v: (x - cx, y - cy) for v, (x, y) in fw.placement.items()})


def action_from_rotation(fw: Framework, n: int, orientation: str = "cw") -> CyclicAction:
    """Infer omega from the placement: ``omega(v)`` is the vertex sitting at
    the rotated position of ``v``.  The rotation center is the origin."""
    probe = CyclicAction(n, {v: v for v in fw.graph.vertices}, orientation)
    exact = fw.tolerance.exact
    tol = max(_tolerance(fw, probe), 1e-12 if not exact else 0)
    scale = tol if tol > 0 else None
    index: dict = {}
    for v, p in fw.placement.items():
        index.setdefault(_cell(p, scale), []).append(v)
    omega = {}
    for v in fw.graph.vertices:
        q = probe.rotate(fw.placement[v], exact)
        hit = [w for key in _neighbor_cells(q, scale) for w in index.get(key, ())
               if max(abs(fw.placement[w][0] - q[0]), abs(fw.placement[w][1] - q[1])) <= tol]
        if len(hit) != 1:
            raise SymmetryError(f"no unique vertex at the rotated position of {v}")
        omega[v] = hit[0]
    return CyclicAction(n, omega, orientation)


def _cell(p, scale):
    if scale is None:
        return (p[0], p[1])
    return (math.floor(float(p[0]) / (4 * scale)), math.floor(float(p[1]) / (4 * scale)))


def _neighbor_cells(q, scale):
    if scale is None:
        return [(q[0], q[1])]
    cx, cy = _cell(q, scale)
    return [(cx + dx, cy + dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)]


def compute_cn_apc(graph: Graph, action: CyclicAction, base: APCPartition | None = None) -> APCPartition:
    """Merge the classes of ``base`` that omega maps onto each other."""
    base = compute_apc(graph) if base is None else base
    dsu = DisjointSet(len(base))
    for e in graph.edges:
        dsu.union(base.class_of[e], base.class_of[action.edge_image(e)])
    merged: dict[int, list] = {}
    for i, cls in enumerate(base.classes):
        merged.setdefault(dsu.find(i), []).extend(cls)
    return APCPartition(graph, merged.values(), kind="cn")


def cn_class_map(base: APCPartition, cn: APCPartition) -> list[int]:
    """Symmetric class of each base class."""
    return [cn.class_of[cls[0]] for cls in base.classes]


def evaluate_cn_flex(fp: FlexParametrization, action: CyclicAction, cn_partition: APCPartition,
                     t: Sequence[float]) -> Placement:
    """Flex that turns all members of a symmetric class by one shared angle,
    recentered on the orbit of the base vertex so the result stays
    equivariant."""
    if len(cn_partition) < 2:
        raise RigidError("Cn-symmetric rigid: fewer than two symmetric classes")
    if len(t) != len(cn_partition):
        raise ValueError(f"expected {len(cn_partition)} angles, got {len(t)}")
    if t[0] != 0:
        raise ValueError("the angle of symmetric class 0 is fixed at 0")
    cmap = cn_class_map(fp.partition, cn_partition)
    angles = [t[c] for c in cmap]
    pos = fp.positions(angles)
    row = {v: k for k, v in enumerate(fp.vertices)}
    shift = np.mean([pos[row[action.power(j)[fp.base]]] for j in range(action.n)], axis=0)
    pos = pos - shift
    return Placement({v: (float(pos[k, 0]), float(pos[k, 1])) for k, v in enumerate(fp.vertices)})


def cn_flex(fw: Framework, action: CyclicAction):
    """Convenience: decomposition and symmetric classes for ``fw``."""
    base = compute_apc(fw.graph)
    fp = decompose(fw, base)
    return fp, compute_cn_apc(fw.graph, action, base)


def equivariance_residual(placement: Mapping, action: CyclicAction) -> float:
    worst = 0.0
    for v in action.omega:
        want = action.rotate(placement[v])
        got = placement[action(v)]
        worst = max(worst, abs(float(got[0]) - want[0]), abs(float(got[1]) - want[1]))
    return worst


@dataclass(frozen=True)
class CnNACVerdict:
    is_cn_nac: bool
    reason: str = ""
    edges: tuple = field(default=())

    def __bool__(self):
        return self.is_cn_nac


def partially_invariant_components(graph: Graph, action: CyclicAction, comp: dict) -> set[int]:
    """Ids of components mapped onto themselves by some nontrivial power of omega."""
    members: dict[int, set] = {}
    for v, c in comp.items():
        members.setdefault(c, set()).add(v)
    out = set()
    for k in range(1, action.n):
        pk = action.power(k)
        for c, vs in members.items():
            if c not in out and {pk[v] for v in vs} == vs:
                out.add(c)
    return out


def is_cn_symmetric_nac(graph: Graph, action: CyclicAction, coloring) -> CnNACVerdict:
    col = coloring if isinstance(coloring, EdgeColoring) else EdgeColoring(coloring)
    nac = is_nac(graph, col)
    if not nac:
        return CnNACVerdict(False, f"not a NAC-coloring: {nac.reason}", nac.witness_cycle)
    for e in graph.edges:
        if col[e] != col[action.edge_image(e)]:
            return CnNACVerdict(False, f"edge {e} and its image {action.edge_image(e)} differ in color", (e,))
    for color in (RED, BLUE):
        comp = color_components(graph, col, color)
        fixed = partially_invariant_components(graph, action, comp)
        for u, v in graph.edges:
            if comp[u] != comp[v] and comp[u] in fixed and comp[v] in fixed:
                return CnNACVerdict(
                    False, f"edge {(u, v)} joins two partially invariant {color} components", ((u, v),)
                )
    return CnNACVerdict(True)


def cn_colorings(cn_partition: APCPartition):
    """Surjective colorings constant on symmetric classes (class 0 red)."""
    return colorings_from_apc(cn_partition)
