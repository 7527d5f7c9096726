"""Angle-preserving classes, ribbons, K_{2,s} obstructions and bracing.

Two edges are in the same angle-preserving class when they are linked by a
chain of "shares a triangle" and "opposite in a 4-cycle" steps.  Ribbons use
only the 4-cycle step.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _accel
from .core import (
    Edge,
    Framework,
    Graph,
    ValidationReport,
    edge_key,
    enumerate_cycles,
    validate_parallelogram_placement,
)
from .errors import PartitionError, RigidError


class DisjointSet:
    """Union-find over ``0..size-1`` with union by rank and path compression."""

    __slots__ = ("parent", "rank", "sets")

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.sets = size

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.sets -= 1
        return True

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return sorted(out.values())


class APCPartition:
    """Partition of a graph's edges into classes with canonical labels.

    Class ``i`` is the one whose smallest edge is the ``i``-th smallest among
    the classes' smallest edges; edges inside a class are sorted.
    """

    __slots__ = ("graph", "classes", "class_of", "kind")

    def __init__(self, graph: Graph, classes: Iterable[Iterable[Edge]], kind: str = "apc"):
        norm = [tuple(sorted(edge_key(*e) for e in c)) for c in classes]
        norm = [c for c in norm if c]
        norm.sort(key=lambda c: c[0])
        class_of: dict[Edge, int] = {}
        for i, c in enumerate(norm):
            for e in c:
                if e in class_of:
                    raise PartitionError(f"edge {e} appears in two classes")
                class_of[e] = i
        self.graph = graph
        self.classes = tuple(norm)
        self.class_of = class_of
        self.kind = kind

    @classmethod
    def from_roots(cls, graph: Graph, roots: Sequence[int], kind: str = "apc") -> "APCPartition":
        roots = roots.tolist() if hasattr(roots, "tolist") else roots
        groups: dict[int, list[Edge]] = {}
        for e, r in zip(graph.edges, roots):
            groups.setdefault(r, []).append(e)
        # graph.edges is sorted, so every group already is
        self = cls.__new__(cls)
        self.graph = graph
        self.classes = tuple(sorted((tuple(c) for c in groups.values()), key=lambda c: c[0]))
        self.class_of = {e: i for i, c in enumerate(self.classes) for e in c}
        self.kind = kind
        return self

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __eq__(self, other):
        return isinstance(other, APCPartition) and self.classes == other.classes

    def __hash__(self):
        return hash(self.classes)

    def __repr__(self):
        return f"APCPartition({self.kind}, sizes={self.sizes()})"

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def of(self, u: int, v: int) -> int:
        return self.class_of[edge_key(u, v)]

    def check_graph(self, graph: Graph) -> None:
        """Raise :class:`PartitionError` unless this partitions ``graph``'s edges."""
        if set(self.class_of) != set(graph.edges):
            extra = sorted(set(self.class_of) - set(graph.edges))[:3]
            missing = sorted(set(graph.edges) - set(self.class_of))[:3]
            raise PartitionError(
                f"partition does not match graph edges (missing {missing}, unknown {extra})"
            )


def _run_kernel(graph: Graph, triangles: bool, early_stop: bool, backend: str | None):
    indptr, indices, eids = graph.csr()
    return _accel.apc_kernel(indptr, indices, eids, graph.m,
                             triangles=triangles, early_stop=early_stop, backend=backend)


def compute_apc(graph: Graph, early_stop: bool = False, backend: str | None = None) -> APCPartition:
    """Angle-preserving classes of a connected graph.

    Parameters
    ----------
    graph : Graph
        Connected simple graph.
    early_stop : bool
        Return as soon as all edges have merged into one class.
    backend : {"compiled", "python"}, optional
        Kernel override, mainly for benchmarking.
    """
    graph.require_connected()
    roots, _, _ = _run_kernel(graph, True, early_stop, backend)
    return APCPartition.from_roots(graph, roots, "apc")


def compute_ribbons(graph: Graph, backend: str | None = None) -> APCPartition:
    """Ribbons: classes under the opposite-edges-of-a-4-cycle relation only."""
    roots, _, _ = _run_kernel(graph, False, False, backend)
    return APCPartition.from_roots(graph, roots, "ribbon")


@dataclass(frozen=True)
class InducedK2s:
    """Non-adjacent pair ``(u, v)`` with three or more common neighbors."""

    u: int
    v: int
    witnesses: tuple[int, ...]


def detect_induced_k2s(graph: Graph, backend: str | None = None) -> list[InducedK2s]:
    """Report every non-adjacent vertex pair with at least three common
    neighbors.  A nonempty result rules out any parallelogram placement."""
    _, _, heavy = _run_kernel(graph, True, False, backend)
    verts = graph.vertices
    out = []
    for a, b in heavy:
        u, v = verts[a], verts[b]
        if graph.has_edge(u, v):
            continue
        common = tuple(sorted(graph.neighbor_set(u) & graph.neighbor_set(v)))
        out.append(InducedK2s(u, v, common))
    return out


def separating_failures(graph: Graph, edges: Iterable[Edge]) -> list[Edge]:
    """Edges of the set whose endpoints stay connected once the set is removed."""
    edges = [edge_key(*e) for e in edges]
    removed = set(edges)
    ds = DisjointSet(graph.n)
    idx = graph.vertex_index
    for u, v in graph.edges:
        if (u, v) not in removed:
            ds.union(idx(u), idx(v))
    return [e for e in edges if ds.find(idx(e[0])) == ds.find(idx(e[1]))]


def is_edge_cut(graph: Graph, edges: Iterable[Edge]) -> bool:
    """True when removing ``edges`` separates the endpoints of each of them."""
    return not separating_failures(graph, edges)


@dataclass(frozen=True)
class PFrameworkVerdict:
    is_p_framework: bool
    placement: ValidationReport
    ribbons: APCPartition
    non_cut_ribbon: int | None = None
    witness_edge: Edge | None = None

    def __bool__(self):
        return self.is_p_framework


def is_p_framework(fw: Framework) -> PFrameworkVerdict:
    """Parallelogram placement whose ribbons are all edge cuts."""
    report = validate_parallelogram_placement(fw)
    ribbons = compute_ribbons(fw.graph)
    for i, r in enumerate(ribbons.classes):
        bad = separating_failures(fw.graph, r)
        if bad:
            return PFrameworkVerdict(False, report, ribbons, i, bad[0])
    return PFrameworkVerdict(report.valid, report, ribbons)


@dataclass(frozen=True)
class BraceSuggestion:
    """Braces that merge all classes, or the class groups that cannot meet.

    ``groups`` are the connected components of the class graph whose edges
    are the available braces; a suggestion is feasible when there is a single
    group.
    """

    braces: tuple[Edge, ...]
    groups: tuple[tuple[int, ...], ...]

    @property
    def feasible(self) -> bool:
        return len(self.groups) == 1


def brace_candidates(graph: Graph, partition: APCPartition) -> list[tuple[Edge, int, int]]:
    """Non-edge diagonals of induced 4-cycles whose two classes differ,
    as ``(diagonal, class_a, class_b)`` sorted by diagonal."""
    out = {}
    for a, b, c, d in enumerate_cycles(graph).induced4cycles:
        ca, cb = partition.of(a, b), partition.of(b, c)
        if ca == cb:
            continue
        pair = (min(ca, cb), max(ca, cb))
        for diag in (edge_key(a, c), edge_key(b, d)):
            out.setdefault(diag, pair)
    return sorted((d, p[0], p[1]) for d, p in out.items())


def suggest_braces(fw: Framework, partition: APCPartition) -> BraceSuggestion:
    """Pick ℓ−1 diagonals forming a spanning tree of the class graph.

    Candidates are scanned in lexicographic order and kept whenever they join
    two groups of classes not yet connected.
    """
    partition.check_graph(fw.graph)
    ell = len(partition)
    if ell < 2:
        raise RigidError("already rigid: the framework has a single class")
    ds = DisjointSet(ell)
    chosen = []
    for diag, ca, cb in brace_candidates(fw.graph, partition):
        if ds.union(ca, cb):
            chosen.append(diag)
    groups = tuple(tuple(g) for g in ds.groups())
    if len(groups) > 1:
        return BraceSuggestion((), groups)
    return BraceSuggestion(tuple(chosen), groups)
