"""Graphs, placements and frameworks, plus the cycle enumeration they rest on.

Coordinates are either floats or :class:`fractions.Fraction` depending on the
framework's :class:`ToleranceConfig`.  All geometric predicates compare against
an absolute tolerance ``eps``; in exact mode ``eps`` may be zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DisconnectedGraphError, FrameworkError, GraphError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Return the canonical (smaller, larger) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Finite simple undirected graph on integer vertex ids.

    Vertices are kept in numeric order and edges as sorted ``(u, v)`` pairs
    with ``u < v``.  The graph is immutable; every derived structure is
    computed once on first use.

    Parameters
    ----------
    edges : iterable of pairs
        Edge list.  Loops and repeated edges are rejected.
    vertices : iterable of int, optional
        Vertex ids.  Defaults to the endpoints of ``edges``.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_adjset", "_vindex", "_eindex", "_csr")

    def __init__(self, edges: Iterable[Sequence[int]], vertices: Iterable[int] | None = None):
        seen: set[Edge] = set()
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {tuple(e)!r} does not have two endpoints")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = edge_key(u, v)
            if key in seen:
                raise GraphError(f"repeated edge {key}")
            seen.add(key)
        if vertices is None:
            vset = {x for e in seen for x in e}
        else:
            vset = {int(x) for x in vertices}
            for e in seen:
                for x in e:
                    if x not in vset:
                        raise GraphError(f"edge {e} uses undeclared vertex {x}")
        if any(x < 0 for x in vset):
            raise GraphError("vertex ids must be nonnegative integers")
        self._vertices = tuple(sorted(vset))
        self._edges = tuple(sorted(seen))
        adj: dict[int, list[int]] = {v: [] for v in self._vertices}
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._adjset = {v: frozenset(ns) for v, ns in self._adj.items()}
        self._vindex = {v: i for i, v in enumerate(self._vertices)}
        self._eindex = {e: i for i, e in enumerate(self._edges)}
        self._csr = None

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adjset[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def has_vertex(self, v: int) -> bool:
        return v in self._vindex

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjset.get(u, ())

    def edge_index(self, u: int, v: int) -> int:
        return self._eindex[edge_key(u, v)]

    def vertex_index(self, v: int) -> int:
        return self._vindex[v]

    def components(self, skip: Iterable[Edge] | None = None) -> list[list[int]]:
        """Connected components, optionally ignoring the edges in ``skip``.

        Components are sorted lists, ordered by their smallest vertex.
        """
        banned = {edge_key(*e) for e in skip} if skip is not None else set()
        label: dict[int, int] = {}
        comps: list[list[int]] = []
        for s in self._vertices:
            if s in label:
                continue
            label[s] = len(comps)
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in label and (not banned or edge_key(x, y) not in banned):
                        label[y] = len(comps)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def require_connected(self) -> None:
        if self.n == 0:
            raise DisconnectedGraphError("graph has no vertices")
        comps = self.components()
        if len(comps) > 1:
            raise DisconnectedGraphError(
                f"graph is disconnected ({len(comps)} components; "
                f"e.g. {comps[0][:5]} and {comps[1][:5]})"
            )

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        return Graph([(mapping[u], mapping[v]) for u, v in self._edges],
                     vertices=[mapping[v] for v in self._vertices])

    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Compressed adjacency over vertex positions.

        Returns ``(indptr, indices, eids)``: neighbors of the vertex at
        position ``i`` are ``indices[indptr[i]:indptr[i+1]]`` (ascending) and
        ``eids`` holds the matching edge indices.
        """
        if self._csr is None:
            n, m = self.n, self.m
            vi = self._vindex
            ends = np.array([(vi[u], vi[v]) for u, v in self._edges], dtype=np.int64).reshape(m, 2)
            src = np.concatenate([ends[:, 0], ends[:, 1]])
            dst = np.concatenate([ends[:, 1], ends[:, 0]])
            eid = np.concatenate([np.arange(m, dtype=np.int64)] * 2)
            order = np.lexsort((dst, src))
            indices, eids = dst[order], eid[order]
            indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
            self._csr = (indptr, indices, eids)
        return self._csr

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class ToleranceConfig:
    """Absolute tolerance and number mode for geometric predicates."""

    eps: float | Fraction = 1e-9
    mode: str = "float"

    def __post_init__(self):
        if self.mode not in ("float", "exact"):
            raise ValueError(f"mode must be 'float' or 'exact', got {self.mode!r}")
        if self.eps < 0:
            raise ValueError("eps must be nonnegative")
        if self.eps == 0 and self.mode != "exact":
            raise ValueError("eps = 0 is only allowed in exact mode")

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def coerce(self, x) -> float | Fraction:
        """Convert a coordinate to this mode's number type."""
        if self.exact:
            if isinstance(x, float):
                # decimal intent: 0.1 means 1/10
                return Fraction(repr(x))
            return Fraction(x)
        return float(x)


EXACT = ToleranceConfig(eps=0, mode="exact")


def to_fraction(x) -> Fraction:
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


# -- small vector helpers working for floats and Fractions alike --

def vsub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def vadd(p, q):
    return (p[0] + q[0], p[1] + q[1])


def cross(p, q):
    return p[0] * q[1] - p[1] * q[0]


def dot(p, q):
    return p[0] * q[0] + p[1] * q[1]


def signed_area(a, b, c):
    """Signed area of triangle abc (positive when counterclockwise)."""
    return cross(vsub(b, a), vsub(c, a)) / 2


def close(p, q, eps) -> bool:
    return abs(p[0] - q[0]) <= eps and abs(p[1] - q[1]) <= eps


def is_zero(p, eps) -> bool:
    return abs(p[0]) <= eps and abs(p[1]) <= eps


class Placement(Mapping):
    """Immutable map from vertex id to a point ``(x, y)``."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Mapping[int, Sequence]):
        self._coords = {int(v): (p[0], p[1]) for v, p in coords.items()}

    def __getitem__(self, v):
        return self._coords[v]

    def __iter__(self):
        return iter(self._coords)

    def __len__(self):
        return len(self._coords)

    def __repr__(self):
        return f"Placement({len(self._coords)} points)"

    def as_array(self, order: Sequence[int]) -> np.ndarray:
        return np.array([[float(self._coords[v][0]), float(self._coords[v][1])] for v in order])


class Framework:
    """A graph together with a placement and a tolerance configuration.

    Coordinates are coerced to the number type of ``tolerance.mode``.  The
    placement must cover exactly the vertex set and separate the endpoints of
    every edge.
    """

    __slots__ = ("graph", "placement", "tolerance")

    def __init__(self, graph: Graph, placement: Mapping[int, Sequence], tolerance: ToleranceConfig | None = None):
        tol = tolerance if tolerance is not None else ToleranceConfig()
        keys = set(placement.keys())
        if keys != set(graph.vertices):
            missing = sorted(set(graph.vertices) - keys)[:5]
            extra = sorted(keys - set(graph.vertices))[:5]
            raise FrameworkError(f"placement does not match vertex set (missing {missing}, extra {extra})")
        coords = {v: (tol.coerce(placement[v][0]), tol.coerce(placement[v][1])) for v in graph.vertices}
        for u, v in graph.edges:
            if close(coords[u], coords[v], tol.eps):
                raise FrameworkError(f"edge {(u, v)} has coincident endpoints")
        self.graph = graph
        self.placement = Placement(coords)
        self.tolerance = tol

    @property
    def eps(self):
        return self.tolerance.eps

    def edge_vector(self, u: int, v: int):
        """ρ(v) − ρ(u)."""
        return vsub(self.placement[v], self.placement[u])

    def with_placement(self, coords: Mapping[int, Sequence]) -> "Framework":
        return Framework(self.graph, coords, self.tolerance)

    def __repr__(self):
        return f"Framework(n={self.graph.n}, m={self.graph.m}, mode={self.tolerance.mode})"


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cycle so the smallest vertex is first and the smaller
    of its two neighbors comes second."""
    k = len(cycle)
    i = min(range(k), key=lambda j: cycle[j])
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    bwd = tuple(cycle[(i - j) % k] for j in range(k))
    return fwd if fwd[1] < bwd[1] else bwd


@dataclass(frozen=True)
class CycleList:
    triangles: tuple[tuple[int, int, int], ...] = ()
    induced4cycles: tuple[tuple[int, int, int, int], ...] = ()


def enumerate_cycles(graph: Graph) -> CycleList:
    """All triangles and all induced 4-cycles, each once in canonical form.

    Triangles come from intersecting endpoint neighborhoods of each edge.
    Induced 4-cycles come from non-adjacent pairs with two or more common
    neighbors that are themselves non-adjacent.
    """
    adjset = graph.neighbor_set
    triangles = []
    for u, v in graph.edges:
        for w in sorted(adjset(u) & adjset(v)):
            if w > v:
                triangles.append((u, v, w))

    common: dict[Edge, list[int]] = {}
    for w in graph.vertices:
        ns = graph.neighbors(w)
        for a, c in combinations(ns, 2):
            if c not in adjset(a):
                common.setdefault((a, c), []).append(w)
    quads = set()
    for (a, c), ws in common.items():
        for b, d in combinations(ws, 2):
            if d not in adjset(b):
                quads.add(canonical_cycle((a, b, c, d)))
    return CycleList(tuple(sorted(triangles)), tuple(sorted(quads)))


def all_four_cycles(graph: Graph) -> list[tuple[int, int, int, int]]:
    """Every 4-cycle subgraph (chords allowed), canonical and sorted."""
    adjset = graph.neighbor_set
    found = set()
    for a, c in combinations(graph.vertices, 2):
        ws = sorted(adjset(a) & adjset(c))
        for b, d in combinations(ws, 2):
            found.add(canonical_cycle((a, b, c, d)))
    return sorted(found)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the parallelogram-placement check.

    ``coincident_pairs`` lists vertex pairs placed at the same point,
    ``non_parallelograms`` induced 4-cycles whose alternating vector sum is
    nonzero, and ``degenerate_cycles`` parallelograms with all four vertices
    on a line.
    """

    coincident_pairs: tuple[Edge, ...] = ()
    non_parallelograms: tuple[tuple[int, int, int, int], ...] = ()
    degenerate_cycles: tuple[tuple[int, int, int, int], ...] = ()
    cycles_checked: int = 0

    @property
    def injective(self) -> bool:
        return not self.coincident_pairs

    @property
    def valid(self) -> bool:
        return not (self.coincident_pairs or self.non_parallelograms or self.degenerate_cycles)

    def __bool__(self) -> bool:
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return f"parallelogram placement ({self.cycles_checked} induced 4-cycles)"
        parts = []
        if self.coincident_pairs:
            parts.append(f"{len(self.coincident_pairs)} coincident vertex pairs")
        if self.non_parallelograms:
            parts.append(f"{len(self.non_parallelograms)} induced 4-cycles are not parallelograms")
        if self.degenerate_cycles:
            parts.append(f"{len(self.degenerate_cycles)} degenerate 4-cycles")
        return "not a parallelogram placement: " + ", ".join(parts)


def coincident_pairs(fw: Framework) -> list[Edge]:
    """Vertex pairs whose placed points agree within eps in both coordinates."""
    eps = fw.eps
    pts = fw.placement
    out = []
    if eps == 0:
        byp: dict = {}
        for v in fw.graph.vertices:
            byp.setdefault(pts[v], []).append(v)
        for vs in byp.values():
            out.extend(combinations(vs, 2))
        return sorted(out)
    buckets: dict[tuple[int, int], list[int]] = {}
    for v in fw.graph.vertices:
        x, y = pts[v]
        buckets.setdefault((math.floor(x / eps), math.floor(y / eps)), []).append(v)
    for (bx, by), vs in buckets.items():
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                other = buckets.get((bx + dx, by + dy))
                if not other:
                    continue
                for u in vs:
                    for w in other:
                        if u < w and close(pts[u], pts[w], eps):
                            out.append((u, w))
    return sorted(set(out))


def parallelogram_defect(fw: Framework, cycle: Sequence[int]):
    """ρ(u) − ρ(v) + ρ(w) − ρ(z) for the 4-cycle (u, v, w, z)."""
    p = fw.placement
    u, v, w, z = cycle
    return (p[u][0] - p[v][0] + p[w][0] - p[z][0], p[u][1] - p[v][1] + p[w][1] - p[z][1])


def is_collinear_quad(fw: Framework, cycle: Sequence[int]) -> bool:
    p = fw.placement
    u, v, w, z = cycle
    eps = fw.eps
    return abs(signed_area(p[u], p[v], p[w])) <= eps and abs(signed_area(p[u], p[v], p[z])) <= eps


def validate_parallelogram_placement(fw: Framework, cycles: CycleList | None = None) -> ValidationReport:
    """Check that the placement is injective and every induced 4-cycle is a
    non-degenerate parallelogram.  Failures are collected, never raised."""
    cycles = cycles if cycles is not None else enumerate_cycles(fw.graph)
    bad, flat = [], []
    for q in cycles.induced4cycles:
        if not is_zero(parallelogram_defect(fw, q), fw.eps):
            bad.append(q)
        elif is_collinear_quad(fw, q):
            flat.append(q)
    return ValidationReport(
        coincident_pairs=tuple(coincident_pairs(fw)),
        non_parallelograms=tuple(bad),
        degenerate_cycles=tuple(flat),
        cycles_checked=len(cycles.induced4cycles),
    )


def degenerate_triangles(fw: Framework, cycles: CycleList | None = None) -> list[tuple[int, int, int]]:
    """Triangles whose placed vertices are collinear within eps."""
    cycles = cycles if cycles is not None else enumerate_cycles(fw.graph)
    p = fw.placement
    return [t for t in cycles.triangles if abs(signed_area(p[t[0]], p[t[1]], p[t[2]])) <= fw.eps]


@dataclass(frozen=True)
class AssociatedComplex:
    """Two-dimensional simplicial complex built from 3- and 4-cycles.

    ``edges`` contains the graph edges plus the diagonals of all 4-cycles,
    ``faces`` the triangles of the graph plus the triples spanned by three
    consecutive vertices of an induced 4-cycle.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    faces: tuple[tuple[int, int, int], ...]

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)


def associated_complex(graph: Graph) -> AssociatedComplex:
    cyc = enumerate_cycles(graph)
    edges = set(graph.edges)
    for a, b, c, d in all_four_cycles(graph):
        edges.add(edge_key(a, c))
        edges.add(edge_key(b, d))
    faces = {tuple(sorted(t)) for t in cyc.triangles}
    for q in cyc.induced4cycles:
        for i in range(4):
            faces.add(tuple(sorted((q[i], q[(i + 1) % 4], q[(i + 2) % 4]))))
    return AssociatedComplex(graph.vertices, tuple(sorted(edges)), tuple(sorted(faces)))


def complete_graph(n: int) -> Graph:
    return Graph(list(combinations(range(n), 2)), vertices=range(n))


def cycle_graph(n: int) -> Graph:
    return Graph([(i, (i + 1) % n) for i in range(n)], vertices=range(n))
