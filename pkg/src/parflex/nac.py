"""NAC-colorings: red/blue edge colorings without almost-monochromatic cycles.

A cycle with exactly one red edge ``uv`` is a blue path from ``u`` to ``v``
plus that edge, so a surjective coloring is NAC exactly when no edge joins
two vertices of one component of the other color.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping

from .apc import APCPartition
from .core import Edge, Graph, edge_key

RED, BLUE = "red", "blue"
MAX_ENUMERATION_VERTICES = 16


class EdgeColoring(Mapping):
    """Total map from edges to ``"red"`` or ``"blue"``."""

    __slots__ = ("_color",)

    def __init__(self, colors: Mapping | Iterable):
        items = colors.items() if isinstance(colors, Mapping) else colors
        out = {}
        for e, c in items:
            if c not in (RED, BLUE):
                raise ValueError(f"color of {e} must be 'red' or 'blue', got {c!r}")
            out[edge_key(*e)] = c
        self._color = out

    @classmethod
    def from_red(cls, graph: Graph, red: Iterable[Edge]) -> "EdgeColoring":
        reds = {edge_key(*e) for e in red}
        return cls({e: (RED if e in reds else BLUE) for e in graph.edges})

    def __getitem__(self, e):
        return self._color[edge_key(*e)]

    def __iter__(self):
        return iter(self._color)

    def __len__(self):
        return len(self._color)

    def __repr__(self):
        reds = sum(1 for c in self._color.values() if c == RED)
        return f"EdgeColoring(red={reds}, blue={len(self._color) - reds})"

    def swapped(self) -> "EdgeColoring":
        return EdgeColoring({e: (BLUE if c == RED else RED) for e, c in self._color.items()})

    def edges_of(self, color: str) -> list[Edge]:
        return sorted(e for e, c in self._color.items() if c == color)

    def is_surjective(self) -> bool:
        return len(set(self._color.values())) == 2

    def check_total(self, graph: Graph) -> None:
        if set(self._color) != set(graph.edges):
            raise ValueError("coloring must assign a color to exactly the graph's edges")


def _coerce(graph: Graph, coloring) -> EdgeColoring:
    col = coloring if isinstance(coloring, EdgeColoring) else EdgeColoring(coloring)
    col.check_total(graph)
    return col


def color_components(graph: Graph, coloring: EdgeColoring, color: str) -> dict[int, int]:
    """Component id (its smallest vertex) of every vertex in the subgraph of
    ``color`` edges; isolated vertices are their own component."""
    comp: dict[int, int] = {}
    for s in graph.vertices:
        if s in comp:
            continue
        comp[s] = s
        stack = [s]
        while stack:
            x = stack.pop()
            for y in graph.neighbors(x):
                if y not in comp and coloring[(x, y)] == color:
                    comp[y] = s
                    stack.append(y)
    return comp


def color_path(graph: Graph, coloring: EdgeColoring, color: str, src: int, dst: int) -> list[int] | None:
    """Shortest path from ``src`` to ``dst`` using only ``color`` edges."""
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = [x]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for y in graph.neighbors(x):
            if y not in prev and coloring[(x, y)] == color:
                prev[y] = x
                queue.append(y)
    return None


@dataclass(frozen=True)
class NACVerdict:
    is_nac: bool
    reason: str = ""
    witness_cycle: tuple[int, ...] = ()

    def __bool__(self):
        return self.is_nac


def is_nac(graph: Graph, coloring) -> NACVerdict:
    """Decide whether a coloring is a NAC-coloring.

    On failure the witness is a cycle with exactly one edge of some color,
    listed so that its last vertex joins back to the first via that edge.
    """
    col = _coerce(graph, coloring)
    if not col.is_surjective():
        return NACVerdict(False, "coloring uses only one color")
    comps = {RED: color_components(graph, col, RED), BLUE: color_components(graph, col, BLUE)}
    for u, v in graph.edges:
        c = col[(u, v)]
        other = BLUE if c == RED else RED
        if comps[other][u] == comps[other][v]:
            path = color_path(graph, col, other, u, v)
            return NACVerdict(False, f"cycle with a single {c} edge {(u, v)}", tuple(path))
    return NACVerdict(True)


@dataclass(frozen=True)
class CartesianVerdict:
    is_cartesian: bool
    is_nac: bool
    reason: str = ""
    pair: tuple[int, int] | None = None
    red_path: tuple[int, ...] = ()
    blue_path: tuple[int, ...] = ()
    witness_cycle: tuple[int, ...] = ()

    def __bool__(self):
        return self.is_cartesian


def is_cartesian_nac(graph: Graph, coloring) -> CartesianVerdict:
    """NAC-coloring where no two vertices share both a red and a blue
    component.  The witness is such a pair with one path of each color."""
    col = _coerce(graph, coloring)
    nac = is_nac(graph, col)
    if not nac:
        return CartesianVerdict(False, False, nac.reason, witness_cycle=nac.witness_cycle)
    red = color_components(graph, col, RED)
    blue = color_components(graph, col, BLUE)
    seen: dict[tuple[int, int], int] = {}
    for v in graph.vertices:
        key = (red[v], blue[v])
        if key in seen:
            u = seen[key]
            return CartesianVerdict(
                False, True, f"vertices {u} and {v} are joined by a red and a blue path", (u, v),
                tuple(color_path(graph, col, RED, u, v)), tuple(color_path(graph, col, BLUE, u, v)),
            )
        seen[key] = v
    return CartesianVerdict(True, True)


def induced_cycles(graph: Graph) -> Iterator[tuple[int, ...]]:
    """Every chordless cycle once, starting at its smallest vertex."""
    has = graph.has_edge
    for s in graph.vertices:
        stack = [[s, y] for y in graph.neighbors(s) if y > s]
        while stack:
            path = stack.pop()
            last = path[-1]
            for y in graph.neighbors(last):
                if y <= s or y in path:
                    continue
                if any(has(y, p) for p in path[1:-1]):
                    continue
                if has(y, s):
                    if path[1] < y:
                        yield tuple(path + [y])
                else:
                    stack.append(path + [y])


def color_changes(coloring: EdgeColoring, cycle) -> int:
    k = len(cycle)
    cols = [coloring[(cycle[i], cycle[(i + 1) % k])] for i in range(k)]
    return sum(1 for i in range(k) if cols[i] != cols[i - 1])


def verify_color_changes(graph: Graph, coloring, max_vertices: int = MAX_ENUMERATION_VERTICES) -> bool:
    """True when every non-monochromatic induced cycle changes color at
    least three times.  Enumerates induced cycles, so only small graphs are
    accepted."""
    if graph.n > max_vertices:
        raise ValueError(
            f"graph has {graph.n} vertices; induced-cycle enumeration is limited to {max_vertices}"
        )
    col = _coerce(graph, coloring)
    if not col.is_surjective():
        raise ValueError("coloring must use both colors")
    for cyc in induced_cycles(graph):
        ch = color_changes(col, cyc)
        if 0 < ch < 3:
            return False
    return True


def colorings_from_apc(partition: APCPartition) -> Iterator[EdgeColoring]:
    """All surjective colorings constant on classes, one per red/blue swap
    pair: class 0 is always red."""
    ell = len(partition)
    if ell < 2:
        return
    for bits in product((RED, BLUE), repeat=ell - 1):
        if BLUE not in bits:
            continue
        colors = (RED,) + bits
        yield EdgeColoring({e: colors[i] for i, cls in enumerate(partition.classes) for e in cls})
