"""Finite patches of periodic tilings by regular polygons.

Coordinates are built exactly in Q(sqrt 3) and vertices are deduplicated by
exact keys; the resulting framework carries float coordinates.  A patch of
extent ``e`` instantiates the translational motif on the cells
``-e <= i, j <= e`` (odd rows shifted by half a cell where the lattice asks
for it) and keeps every edge of every cell.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
import math
from fractions import Fraction
from typing import Callable

from .core import Framework, Graph, edge_key
from .errors import TilingError


# A point is four integers (ax, bx, ay, by): x = (ax + bx*sqrt3) / 4 and
# y = (ay + by*sqrt3) / 4.  Every vertex of these tilings has this form.
_R3 = 3 ** 0.5


def pt(x=(0, 0), y=(0, 0)) -> tuple[int, int, int, int]:
    """Point from ``x = x[0] + x[1] sqrt3`` and ``y`` likewise (rationals)."""
    out = []
    for c in (*x, *y):
        q = Fraction(c) * 4
        if q.denominator != 1:
            raise TilingError(f"coordinate part {c} is not a multiple of 1/4")
        out.append(int(q))
    return tuple(out)


ORIGIN = (0, 0, 0, 0)
# (cos, sin) of 0, 30 and 60 degrees
_BASE = [pt((1, 0), (0, 0)), pt((0, Fraction(1, 2)), (Fraction(1, 2), 0)), pt((Fraction(1, 2), 0), (0, Fraction(1, 2)))]


def unit(deg: int):
    """Unit vector at ``deg`` degrees; ``deg`` must be a multiple of 30."""
    if deg % 30:
        raise ValueError(f"angle {deg} is not a multiple of 30 degrees")
    k = (deg // 30) % 12
    p = _BASE[k % 3]
    # whole quarter turns: (x, y) -> (-y, x)
    for _ in range(k // 3):
        p = (-p[2], -p[3], p[0], p[1])
    return p


def padd(*pts):
    ax = bx = ay = by = 0
    for p in pts:
        ax += p[0]
        bx += p[1]
        ay += p[2]
        by += p[3]
    return (ax, bx, ay, by)


def psub(p, q):
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3])


def pscale(k, p):
    k = Fraction(k)
    out = []
    for c in p:
        q = k * c
        if q.denominator != 1:
            raise TilingError("scaled point leaves the quarter lattice")
        out.append(int(q))
    return tuple(out)


def _par(p, q, r):
    return (p[0] + q[0] - r[0], p[1] + q[1] - r[1], p[2] + q[2] - r[2], p[3] + q[3] - r[3])


def to_float(p) -> tuple[float, float]:
    return ((p[0] + p[1] * _R3) / 4, (p[2] + p[3] * _R3) / 4)


def qdot(p, q) -> tuple[int, int]:
    """Dot product times 16, as (rational part, sqrt3 part)."""
    return (p[0] * q[0] + 3 * p[1] * q[1] + p[2] * q[2] + 3 * p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] + p[3] * q[2])


def _half(n: int) -> int:
    if n % 2:
        raise TilingError("rotated point leaves the quarter lattice")
    return n // 2


HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Motif:
    """Points and edges of one translational cell.

    ``step_x`` moves one cell along a row; ``step_y`` moves one row up.  With
    ``stagger`` odd rows are shifted by half of ``step_x``.
    """

    points: dict
    edges: tuple
    step_x: tuple
    step_y: tuple
    stagger: bool = True
    # cells -e..e, or -e..e-1 when the cell is anchored at a corner so that
    # vertices span -e..e
    corner_anchored: bool = False


def _motif_triangular():
    pts = {"p": ORIGIN, "q": unit(0), "r": unit(60), "s": padd(unit(0), unit(60))}
    edges = (("p", "q"), ("q", "r"), ("r", "p"), ("q", "s"), ("s", "r"))
    return Motif(pts, edges, unit(0), unit(60), stagger=False)


def _motif_square():
    pts = {"p": ORIGIN, "q": unit(0), "r": padd(unit(0), unit(90)), "s": unit(90)}
    return Motif(pts, (("p", "q"), ("q", "r"), ("r", "s"), ("s", "p")), unit(0), unit(90), stagger=False,
                  corner_anchored=True)


def _ring():
    return {f"a{r}": unit(60 * r - 30) for r in range(1, 7)}


def _ring_edges():
    return [(f"a{r}", f"a{r % 6 + 1}") for r in range(1, 7)]


def _motif_hexagonal():
    return Motif(_ring(), tuple(_ring_edges()), pt((0, 1)), pt(y=(Fraction(3, 2), 0)))


def _motif_3636():
    p = _ring()
    e = _ring_edges()
    for r in range(1, 7):
        p[f"b{r}"] = padd(p[f"a{r}"], unit(60 * r + 30))
        e += [(f"a{r}", f"b{r}"), (f"b{r}", f"a{r % 6 + 1}")]
    p["c6"] = padd(p["b6"], unit(30))
    p["c6s"] = padd(p["b6"], unit(-30))
    p["c3"] = padd(p["b3"], unit(210))
    p["c3s"] = padd(p["b3"], unit(150))
    e += [("b6", "c6"), ("c6", "c6s"), ("c6s", "b6"), ("b3", "c3"), ("c3", "c3s"), ("c3s", "b3")]
    return Motif(p, tuple(e), pt((0, 4)), pt(y=(2, 0)))


def _wide_row_step():
    # one row up: (0, 1) plus half of (60:1) + (120:1)
    return padd(unit(90), pscale(HALF, padd(unit(60), unit(120))))


def _motif_333333_33434():
    p = _ring()
    p["a0"] = ORIGIN
    e = _ring_edges() + [("a0", f"a{r}") for r in range(1, 7)]
    for tag, anchor, d1, d2 in (("b", "a1", 0, 60), ("c", "a6", 0, -60), ("d", "a5", -60, -120)):
        p[tag + "1"] = padd(p[anchor], unit(d1))
        p[tag + "2"] = padd(p[anchor], unit(d2))
        p[tag + "3"] = _par(p[tag + "1"], p[tag + "2"], p[anchor])
        e += [(anchor, tag + "1"), (anchor, tag + "2"), (tag + "1", tag + "2"),
              (tag + "1", tag + "3"), (tag + "2", tag + "3")]
    p["d2s"] = padd(p["c1"], unit(30))
    e += [("b1", "c1"), ("b1", "d2s"), ("c1", "d2s")]
    p["b2s"] = padd(p["d1"], unit(-30))
    e += [("d1", "c2"), ("d1", "b2s"), ("c2", "b2s")]
    step_x = padd(pscale(2, padd(unit(30), unit(-30))), pscale(3, unit(0)))
    return Motif(p, tuple(e), step_x, _wide_row_step())


def _star_of_squares(p, e):
    """Hexagon ring with a triangle at each corner and squares between."""
    for r in range(1, 7):
        a = f"a{r}"
        p[f"b{r}"] = padd(p[a], unit(60 * r - 60))
        p[f"c{r}"] = padd(p[a], unit(60 * r))
        e += [(a, f"b{r}"), (f"b{r}", f"c{r}"), (f"c{r}", a)]
    e += [(f"c{r}", f"b{r % 6 + 1}") for r in range(1, 7)]


def _motif_3464_33434():
    p = _ring()
    e = _ring_edges()
    _star_of_squares(p, e)
    p["d1"] = padd(p["c1"], unit(90))
    p["d2"] = padd(p["c2"], unit(150))
    e += [("c1", "d1"), ("d1", "b2"), ("c2", "d2"), ("d2", "b3")]
    step_x = padd(pscale(2, padd(unit(30), unit(-30))), pscale(3, unit(0)))
    return Motif(p, tuple(e), step_x, _wide_row_step())


def _motif_33434_3464_3446():
    p = {"a1": pt((-HALF, 0)), "a2": pt((HALF, 0))}
    p["b1"] = padd(p["a1"], unit(60))
    p["b2"] = padd(p["a1"], unit(-60))
    e = [("a1", "a2"), ("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2")]
    p["ra1"] = padd(p["a2"], unit(30))
    p["ra2"] = padd(p["a2"], unit(-30))
    p["rb1"] = padd(p["b1"], unit(30))
    p["rb2"] = padd(p["b2"], unit(-30))
    e += [("a2", "ra1"), ("a2", "ra2"), ("ra1", "ra2"), ("b1", "rb1"), ("b2", "rb2"),
          ("ra1", "rb1"), ("ra2", "rb2")]
    p["la1"] = padd(p["a1"], unit(150))
    p["la2"] = padd(p["a1"], unit(210))
    p["lb1"] = padd(p["b1"], unit(150))
    p["lb2"] = padd(p["b2"], unit(210))
    e += [("a1", "la1"), ("a1", "la2"), ("la1", "la2"), ("b1", "lb1"), ("b2", "lb2")]
    step_x = padd(pscale(2, padd(unit(30), unit(-30))), unit(0))
    return Motif(p, tuple(e), step_x, _wide_row_step())


def _motif_3366_3636_666():
    p = _ring()
    e = _ring_edges()
    for r in range(1, 7):
        d = 60 * r - 30
        p[f"b{r}"] = padd(p[f"a{r}"], unit(d))
        e.append((f"a{r}", f"b{r}"))
        if r < 4:
            p[f"c{r}"] = padd(p[f"b{r}"], unit(d))
            p[f"cr{r}"] = padd(p[f"b{r}"], unit(d - 60))
            p[f"cl{r}"] = padd(p[f"b{r}"], unit(d + 60))
            e += [(f"b{r}", f"c{r}"), (f"b{r}", f"cl{r}"), (f"b{r}", f"cr{r}"),
                  (f"c{r}", f"cl{r}"), (f"c{r}", f"cr{r}")]
    p["f1"] = padd(p["cl1"], unit(90))
    p["f2"] = padd(p["cl2"], unit(150))
    e += [("cl1", "cr2"), ("cr2", "f1"), ("f1", "cl1"), ("cl2", "cr3"), ("cr3", "f2"), ("f2", "cl2")]
    return Motif(p, tuple(e), pt((0, 5)), pt(y=(Fraction(5, 2), 0)))


def _motif_3464_3464_3446():
    p = _ring()
    e = _ring_edges()
    _star_of_squares(p, e)
    for r in range(1, 7):
        p[f"d{r}"] = padd(p[f"b{r}"], unit(60 * r - 60))
        p[f"e{r}"] = padd(p[f"c{r}"], unit(60 * r))
        e += [(f"b{r}", f"d{r}"), (f"c{r}", f"e{r}")]
    p["f1"] = padd(p["e1"], unit(90))
    p["f2"] = padd(p["e2"], unit(150))
    e += [("e1", "d2"), ("e1", "f1"), ("d2", "f1"), ("e2", "d3"), ("e2", "f2"), ("d3", "f2")]
    step_x = padd(pscale(2, padd(unit(30), unit(-30))), pscale(6, unit(0)))
    step_y = padd(unit(90), unit(60), unit(120))
    return Motif(p, tuple(e), step_x, step_y)


TILINGS: dict[str, Callable[[], Motif]] = {
    "3^6": _motif_triangular,
    "4^4": _motif_square,
    "6^3": _motif_hexagonal,
    "3.6.3.6": _motif_3636,
    "3^6;3^2.4.3.4;3^2.4.3.4": _motif_333333_33434,
    "3.4.6.4;3^2.4.3.4": _motif_3464_33434,
    "3.3.4.3.4;3.4.6.4;3.4.4.6": _motif_33434_3464_3446,
    "3^2.6^2;3.6.3.6;6^3": _motif_3366_3636_666,
    "3.4.6.4;3.4.6.4;3.4.4.6": _motif_3464_3464_3446,
}

ALIASES = {
    "triangular": "3^6", "333333": "3^6",
    "square": "4^4", "4444": "4^4",
    "hexagonal": "6^3", "666": "6^3",
    "3636": "3.6.3.6",
    "333333-33434-33434": "3^6;3^2.4.3.4;3^2.4.3.4",
    "3464-33434": "3.4.6.4;3^2.4.3.4",
    "33434-3464-3446": "3.3.4.3.4;3.4.6.4;3.4.4.6",
    "3366-3636-666": "3^2.6^2;3.6.3.6;6^3",
    "3464-3464-3446": "3.4.6.4;3.4.6.4;3.4.4.6",
}


TRIM_MODES = ("none", "faces", "rim")
RIM_DEPTH = 2
# tilings whose classes are zones crossing the whole patch; every patch cuts
# them, so trimming would only shrink the patch
ZONAL = frozenset({"4^4", "6^3"})
HEXAGONAL_TILINGS = frozenset({"6^3", "3.6.3.6", "3.4.6.4;3^2.4.3.4", "3.3.4.3.4;3.4.6.4;3.4.4.6",
                               "3^2.6^2;3.6.3.6;6^3", "3.4.6.4;3.4.6.4;3.4.4.6"})


def canonical_name(name: str) -> str:
    key = name.strip().strip("[]").replace(" ", "")
    key = ALIASES.get(key, key)
    if key not in TILINGS:
        supported = ", ".join(sorted(set(TILINGS) | set(ALIASES)))
        raise TilingError(f"unknown tiling {name!r}; supported: {supported}")
    return key


@dataclass(frozen=True)
class TilingSpec:
    name: str
    extent: int = 2
    augment_hexagons: bool = False
    # "none", "faces" (trim_boundary) or "rim" (trim_boundary, then
    # prune_rim); None picks "none" for the square and hexagonal tilings,
    # "faces" for other tilings with hexagons left unaugmented (every
    # triangle is then its own class, so rim pruning would never stop) and
    # "rim" otherwise
    trim: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "name", canonical_name(self.name))
        if self.trim is None:
            if self.name in ZONAL:
                trim = "none"
            elif self.name in HEXAGONAL_TILINGS and not self.augment_hexagons:
                trim = "faces"
            else:
                trim = "rim"
            object.__setattr__(self, "trim", trim)
        if self.trim not in TRIM_MODES:
            raise TilingError(f"trim must be one of {', '.join(TRIM_MODES)}, got {self.trim!r}")
        if self.extent < 1:
            raise TilingError(f"extent must be at least 1, got {self.extent}")


@dataclass(frozen=True)
class Patch:
    """A generated framework with the cell and motif label of each vertex.

    ``hexagons`` lists the hexagonal faces as vertex rings; ``centers`` maps
    the vertex added inside a hexagon (after augmentation) to its ring.
    ``augmented_edges`` are the edges added for the hexagon parallelograms.
    """

    spec: TilingSpec
    framework: Framework
    provenance: dict
    hexagons: tuple = ()
    augmented_edges: frozenset = frozenset()
    centers: dict = field(default_factory=dict)
    exact: dict = field(default_factory=dict, repr=False)

    @property
    def graph(self) -> Graph:
        return self.framework.graph


def _row_extent(motif: "Motif", extent: int) -> int:
    # rows are often much shorter than cells are wide; use enough rows that
    # the patch is about as tall as it is wide
    wx = math.hypot(*to_float(motif.step_x))
    wy = math.hypot(*to_float(motif.step_y))
    return max(extent, round(extent * wx / wy))


def _cells(extent: int, rows: int, corner_anchored: bool):
    hi = 0 if corner_anchored else 1
    for j in range(-rows, rows + hi):
        for i in range(-extent, extent + hi):
            yield i, j


def generate_patch(spec: TilingSpec) -> Patch:
    """Instantiate the motif of ``spec.name`` over the cell range and merge
    coincident vertices."""
    motif = TILINGS[spec.name]()
    ids: dict = {}
    provenance: dict = {}
    raw_edges = set()
    for i, j in _cells(spec.extent, _row_extent(motif, spec.extent), motif.corner_anchored):
        shift = Fraction(2 * i + (1 if motif.stagger and j % 2 else 0), 2)
        anchor = padd(pscale(shift, motif.step_x), pscale(j, motif.step_y))
        local = {}
        for label, pt in motif.points.items():
            key = padd(anchor, pt)
            if key not in ids:
                ids[key] = len(ids)
                provenance[key] = ((i, j), label)
            local[label] = ids[key]
        for a, b in motif.edges:
            raw_edges.add(edge_key(local[a], local[b]))
    if spec.trim != "none":
        pos = {v: k for k, v in ids.items()}
        raw_edges = trim_boundary(raw_edges, pos)
        used = {v for e in raw_edges for v in e}
        ids = {k: v for k, v in ids.items() if v in used}
    patch = _assemble(spec, ids, provenance, raw_edges)
    if spec.augment_hexagons:
        patch = augment_hexagons(patch)
    if spec.trim == "rim":
        patch = prune_rim(patch)
    return patch


def _assemble(spec, ids, provenance, raw_edges, augmented=frozenset(), centers=None, hexagons=None):
    # renumber by position: bottom row first, left to right
    order = sorted(ids, key=lambda k: to_float(k)[::-1])
    new = {ids[k]: n for n, k in enumerate(order)}
    coords = {new[ids[k]]: to_float(k) for k in order}
    exact = {new[ids[k]]: k for k in order}
    prov = {new[ids[k]]: provenance[k] for k in order}
    edges = sorted(edge_key(new[u], new[v]) for u, v in raw_edges)
    aug = frozenset(edge_key(new[u], new[v]) for u, v in augmented)
    cen = {new[c]: tuple(new[v] for v in ring) for c, ring in (centers or {}).items()}
    fw = Framework(Graph(edges, vertices=range(len(order))), coords)
    if hexagons is None:
        hexes = tuple(find_hexagons(fw.graph, exact))
    else:
        hexes = tuple(sorted(_rotate_to_min(tuple(new[v] for v in ring)) for ring in hexagons))
    return Patch(spec, fw, prov, hexes, aug, cen, exact)


def find_hexagons(graph: Graph, exact: dict) -> list[tuple[int, ...]]:
    """Regular hexagonal faces: six-vertex rings around an empty center.

    Rings are listed counterclockwise from the corner with the smallest id.
    """
    at = {p: v for v, p in exact.items()}
    found = set()
    for v in graph.vertices:
        nb = graph.neighbors(v)
        for x in range(len(nb)):
            for y in range(x + 1, len(nb)):
                u, w = nb[x], nb[y]
                pv = exact[v]
                # unit edges at 120 degrees: dot product -1/2, i.e. -8 in quarter units squared
                if qdot(psub(exact[u], pv), psub(exact[w], pv)) != (-8, 0):
                    continue
                c = _par(exact[u], exact[w], pv)
                if c in at:
                    continue
                ring = _hexagon_ring(c, exact[v], at)
                if ring is None or not all(graph.has_edge(ring[k], ring[(k + 1) % 6]) for k in range(6)):
                    continue
                # u and w must be the ring neighbours of v, i.e. the angle is 120 degrees
                if u not in (ring[1], ring[5]) or w not in (ring[1], ring[5]):
                    continue
                found.add(_rotate_to_min(ring))
    return sorted(found)


def _rotate_to_min(ring):
    k = ring.index(min(ring))
    return ring[k:] + ring[:k]


def _faces(edges: set, pos: dict, rings=()):
    """Triangles, squares and hexagons of the tiling, each with its edges
    grouped into sets that a flex keeps parallel (opposite sides).

    ``rings`` adds hexagons whose centers are already vertices."""
    graph = Graph(edges)
    faces = []
    for v in graph.vertices:
        nb = [w for w in graph.neighbors(v) if w > v]
        for x in range(len(nb)):
            for y in range(x + 1, len(nb)):
                u, w = nb[x], nb[y]
                if graph.has_edge(u, w):
                    faces.append([[edge_key(v, u), edge_key(u, w), edge_key(w, v)]])
    for a in graph.vertices:
        for b in graph.neighbors(a):
            for d in graph.neighbors(a):
                if not (a < b < d):
                    continue
                ab, ad = psub(pos[b], pos[a]), psub(pos[d], pos[a])
                if qdot(ab, ad) != (0, 0):
                    continue
                c = padd(pos[b], ad)
                cv = next((w for w in graph.neighbors(b) if pos[w] == c), None)
                if cv is None or not graph.has_edge(cv, d) or cv < a:
                    continue
                faces.append([[edge_key(a, b), edge_key(cv, d)], [edge_key(b, cv), edge_key(d, a)]])
    for ring in list(find_hexagons(graph, pos)) + list(rings):
        es = [edge_key(ring[k], ring[(k + 1) % 6]) for k in range(6)]
        faces.append([[es[k], es[k + 3]] for k in range(3)])
    return faces


def trim_boundary(edges: set, pos: dict) -> set:
    """Drop the ragged rim of a patch.

    A face is kept while every group of its parallel sides contains an edge
    shared with another kept face; faces failing this are peeled until none
    remain.  Of what is left, the largest edge-connected group of faces is
    kept, and only edges of kept faces survive.
    """
    faces = _faces(edges, pos)
    alive = [True] * len(faces)
    count: dict = {}
    for f in faces:
        for group in f:
            for e in group:
                count[e] = count.get(e, 0) + 1
    changed = True
    while changed:
        changed = False
        for k, f in enumerate(faces):
            if alive[k] and not all(any(count[e] >= 2 for e in g) for g in f):
                alive[k] = False
                changed = True
                for g in f:
                    for e in g:
                        count[e] -= 1
    owner: dict = {}
    dsu = list(range(len(faces)))

    def find(x):
        while dsu[x] != x:
            dsu[x] = dsu[dsu[x]]
            x = dsu[x]
        return x

    for k, f in enumerate(faces):
        if not alive[k]:
            continue
        for g in f:
            for e in g:
                if e in owner:
                    dsu[find(k)] = find(owner[e])
                else:
                    owner[e] = k
    sizes: dict = {}
    for k in range(len(faces)):
        if alive[k]:
            sizes[find(k)] = sizes.get(find(k), 0) + 1
    if not sizes:
        raise TilingError("patch is too small: no face survives boundary trimming")
    best = max(sizes, key=lambda r: (sizes[r], -r))
    return {e for k, f in enumerate(faces) if alive[k] and find(k) == best for g in f for e in g}


# interior angle, in units of 30 degrees, of a face with this many edges
_ANGLE = {3: 2, 4: 3, 6: 4}


def complete_vertices(patch: "Patch") -> set[int]:
    """Vertices whose surrounding faces close up to a full turn."""
    plain = set(patch.graph.edges) - patch.augmented_edges
    total: dict = {}
    for f in _faces(plain, patch.exact, patch.centers.values()):
        es = [e for g in f for e in g]
        for v in {v for e in es for v in e}:
            total[v] = total.get(v, 0) + _ANGLE[len(es)]
    return {v for v, t in total.items() if t == 12}


def interior_vertices(patch: "Patch", depth: int) -> set[int]:
    """Vertices at least ``depth`` steps from any incomplete vertex star
    (augmented edges are not steps); depth 1 means complete."""
    inner = complete_vertices(patch)
    plain = set(patch.graph.edges) - patch.augmented_edges
    nbrs: dict = {}
    for u, v in plain:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    for _ in range(depth - 1):
        inner = {v for v in inner if all(w in inner for w in nbrs.get(v, ()))}
    return inner


def prune_rim(patch: "Patch", depth: int = RIM_DEPTH) -> "Patch":
    """Remove classes that live only on the rim.

    An edge is core when both endpoints are interior to the given depth.  Classes
    without a core edge are strips cut off by the boundary; their edges are
    dropped and the classes recomputed until every class reaches the core.
    """
    from .apc import compute_apc

    while True:
        g = patch.graph
        comps = g.components()
        if len(comps) > 1:
            keep_v = set(max(comps, key=len))
            patch = _restrict(patch, {e for e in g.edges if e[0] in keep_v})
            continue
        core = set()
        for d in range(depth, 0, -1):
            # small patches may have no deep interior; settle for less
            deep = interior_vertices(patch, d)
            core = {e for e in g.edges if e not in patch.augmented_edges
                    and e[0] in deep and e[1] in deep}
            if core:
                depth = d
                break
        part = compute_apc(g)
        kept = [cls for cls in part.classes if any(e in core for e in cls)]
        if not kept:
            raise TilingError("patch is too small: no class reaches the interior")
        if len(kept) == len(part):
            return patch
        patch = _restrict(patch, {e for cls in kept for e in cls})


def _restrict(patch: "Patch", edges: set) -> "Patch":
    used = {v for e in edges for v in e}
    ids = {patch.exact[v]: v for v in used}
    provenance = {patch.exact[v]: patch.provenance[v] for v in used}
    centers = {c: ring for c, ring in patch.centers.items()
               if c in used and all(v in used for v in ring)}
    # a surviving face stays a face, and no new faces appear
    hexagons = [ring for ring in patch.hexagons
                if all(edge_key(ring[k], ring[(k + 1) % 6]) in edges for k in range(6))]
    return _assemble(patch.spec, ids, provenance, edges, patch.augmented_edges & edges, centers, hexagons)


def _rot60(p):
    # x' = x/2 - sqrt3 y/2, y' = sqrt3 x/2 + y/2, in quarter units
    ax, bx, ay, by = p
    return (_half(ax - 3 * by), _half(bx - ay), _half(3 * bx + ay), _half(ax + by))


def _hexagon_ring(c, start, at):
    ring = []
    d = psub(start, c)
    for _ in range(6):
        q = padd(c, d)
        if q not in at:
            return None
        ring.append(at[q])
        d = _rot60(d)
    return tuple(ring)


def augment_hexagons(patch: Patch) -> Patch:
    """Add a center vertex to every hexagonal face, joined to alternate
    corners, so that opposite hexagon edges are forced into one class."""
    if not patch.hexagons:
        warnings.warn("patch has no hexagonal faces; returned unchanged", stacklevel=2)
        return patch
    ids = {p: v for v, p in patch.exact.items()}
    provenance = {patch.exact[v]: patch.provenance[v] for v in patch.exact}
    edges = set(patch.graph.edges)
    augmented = set(patch.augmented_edges)
    centers = {}
    for ring in patch.hexagons:
        pts = [patch.exact[v] for v in ring]
        c = _par(pts[0], pts[2], pts[1])
        center = ids.setdefault(c, len(ids))
        provenance[c] = (patch.provenance[ring[0]][0], "hexagon-center")
        # corners whose direction from the center is 0, 120 or 240 degrees
        # (or 30, 150, 270 for the other orientation) keep C3 symmetry
        pick = min(range(2), key=lambda s: _direction_class(psub(pts[s], c)))
        for k in range(pick, 6, 2):
            e = edge_key(center, ring[k])
            edges.add(e)
            augmented.add(e)
        centers[center] = ring
    return _assemble(patch.spec, ids, provenance, edges, augmented, centers)


def _direction_class(d):
    """Angle of the unit vector ``d`` in multiples of 30 degrees, mod 4."""
    for k in range(12):
        if unit(30 * k) == d:
            return k % 4
    raise TilingError("hexagon corner is not at a multiple of 30 degrees")


def square_patch(rows: int, cols: int) -> Framework:
    """Plain square grid with integer coordinates, for large benchmarks."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    coords = {r * cols + c: (c, r) for r in range(rows) for c in range(cols)}
    return Framework(Graph(edges, vertices=range(rows * cols)), coords)


def hexagon_patch() -> Patch:
    """One regular hexagon centered at the origin, as an unaugmented patch."""
    ring = _ring()
    ids = {p: k for k, p in enumerate(ring.values())}
    provenance = {p: ((0, 0), label) for label, p in ring.items()}
    edges = {edge_key(ids[ring[a]], ids[ring[b]]) for a, b in _ring_edges()}
    return _assemble(TilingSpec("6^3", 1, trim="none"), ids, provenance, edges)
