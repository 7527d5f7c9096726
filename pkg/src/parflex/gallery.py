"""Ready-made frameworks: small textbook cases and the worked figures.

Vertex ids follow the node names of the original drawings (letters are
mapped to 0, 1, 2, ... in alphabetical order).  Angles are in degrees.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .core import EXACT, Framework, Graph, complete_graph, cycle_graph


def polar(deg: float, r: float = 1.0) -> tuple[float, float]:
    a = math.radians(deg)
    return (r * math.cos(a), r * math.sin(a))


def _add(*terms):
    """Sum of points with signs: _add(a, b, (-1, c)) = a + b - c."""
    x = y = 0.0
    for t in terms:
        if len(t) == 2 and isinstance(t[1], tuple):
            s, p = t
        else:
            s, p = 1, t
        x += s * p[0]
        y += s * p[1]
    return (x, y)


def _par(p, q, r):
    """p + q - r, the fourth corner of a parallelogram."""
    return (p[0] + q[0] - r[0], p[1] + q[1] - r[1])


def _edges(spec: str) -> list[tuple[int, int]]:
    return [tuple(int(x) for x in tok.split("-")) for tok in spec.split()]


def _fw(edges, pos, tol=None) -> Framework:
    return Framework(Graph(edges, vertices=pos.keys()), pos, tol)


# ---- elementary frameworks ----

def triangle() -> Framework:
    """Equilateral K3."""
    return Framework(complete_graph(3), {0: (0, 0), 1: (1, 0), 2: polar(60)})


def square(exact: bool = False) -> Framework:
    """Unit square C4 with vertices 0..3 counterclockwise from the origin."""
    pos = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
    return Framework(cycle_graph(4), pos, EXACT if exact else None)


def centered_square(clockwise: bool = True) -> Framework:
    """Unit square centered at the origin, vertices in clockwise order by
    default so that i -> i+1 is a clockwise quarter turn."""
    pts = [(-0.5, 0.5), (0.5, 0.5), (0.5, -0.5), (-0.5, -0.5)]
    if not clockwise:
        pts = [pts[0], pts[3], pts[2], pts[1]]
    return Framework(cycle_graph(4), dict(enumerate(pts)), EXACT)


def grid(rows: int, cols: int, exact: bool = True) -> Framework:
    """Unit square grid with ``rows`` x ``cols`` vertices; vertex ``r*cols+c``
    sits at ``(c, r)``."""
    pos = {r * cols + c: (c, r) for r in range(rows) for c in range(cols)}
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Framework(Graph(edges, vertices=pos), pos, EXACT if exact else None)


def k23() -> Graph:
    return Graph([(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def path_framework(n: int) -> Framework:
    pos = {i: (i, (i % 2) * 0.5) for i in range(n)}
    return _fw([(i, i + 1) for i in range(n - 1)], pos)


def two_squares_by_path() -> Framework:
    """Two unit squares joined by a single bridge edge; its class graph is
    disconnected so no brace set can rigidify it."""
    pos = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1),
           4: (2.5, 0.2), 5: (3.5, 0.2), 6: (3.5, 1.2), 7: (2.5, 1.2)}
    edges = _edges("0-1 1-2 2-3 3-0 4-5 5-6 6-7 7-4 1-4")
    return _fw(edges, pos)


def single_hexagon() -> Framework:
    pos = {i + 1: polar(60 * i) for i in range(6)}
    return _fw([(i, i % 6 + 1) for i in range(1, 7)], pos)


# ---- worked figures ----

def eqclasses_left() -> Framework:
    """Two triangles of parallelograms around a central triangle (9 vertices,
    15 edges, two classes)."""
    p = {1: (1.0, 0.0), 2: polar(60), 3: (0.0, 0.0)}
    p[4] = _add(p[1], polar(30, 0.75))
    p[5] = _par(p[2], p[4], p[1])
    p[6] = _add(p[2], polar(150, 0.75))
    p[7] = _par(p[3], p[6], p[2])
    p[8] = _add(p[3], polar(270, 0.75))
    p[9] = _par(p[1], p[8], p[3])
    edges = _edges("1-2 2-3 3-1 4-5 6-7 8-9 1-4 1-9 2-5 2-6 3-7 3-8 5-6 7-8 9-4")
    return _fw(edges, p)


EQCLASSES_MIDDLE_EDGES = "1-2 1-9 2-3 3-1 4-5 3-9 7-8 1-4 2-5 6-7 2-7 3-8 5-6"


def flex_example(a: float = 0.0, b: float = 0.0) -> Framework:
    """Three-class framework with two independent flexes; ``a`` and ``b``
    rotate the two flexible arms (degrees)."""
    p = {1: (1.0, 0.0), 2: polar(60), 3: (0.0, 0.0)}
    p[4] = _add(p[1], polar(40 + a, 0.75))
    p[5] = _par(p[2], p[4], p[1])
    p[7] = _add(p[2], polar(140 + b, 0.75))
    p[8] = _par(p[3], p[7], p[2])
    p[6] = _par(p[5], p[7], p[2])
    p[9] = polar(-60)
    return _fw(_edges(EQCLASSES_MIDDLE_EDGES), p)


def eqclasses_middle_graph() -> Graph:
    return Graph(_edges(EQCLASSES_MIDDLE_EDGES))


def eqclasses_right() -> Framework:
    """Disc-like parallelogram framework with triangles (21 vertices, 2 classes)."""
    p = {1: (0.0, 0.0), 2: (1.0, 0.0), 3: (1.9, -0.1), 4: (3.0, 0.1), 5: (4.0, 0.0)}
    p[6] = _add(p[1], (0.2, 0.6))
    p[7] = _par(p[2], p[6], p[1])
    p[8] = _add(p[3], (0.1, 0.5))
    p[9] = _add(p[3], (0.6, 0.4))
    p[10] = _par(p[4], p[9], p[3])
    p[11] = _par(p[6], p[8], p[3])
    p[12] = _par(p[7], p[8], p[3])
    p[13] = _add(p[8], (-0.05, 0.5))
    p[14] = _par(p[10], p[13], p[9])
    p[15] = _par(p[11], p[13], p[8])
    p[16] = _par(p[12], p[13], p[8])
    p[17] = _add(p[14], (0.1, 0.6))
    p[18] = _par(p[15], p[17], p[14])
    p[19] = _par(p[16], p[17], p[14])
    p[20] = _add(p[19], (0.4, 0.3))
    p[21] = _add(p[18], (0.7, 0.5))
    edges = _edges(
        "1-2 6-7 11-12 15-16 18-19 18-21 19-20 19-21 19-17 17-20 20-21 14-16 13-16 13-14 "
        "9-10 3-4 2-3 1-6 2-7 3-7 8-12 "
        "4-5 3-8 3-9 4-10 5-10 8-9 6-11 7-12 8-13 9-13 10-14 11-15 12-16 15-18 16-19 10-17 14-17"
    )
    return _fw(edges, p)


def grids_left() -> Framework:
    """4x4 square grid with five braces (vertex ``10*x+y`` at ``(x, y)``)."""
    pos = {10 * x + y: (x, y) for x in range(1, 5) for y in range(1, 5)}
    edges = []
    for x in range(1, 5):
        for y in range(1, 5):
            if x < 4:
                edges.append((10 * x + y, 10 * (x + 1) + y))
            if y < 4:
                edges.append((10 * x + y, 10 * x + y + 1))
    edges += _edges("13-24 23-34 33-44 22-33 21-32")
    return _fw(edges, pos, EXACT)


def grids_middle() -> Framework:
    """Braced parallelogram grid with 30 vertices and seven braces."""

    def around(center, deg, r):
        return _add(center, polar(deg, r))

    p = {0: (0.0, 0.0), 1: (0.0, 1.0)}
    p[2] = around(p[0], 0, 1.0)
    p[3] = _par(p[2], p[1], p[0])
    p[4] = around(p[2], 45, 0.5)
    p[5] = _par(p[4], p[3], p[2])
    p[6] = around(p[1], 120, 0.5)
    p[7] = _par(p[6], p[3], p[1])
    p[8] = around(p[7], 72, 1.5)
    p[9] = _par(p[8], p[3], p[7])
    p[10] = _par(p[5], p[9], p[3])
    p[11] = _par(p[8], p[10], p[9])
    p[12] = _par(p[6], p[8], p[7])
    p[13] = _par(p[0], p[6], p[1])
    p[14] = around(p[6], 144, 1.0)
    p[15] = _par(p[14], p[13], p[6])
    p[16] = around(p[6], 108, 1.0)
    p[17] = _par(p[16], p[14], p[6])
    p[18] = _par(p[12], p[16], p[6])
    p[19] = _par(p[17], p[18], p[16])
    p[20] = around(p[12], 90, 0.75)
    p[21] = _par(p[20], p[8], p[12])
    p[22] = _par(p[11], p[21], p[8])
    p[23] = _par(p[18], p[20], p[12])
    p[24] = _par(p[23], p[21], p[20])
    p[25] = _par(p[19], p[23], p[18])
    p[26] = _par(p[24], p[22], p[21])
    p[27] = _par(p[25], p[24], p[23])
    p[28] = _par(p[27], p[26], p[24])
    p[29] = _par(p[25], p[28], p[27])
    edges = _edges(
        "0-1 0-2 2-3 3-1 2-4 4-5 5-3 1-6 6-7 7-3 7-8 8-9 9-3 5-10 10-9 8-11 11-10 "
        "6-12 12-8 0-13 13-6 6-14 14-15 15-13 6-16 16-17 17-14 12-18 18-16 17-19 19-18 "
        "12-20 20-21 21-8 11-22 22-21 18-23 23-20 23-24 24-21 19-25 25-23 24-26 26-22 "
        "25-27 27-24 27-28 28-26 25-29 29-28"
    )
    braces = _edges("27-29 3-4 1-13 7-9 12-16 20-18 23-19")
    return _fw(edges + braces, p)


NEW_FRAMEWORK_CLASSES = (
    "1-2 4-5 7-8 10-11 7-13 8-13 10-14 11-14",
    "1-4 2-3 2-5 3-5 3-6 5-6 7-10 8-9 9-11 9-12 11-12 13-14",
    "1-7 2-8 3-9 4-10 6-12",
)


def new_framework(moved: bool = False) -> Framework:
    """Two stacked layers of parallelograms and triangles (14 vertices, 25
    edges).  With ``moved`` vertex 11 is displaced, which keeps every induced
    4-cycle a parallelogram but breaks walk-independence."""
    h = (0.0, 1.3)
    p = {1: (0.0, 0.0), 2: (1.3, 0.0), 3: (3.1, 0.5), 4: (0.58, 1.0), 6: (2.66, 1.12)}
    p[5] = _par(p[2], p[4], p[1])
    for i in range(1, 7):
        p[i + 6] = _add(p[i], h)
    p[13] = (1.2, 1.74)
    p[14] = _par(p[10], p[13], p[7])
    if moved:
        p[11] = (2.46, 3.94)
    edges = [e for block in NEW_FRAMEWORK_CLASSES for e in _edges(block)]
    return _fw(edges, p)


NAC_NAMES = "abcdefghijklm"
NAC_EDGES = "ab bc cd da be ef fc bg gh he bi ij jg bk kl li mk am"
NAC_RED = {
    "left": "ab bc cd da be kl bk mk ef fc bg",
    "middle": "ab cd be fc kl bg gh he mk bi ij jg",
    "right": "ab be bc bg bi bk",
}


def _letters(spec: str) -> list[tuple[int, int]]:
    return [(NAC_NAMES.index(t[0]), NAC_NAMES.index(t[1])) for t in spec.split()]


def nac_framework() -> Framework:
    """Ring of six parallelograms around one vertex (letters a..m -> 0..12)."""
    a, b = (0.0, 0.0), (1.0, 0.0)

    def spoke(deg):
        return _add(b, polar(90 + deg))

    c = spoke(40)
    d = _par(a, c, b)
    e = spoke(-10)
    f = _par(c, e, b)
    g = spoke(-45)
    h = _par(e, g, b)
    i = spoke(-110)
    j = _par(g, i, b)
    k = spoke(-180)
    l_ = _par(i, k, b)
    m = _par(a, k, b)
    pos = dict(enumerate([a, b, c, d, e, f, g, h, i, j, k, l_, m]))
    return _fw(_letters(NAC_EDGES), pos)


def nac_coloring(which: str) -> dict[tuple[int, int], str]:
    """One of the three colorings ('left', 'middle', 'right') of the ring."""
    red = {tuple(sorted(e)) for e in _letters(NAC_RED[which])}
    return {tuple(sorted(e)): ("red" if tuple(sorted(e)) in red else "blue") for e in _letters(NAC_EDGES)}


def p_not_tp() -> Framework:
    """Projected box complex that is a P-framework but whose complex is not
    simply connected.  Vertex ``100*i+10*j+k`` sits at ``i*(2/5,2/5)+j*(1,0)+k*(0,1)``."""
    verts = [110, 120, 130, 210, 220, 230, 320, 330, 111, 121, 131, 211, 221, 231, 321, 331,
             112, 122, 212, 222]
    q = Fraction(2, 5)

    def at(v):
        i, j, k = v // 100, (v // 10) % 10, v % 10
        return (i * q + j, i * q + k)

    edges = _edges(
        "212-222 211-221 210-220 110-120 111-121 112-122 "
        "320-330 321-331 220-230 120-130 121-131 221-231 "
        "110-210 120-220 130-230 111-211 131-231 112-212 122-222 "
        "220-320 230-330 221-321 231-331"
    )
    edges += [(10 * ab, 10 * ab + 1) for ab in (11, 12, 13, 21, 23, 32, 33)]
    edges += [(10 * ab + 1, 10 * ab + 2) for ab in (11, 12, 21, 22)]
    return _fw(edges, {v: at(v) for v in verts}, EXACT)


def symflex_example(a: float = 0.0, b: float = 0.0, centered: bool = True) -> Framework:
    """Threefold symmetric framework with three symmetric classes.

    With ``centered`` the centroid of triangle 1-2-3 is moved to the origin
    so that rotation by 120 degrees about the origin is a symmetry."""
    p = {1: (0.8, 0.0), 2: polar(60, 0.8), 3: (0.0, 0.0)}
    p[4] = _add(p[1], polar(30 + a, 0.75))
    p[5] = _par(p[2], p[4], p[1])
    p[6] = _add(p[2], polar(150 + a, 0.75))
    p[7] = _par(p[3], p[6], p[2])
    p[8] = _add(p[3], polar(270 + a, 0.75))
    p[9] = _par(p[1], p[8], p[3])
    p[10] = _add(p[4], polar(30 + b, 0.75))
    p[11] = _par(p[5], p[10], p[4])
    p[12] = _add(p[5], polar(90 + b, 0.75))
    p[13] = _par(p[6], p[12], p[5])
    p[14] = _add(p[6], polar(150 + b, 0.75))
    p[15] = _par(p[7], p[14], p[6])
    p[16] = _add(p[7], polar(210 + b, 0.75))
    p[17] = _par(p[8], p[16], p[7])
    p[18] = _add(p[8], polar(270 + b, 0.75))
    p[19] = _par(p[9], p[18], p[8])
    p[20] = _add(p[9], polar(330 + b, 0.75))
    p[21] = _par(p[4], p[20], p[9])
    if centered:
        cx = (p[1][0] + p[2][0] + p[3][0]) / 3
        cy = (p[1][1] + p[2][1] + p[3][1]) / 3
        p = {v: (x - cx, y - cy) for v, (x, y) in p.items()}
    edges = _edges(
        "1-2 2-3 3-1 4-5 6-7 8-9 1-4 1-9 2-5 2-6 3-7 3-8 5-6 7-8 9-4 "
        "10-11 14-15 18-19 12-13 16-17 20-21 "
        "11-12 13-14 15-16 17-18 19-20 21-10 "
        "4-10 5-11 5-12 6-13 6-14 7-15 7-16 8-17 8-18 9-19 9-20 4-21"
    )
    return _fw(edges, p)


def corpus() -> dict[str, Framework]:
    """Every named framework above, keyed by a short name."""
    return {
        "triangle": triangle(),
        "square": square(),
        "grid3x3": grid(3, 3),
        "grid4x5": grid(4, 5),
        "path": path_framework(5),
        "two_squares_by_path": two_squares_by_path(),
        "eqclasses_left": eqclasses_left(),
        "flex_example": flex_example(),
        "flex_example_bent": flex_example(10, -15),
        "eqclasses_right": eqclasses_right(),
        "grids_left": grids_left(),
        "grids_middle": grids_middle(),
        "new_framework": new_framework(),
        "new_framework_moved": new_framework(moved=True),
        "nac_ring": nac_framework(),
        "p_not_tp": p_not_tp(),
        "symflex": symflex_example(),
    }
