"""Walk-independence: every class's edge vectors sum to zero around every
closed walk.

The fast check builds a BFS spanning tree and, for each vertex, the sparse
per-class sums of edge vectors along its tree path.  Each non-tree edge then
closes exactly one fundamental cycle whose per-class sums are differences of
two table rows.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .apc import APCPartition
from .core import Edge, Framework, Graph, canonical_cycle, edge_key, is_zero, vadd, vsub

# witness minimisation reruns the check from every root; skip it above this size
MINIMIZE_LIMIT = 300


@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: dict  # vertex -> (parent vertex, edge) ; root absent
    order: tuple[int, ...]
    depth: dict
    non_tree_edges: tuple[Edge, ...]

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while v != self.root:
            v = self.parent[v][0]
            out.append(v)
        return out

    def fundamental_cycle(self, u: int, v: int) -> list[int]:
        """Vertices of the cycle closed by the non-tree edge uv: the tree path
        from u to v (the closing edge v-u is implicit)."""
        pu, pv = [u], [v]
        a, b = u, v
        while self.depth[a] > self.depth[b]:
            a = self.parent[a][0]
            pu.append(a)
        while self.depth[b] > self.depth[a]:
            b = self.parent[b][0]
            pv.append(b)
        while a != b:
            a = self.parent[a][0]
            b = self.parent[b][0]
            pu.append(a)
            pv.append(b)
        return pu + pv[-2::-1]


def bfs_tree(graph: Graph, root: int | None = None) -> SpanningTree:
    """Breadth-first spanning tree; neighbors are visited in ascending order."""
    graph.require_connected()
    root = graph.vertices[0] if root is None else root
    parent: dict = {}
    depth = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in graph.neighbors(x):
            if y not in depth:
                depth[y] = depth[x] + 1
                parent[y] = (x, edge_key(x, y))
                order.append(y)
                queue.append(y)
    tree_edges = {e for _, e in parent.values()}
    non_tree = tuple(e for e in graph.edges if e not in tree_edges)
    return SpanningTree(root, parent, tuple(order), depth, non_tree)


def class_vector_table(fw: Framework, partition: APCPartition, tree: SpanningTree) -> dict:
    """Map each vertex to ``{class: summed edge vector}`` along its tree path."""
    z: dict = {tree.root: {}}
    pts = fw.placement
    for c in tree.order[1:]:
        p, e = tree.parent[c]
        r = partition.class_of[e]
        row = dict(z[p])
        step = vsub(pts[c], pts[p])
        row[r] = vadd(row[r], step) if r in row else step
        z[c] = row
    return z


@dataclass(frozen=True)
class WalkViolation:
    """Closed walk ``cycle`` (last vertex joins back to the first) whose
    class-``class_index`` edge vectors sum to ``vector`` instead of zero."""

    cycle: tuple[int, ...]
    class_index: int
    vector: tuple


@dataclass(frozen=True)
class WalkIndependenceReport:
    independent: bool
    witness: WalkViolation | None = None
    cycles_checked: int = 0
    strict: bool = True
    # every distinct violating cycle of the witness's length that was seen
    alternatives: tuple[WalkViolation, ...] = ()

    @property
    def verdict(self) -> str:
        return "independent" if self.independent else "violated"

    def __bool__(self):
        return self.independent


def class_sums(fw: Framework, partition: APCPartition, cycle: Sequence[int]) -> dict:
    """Per-class sums of edge vectors around the closed walk ``cycle``."""
    pts = fw.placement
    out: dict = {}
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        r = partition.class_of[edge_key(a, b)]
        step = vsub(pts[b], pts[a])
        out[r] = vadd(out[r], step) if r in out else step
    return out


def verify_witness(fw: Framework, partition: APCPartition, violation: WalkViolation) -> bool:
    """Recompute the witness's class sum and confirm it is the reported
    nonzero vector."""
    cyc = violation.cycle
    g = fw.graph
    if len(cyc) < 3 or not all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))):
        return False
    s = class_sums(fw, partition, cyc).get(violation.class_index, (0, 0))
    eps = fw.eps
    return (not is_zero(s, eps)) and is_zero(vsub(s, violation.vector), max(eps, 1e-12) if eps else 0)


def _violations(fw, partition, tree, strict, first_only):
    z = class_vector_table(fw, partition, tree)
    pts = fw.placement
    eps = fw.eps
    found = []
    for u, v in tree.non_tree_edges:
        r = partition.class_of[(u, v)]
        zu, zv = z[u], z[v]
        own = vsub(pts[v], pts[u])
        classes = sorted(set(zu) | set(zv) | {r}) if strict else [r]
        for rr in classes:
            diff = vsub(zv.get(rr, (0, 0)), zu.get(rr, (0, 0)))
            if rr == r:
                diff = vsub(diff, own)
            if not is_zero(diff, eps):
                found.append(WalkViolation(tuple(tree.fundamental_cycle(u, v)), rr, diff))
                break
        if found and first_only:
            break
    return found


def _witness_key(w: WalkViolation):
    return (len(w.cycle), tuple(sorted(w.cycle)), w.class_index)


def check_walk_independence(
    fw: Framework,
    partition: APCPartition,
    strict: bool = True,
    minimize_witness: bool | None = None,
) -> WalkIndependenceReport:
    """Spanning-tree test of walk-independence.

    Parameters
    ----------
    strict : bool
        Check every class appearing on a fundamental cycle, not only the
        class of the closing edge.  ``False`` gives the weaker single-class
        variant.
    minimize_witness : bool, optional
        On violation, rerun from every root and report the shortest violating
        fundamental cycle.  Defaults to on for graphs up to
        ``MINIMIZE_LIMIT`` vertices.
    """
    partition.check_graph(fw.graph)
    tree = bfs_tree(fw.graph)
    found = _violations(fw, partition, tree, strict, first_only=True)
    checked = len(tree.non_tree_edges)
    if not found:
        return WalkIndependenceReport(True, None, checked, strict)
    if minimize_witness is None:
        minimize_witness = fw.graph.n <= MINIMIZE_LIMIT
    if not minimize_witness:
        return WalkIndependenceReport(False, found[0], checked, strict, (found[0],))
    seen: dict = {}
    for root in fw.graph.vertices:
        t = bfs_tree(fw.graph, root)
        for w in _violations(fw, partition, t, strict, first_only=False):
            key = canonical_cycle(w.cycle)
            if key not in seen or _witness_key(w) < _witness_key(seen[key]):
                seen[key] = w
    shortest = min(len(k) for k in seen)
    alts = sorted((w for k, w in seen.items() if len(k) == shortest), key=_witness_key)
    return WalkIndependenceReport(False, alts[0], checked, strict, tuple(alts))


def simple_cycles(graph: Graph, max_len: int | None = None):
    """Yield every simple cycle (length >= 3, at most ``max_len``) once, as a
    vertex tuple starting at its smallest vertex."""
    limit = graph.n if max_len is None else max_len
    for s in graph.vertices:
        stack = [(s, [s], {s})]
        while stack:
            x, path, on = stack.pop()
            for y in graph.neighbors(x):
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif y > s and y not in on and len(path) < limit:
                    stack.append((y, path + [y], on | {y}))


def brute_force_walk_independence(fw: Framework, partition: APCPartition, max_len: int | None = None) -> WalkIndependenceReport:
    """Check the zero-sum condition on every simple cycle up to ``max_len``.

    Exponential; meant as an oracle for small graphs.  The reported witness is
    the shortest violating cycle found.
    """
    partition.check_graph(fw.graph)
    eps = fw.eps
    best = None
    count = 0
    for cyc in simple_cycles(fw.graph, max_len):
        count += 1
        sums = class_sums(fw, partition, cyc)
        for r in sorted(sums):
            if not is_zero(sums[r], eps):
                w = WalkViolation(cyc, r, sums[r])
                if best is None or _witness_key(w) < _witness_key(best):
                    best = w
                break
    return WalkIndependenceReport(best is None, best, count, True, (best,) if best else ())
