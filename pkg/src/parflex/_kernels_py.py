"""Pure-Python class-merging kernel; the fallback for ``_kernels.pyx``.

Vertices are positions ``0..n-1`` in a CSR adjacency with ascending
neighbor lists; edges are indices ``0..m-1``.
"""
from __future__ import annotations


def apc_kernel(indptr, indices, eids, m, triangles=True, early_stop=False):
    """Merge edges into classes by the triangle/4-cycle bookkeeping scheme.

    With ``triangles`` set, a vertex triple seen twice is a triangle and its
    three edges are merged; otherwise only the 4-cycle rule runs (ribbons).

    Returns ``(roots, n_classes, heavy_pairs)`` where ``roots[e]`` is the
    representative of edge ``e`` and ``heavy_pairs`` lists the vertex pairs
    recorded with three or more common neighbors (empty after an early stop).
    """
    indptr = [int(x) for x in indptr]
    nbr = [int(x) for x in indices]
    eid = [int(x) for x in eids]
    n = len(indptr) - 1

    parent = list(range(m))
    rank = [0] * m
    count = m

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(a, b):
        nonlocal count
        ra, rb = find(a), find(b)
        if ra == rb:
            return
        if rank[ra] < rank[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        if rank[ra] == rank[rb]:
            rank[ra] += 1
        count -= 1

    def lookup(x, y):
        lo, hi = indptr[x], indptr[x + 1]
        while lo < hi:
            mid = (lo + hi) >> 1
            if nbr[mid] < y:
                lo = mid + 1
            else:
                hi = mid
        return eid[lo]

    seen_triples = set()
    pairs = {}
    if count <= 1:
        return [find(e) for e in range(m)], count, []
    for w in range(n):
        lo, hi = indptr[w], indptr[w + 1]
        for i in range(lo, hi):
            u = nbr[i]
            uw = eid[i]
            for j in range(i + 1, hi):
                v = nbr[j]
                vw = eid[j]
                found = False
                if triangles:
                    key = (w, u, v) if w < u else ((u, w, v) if w < v else (u, v, w))
                    if key in seen_triples:
                        found = True
                        union(lookup(u, v), vw)
                        union(vw, uw)
                    else:
                        seen_triples.add(key)
                if not found:
                    entry = pairs.get((u, v))
                    if entry is None:
                        pairs[(u, v)] = [w, 1]
                    else:
                        w2, ell = entry
                        union(uw, lookup(v, w2))
                        union(vw, lookup(u, w2))
                        if ell == 2:
                            union(uw, vw)
                        entry[1] = ell + 1
                if early_stop and count == 1:
                    return [find(e) for e in range(m)], 1, []
    heavy = sorted(k for k, (_, ell) in pairs.items() if ell >= 3)
    return [find(e) for e in range(m)], count, heavy
