# distutils: language = c++
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled class-merging kernel.  Same contract as ``_kernels_py``."""

from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.pair cimport pair
from cython.operator cimport dereference as deref, preincrement as inc

import numpy as np


cdef inline int64_t _find(int64_t* parent, int64_t x) noexcept nogil:
    cdef int64_t root = x
    cdef int64_t nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


cdef inline int _union(int64_t* parent, int64_t* rank, int64_t a, int64_t b) noexcept nogil:
    cdef int64_t ra = _find(parent, a)
    cdef int64_t rb = _find(parent, b)
    cdef int64_t tmp
    if ra == rb:
        return 0
    if rank[ra] < rank[rb]:
        tmp = ra
        ra = rb
        rb = tmp
    parent[rb] = ra
    if rank[ra] == rank[rb]:
        rank[ra] += 1
    return 1


cdef inline int64_t _lookup(const int64_t* indptr, const int64_t* nbr, const int64_t* eid,
                            int64_t x, int64_t y) noexcept nogil:
    cdef int64_t lo = indptr[x]
    cdef int64_t hi = indptr[x + 1]
    cdef int64_t mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if nbr[mid] < y:
            lo = mid + 1
        else:
            hi = mid
    return eid[lo]


def apc_kernel(indptr_in, indices_in, eids_in, int64_t m, bint triangles=True, bint early_stop=False):
    cdef int64_t[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef int64_t[::1] nbr = np.ascontiguousarray(indices_in, dtype=np.int64)
    cdef int64_t[::1] eid = np.ascontiguousarray(eids_in, dtype=np.int64)
    cdef int64_t n = indptr.shape[0] - 1
    if n > 2000000:
        raise OverflowError("too many vertices for packed triple keys")
    cdef uint64_t un = <uint64_t> n
    parent_arr = np.arange(m, dtype=np.int64)
    rank_arr = np.zeros(m, dtype=np.int64)
    cdef int64_t[::1] parent_mv = parent_arr
    cdef int64_t[::1] rank_mv = rank_arr
    cdef int64_t* parent = &parent_mv[0] if m > 0 else NULL
    cdef int64_t* rank = &rank_mv[0] if m > 0 else NULL
    cdef const int64_t* ip = &indptr[0]
    cdef const int64_t* nb = &nbr[0] if nbr.shape[0] > 0 else NULL
    cdef const int64_t* ed = &eid[0] if eid.shape[0] > 0 else NULL

    cdef unordered_set[uint64_t] seen
    cdef unordered_map[uint64_t, pair[int64_t, int64_t]] pairs
    cdef unordered_map[uint64_t, pair[int64_t, int64_t]].iterator it
    cdef pair[int64_t, int64_t]* entry
    cdef int64_t count = m
    cdef int64_t w, i, j, lo, hi, u, v, uw, vw, a, b, c
    cdef uint64_t key, pkey
    cdef bint found, stopped = False

    if count <= 1:
        return _roots(parent, m), count, []
    with nogil:
        for w in range(n):
            lo = ip[w]
            hi = ip[w + 1]
            for i in range(lo, hi):
                u = nb[i]
                uw = ed[i]
                for j in range(i + 1, hi):
                    v = nb[j]
                    vw = ed[j]
                    found = False
                    if triangles:
                        if w < u:
                            a = w; b = u; c = v
                        elif w < v:
                            a = u; b = w; c = v
                        else:
                            a = u; b = v; c = w
                        key = (<uint64_t> a * un + <uint64_t> b) * un + <uint64_t> c
                        if seen.count(key):
                            found = True
                            count -= _union(parent, rank, _lookup(ip, nb, ed, u, v), vw)
                            count -= _union(parent, rank, vw, uw)
                        else:
                            seen.insert(key)
                    if not found:
                        pkey = <uint64_t> u * un + <uint64_t> v
                        it = pairs.find(pkey)
                        if it == pairs.end():
                            pairs[pkey] = pair[int64_t, int64_t](w, 1)
                        else:
                            entry = &deref(it).second
                            count -= _union(parent, rank, uw, _lookup(ip, nb, ed, v, entry.first))
                            count -= _union(parent, rank, vw, _lookup(ip, nb, ed, u, entry.first))
                            if entry.second == 2:
                                count -= _union(parent, rank, uw, vw)
                            entry.second += 1
                    if early_stop and count == 1:
                        stopped = True
                        break
                if stopped:
                    break
            if stopped:
                break
    if stopped:
        return _roots(parent, m), 1, []
    heavy = []
    it = pairs.begin()
    while it != pairs.end():
        if deref(it).second.second >= 3:
            pkey = deref(it).first
            heavy.append((int(pkey // un), int(pkey % un)))
        inc(it)
    heavy.sort()
    return _roots(parent, m), count, heavy


cdef list _roots(int64_t* parent, int64_t m):
    cdef int64_t e
    return [_find(parent, e) for e in range(m)]
