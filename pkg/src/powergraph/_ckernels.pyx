# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled union-find and BFS kernels over dense vertex ids."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


cdef inline i64 _find(i64[::1] parent, i64 x) noexcept nogil:
    cdef i64 root = x
    cdef i64 nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def union_find_labels(i64 n, const i64[::1] src, const i64[::1] dst):
    """Component label of every vertex: the smallest vertex id in its component."""
    if src.shape[0] != dst.shape[0]:
        raise ValueError("src and dst differ in length")
    parent_arr = np.arange(n, dtype=np.int64)
    size_arr = np.ones(n, dtype=np.int64)
    labels_arr = np.full(n, -1, dtype=np.int64)
    first_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] parent = parent_arr
    cdef i64[::1] size = size_arr
    cdef i64[::1] labels = labels_arr
    cdef i64[::1] first = first_arr
    cdef Py_ssize_t e, m = src.shape[0]
    cdef i64 a, b, v, r
    for e in range(m):
        if src[e] < 0 or src[e] >= n or dst[e] < 0 or dst[e] >= n:
            raise IndexError("edge endpoint out of range")
    with nogil:
        for e in range(m):
            a = _find(parent, src[e])
            b = _find(parent, dst[e])
            if a == b:
                continue
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
        for v in range(n):
            r = _find(parent, v)
            if first[r] < 0:
                first[r] = v
            labels[v] = first[r]
    return labels_arr


cdef i64 _bfs(const i64[::1] indptr, const i64[::1] indices, i64 s, i64 t,
              int[::1] dist, i64[::1] queue, i64 *reached) noexcept nogil:
    """BFS from s; fills dist; returns eccentricity of s (or dist to t if t >= 0)."""
    cdef i64 head = 0, tail = 1, u, w, k, ecc = 0
    dist[s] = 0
    queue[0] = s
    while head < tail:
        u = queue[head]
        head += 1
        if u == t:
            reached[0] = tail
            return dist[u]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                if dist[w] > ecc:
                    ecc = dist[w]
                queue[tail] = w
                tail += 1
    reached[0] = tail
    if t >= 0:
        return -1
    return ecc


cdef void _reset(int[::1] dist, i64[::1] queue, i64 count) noexcept nogil:
    cdef i64 i
    for i in range(count):
        dist[queue[i]] = -1


def bfs_distances(const i64[::1] indptr, const i64[::1] indices, i64 s):
    """Distance from s to every vertex (-1 when unreachable)."""
    cdef i64 n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.intc)
    queue_arr = np.empty(n, dtype=np.int64)
    cdef int[::1] dist = dist_arr
    cdef i64[::1] queue = queue_arr
    cdef i64 reached = 0
    with nogil:
        _bfs(indptr, indices, s, -1, dist, queue, &reached)
    return dist_arr.astype(np.int64)


def bfs_distance(const i64[::1] indptr, const i64[::1] indices, i64 s, i64 t):
    """Distance from s to t, or -1 when t is unreachable."""
    cdef i64 n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.intc)
    queue_arr = np.empty(n, dtype=np.int64)
    cdef int[::1] dist = dist_arr
    cdef i64[::1] queue = queue_arr
    cdef i64 reached = 0, d
    with nogil:
        d = _bfs(indptr, indices, s, t, dist, queue, &reached)
    return int(d)


def max_eccentricity(const i64[::1] indptr, const i64[::1] indices, const i64[::1] sources):
    """Largest eccentricity over ``sources``; -1 if some source misses a vertex."""
    cdef i64 n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.intc)
    queue_arr = np.empty(max(n, 1), dtype=np.int64)
    cdef int[::1] dist = dist_arr
    cdef i64[::1] queue = queue_arr
    cdef i64 reached = 0, best = 0, ecc
    cdef Py_ssize_t i
    with nogil:
        for i in range(sources.shape[0]):
            ecc = _bfs(indptr, indices, sources[i], -1, dist, queue, &reached)
            _reset(dist, queue, reached)
            if reached != n:
                best = -1
                break
            if ecc > best:
                best = ecc
    return int(best)
