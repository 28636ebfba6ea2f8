"""Pure-Python versions of the compiled kernels (same signatures and results)."""

from __future__ import annotations

from collections import deque

import numpy as np


def union_find_labels(n, src, dst):
    """Component label of every vertex: the smallest vertex id in its component."""
    if len(src) != len(dst):
        raise ValueError("src and dst differ in length")
    parent = list(range(n))
    size = [1] * n

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    src_l = np.asarray(src).tolist()
    dst_l = np.asarray(dst).tolist()
    for a, b in zip(src_l, dst_l):
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError("edge endpoint out of range")
    for a, b in zip(src_l, dst_l):
        a, b = find(a), find(b)
        if a == b:
            continue
        if size[a] < size[b]:
            a, b = b, a
        parent[b] = a
        size[a] += size[b]
    first = {}
    labels = [0] * n
    for v in range(n):
        r = find(v)
        labels[v] = first.setdefault(r, v)
    return np.array(labels, dtype=np.int64)


def _bfs(indptr, indices, s, t=-1):
    dist = {s: 0}
    q = deque([s])
    ecc = 0
    while q:
        u = q.popleft()
        if u == t:
            return dist, dist[u]
        du = dist[u] + 1
        for w in indices[indptr[u]:indptr[u + 1]]:
            if w not in dist:
                dist[w] = du
                ecc = du
                q.append(w)
    return dist, (-1 if t >= 0 else ecc)


def bfs_distances(indptr, indices, s):
    """Distance from s to every vertex (-1 when unreachable)."""
    n = len(indptr) - 1
    dist, _ = _bfs(np.asarray(indptr).tolist(), np.asarray(indices).tolist(), int(s))
    out = np.full(n, -1, dtype=np.int64)
    out[list(dist)] = list(dist.values())
    return out


def bfs_distance(indptr, indices, s, t):
    """Distance from s to t, or -1 when t is unreachable."""
    _, d = _bfs(np.asarray(indptr).tolist(), np.asarray(indices).tolist(), int(s), int(t))
    return d


def max_eccentricity(indptr, indices, sources):
    """Largest eccentricity over ``sources``; -1 if some source misses a vertex."""
    n = len(indptr) - 1
    ip = np.asarray(indptr).tolist()
    ix = np.asarray(indices).tolist()
    best = 0
    for s in np.asarray(sources).tolist():
        dist, ecc = _bfs(ip, ix, s)
        if len(dist) != n:
            return -1
        best = max(best, ecc)
    return best
