from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

from powergraph import _backend, engine
from powergraph.groups import make_group

BACKENDS = _backend.available()
PY = BACKENDS["python"]


def random_graph(rng, n, m):
    src = rng.integers(0, n, m, dtype=np.int64)
    dst = rng.integers(0, n, m, dtype=np.int64)
    return src, dst


def csr(n, src, dst):
    s = np.concatenate([src, dst])
    d = np.concatenate([dst, src])
    order = np.lexsort((d, s))
    s, d = s[order], d[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, s + 1, 1)
    return np.cumsum(indptr), np.ascontiguousarray(d)


def test_compiled_backend_available():
    assert "cython" in BACKENDS, "compiled kernels failed to build or import"


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("seed", range(5))
def test_union_find_matches_reference(name, seed):
    K = BACKENDS[name]
    rng = np.random.default_rng(seed)
    n = 500
    src, dst = random_graph(rng, n, 300)
    labels = K.union_find_labels(n, src, dst)
    # reference: label propagation to the minimum id
    ref = np.arange(n)
    changed = True
    while changed:
        changed = False
        for a, b in zip(src, dst):
            m = min(ref[a], ref[b])
            if ref[a] != m or ref[b] != m:
                ref[a] = ref[b] = m
                changed = True
    assert np.array_equal(np.asarray(labels), ref)


@pytest.mark.parametrize("seed", range(5))
def test_backends_agree(seed):
    rng = np.random.default_rng(100 + seed)
    n = 2000
    src, dst = random_graph(rng, n, 2500)
    indptr, indices = csr(n, src, dst)
    results = {}
    for name, K in BACKENDS.items():
        sources = np.arange(0, n, 97, dtype=np.int64)
        results[name] = (
            np.asarray(K.union_find_labels(n, src, dst)).tolist(),
            np.asarray(K.bfs_distances(indptr, indices, 3)).tolist(),
            [int(K.bfs_distance(indptr, indices, 3, t)) for t in range(0, n, 131)],
            int(K.max_eccentricity(indptr, indices, sources)),
        )
    first = next(iter(results.values()))
    assert all(r == first for r in results.values())


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_path_graph(name):
    K = BACKENDS[name]
    n = 10
    src = np.arange(n - 1, dtype=np.int64)
    dst = src + 1
    indptr, indices = csr(n, src, dst)
    assert list(K.bfs_distances(indptr, indices, 0)) == list(range(n))
    assert K.bfs_distance(indptr, indices, 0, 9) == 9
    assert K.max_eccentricity(indptr, indices, np.arange(n, dtype=np.int64)) == 9
    assert K.max_eccentricity(indptr, indices, np.array([4], dtype=np.int64)) == 5


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_disconnected(name):
    K = BACKENDS[name]
    n = 4
    indptr, indices = csr(n, np.array([0], dtype=np.int64), np.array([1], dtype=np.int64))
    assert list(K.bfs_distances(indptr, indices, 0)) == [0, 1, -1, -1]
    assert K.bfs_distance(indptr, indices, 0, 3) == -1
    assert K.max_eccentricity(indptr, indices, np.array([0], dtype=np.int64)) == -1


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_bad_edges(name):
    K = BACKENDS[name]
    with pytest.raises((IndexError, ValueError)):
        K.union_find_labels(3, np.array([0, 5], dtype=np.int64), np.array([1, 1], dtype=np.int64))
    with pytest.raises(ValueError):
        K.union_find_labels(3, np.array([0], dtype=np.int64), np.array([1, 2], dtype=np.int64))


def test_forced_python_backend_gives_same_results():
    code = ("import powergraph as p; g = p.make_group('C6 x S3'); "
            "print(p.BACKEND, p.components(g).count, p.diameter(g).value)")
    out = {}
    for env in ({}, {"POWERGRAPH_BACKEND": "python"}):
        r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                           env={**os.environ, **env}, check=True)
        backend, *rest = r.stdout.split()
        out[backend] = rest
    assert "python" in out
    assert len(set(map(tuple, out.values()))) == 1


def test_engine_results_per_backend(monkeypatch):
    ref = None
    for name, K in BACKENDS.items():
        monkeypatch.setattr(engine, "kernels", K)
        G = make_group("SL2(3) x C5")
        got = (engine.components(G).sizes, engine.diameter(G).value)
        ref = ref or got
        assert got == ref, name
