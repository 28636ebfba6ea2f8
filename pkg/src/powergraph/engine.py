"""The proper power graph as an implicit graph over a group's element index.

Vertices are the non-identity elements; vertex ``v`` is element index
``v + 1``.  Two vertices are adjacent when one is a power of the other.
Edges are never stored for component counting: union-find runs over
``(x, x**p)`` pairs produced by the group's bulk power maps.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from sympy.ntheory import primitive_root

from ._backend import kernels
from .groups import CapExceeded, Group

DEFAULT_DIAMETER_CAP = 100_000
DEFAULT_SAMPLES = 256


class IdentityError(ValueError):
    """The identity is not a vertex of the proper power graph."""


@dataclass(frozen=True)
class ComponentSummary:
    count: int
    sizes: tuple[int, ...]
    representatives: tuple

    @property
    def sizes_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for s in self.sizes:
            hist[s] = hist.get(s, 0) + 1
        return dict(sorted(hist.items()))


class DiameterResult(NamedTuple):
    value: float  # int, or math.inf when disconnected
    lower_bound: bool
    sources: int


def is_adjacent(G: Group, x, y) -> bool:
    """True iff x != y and one of them is a power of the other."""
    G.check(x, y)
    if x == G.identity or y == G.identity:
        raise IdentityError("the identity is not a vertex")
    if x == y:
        return False
    return in_cyclic(G, y, x) or in_cyclic(G, x, y)


def in_cyclic(G: Group, y, x) -> bool:
    """Is ``y`` in the cyclic subgroup generated by ``x``?"""
    ox, oy = _order(G, x), _order(G, y)
    if ox % oy:
        return False
    g = G._pow(x, ox // oy)
    cur = g
    for _ in range(oy):
        if cur == y:
            return True
        cur = G._mul(cur, g)
    return False


def _order(G: Group, a) -> int:
    memo = G.cache.setdefault("order_memo", {})
    o = memo.get(a)
    if o is None:
        o = memo[a] = G._element_order(a)
    return o


def _csr(n: int, src: np.ndarray, dst: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, np.ascontiguousarray(dst, dtype=np.int64)


def _unique_pairs(n: int, src: np.ndarray, dst: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    key = np.unique(src * n + dst)
    return key // n, key % n


class PowerGraph:
    """Lazily built connectivity structures for the proper power graph of ``G``."""

    def __init__(self, group: Group, threads: int = 1):
        self.group = group
        self.threads = max(1, threads)
        self.n = group.order - 1
        self._labels: dict[str, np.ndarray] = {}
        self._powers = None
        self._roots = None
        self._adj = None

    # --- vertex index -------------------------------------------------------

    def vertex(self, x) -> int:
        i = self.group.index(x)
        if i == 0:
            raise IdentityError("the identity is not a vertex")
        return i - 1

    def element(self, v: int):
        return self.group.element(int(v) + 1)

    # --- edge sets ------------------------------------------------------------

    def prime_edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Edges (x, x^p) for primes p | |x| with x^p != 1, plus a primitive-root
        edge inside every prime-order cyclic subgroup (vertex ids)."""
        G = self.group
        orders = G.orders()
        src, dst = [], []
        for p in G._order_primes:
            pm = G.power_map(p)
            sel = np.flatnonzero((orders % p == 0) & (orders != p))
            src.append(sel)
            dst.append(pm[sel])
            if p > 2:
                # multiplying exponents by a primitive root cycles through all generators
                sel = np.flatnonzero(orders == p)
                if sel.size:
                    src.append(sel)
                    dst.append(G.power_map(int(primitive_root(p)))[sel])
        if not src:
            return np.empty(0, np.int64), np.empty(0, np.int64)
        return np.concatenate(src) - 1, np.concatenate(dst) - 1

    def power_edges(self) -> tuple[np.ndarray, np.ndarray]:
        """All edges (x, x^k), 2 <= k < |x| (vertex ids, possibly repeated)."""
        G = self.group
        orders = G.orders()
        top = int(orders.max()) if orders.size else 1
        src, dst = [], []
        for k in range(2, top):
            sel = np.flatnonzero(orders > k)
            if not sel.size:
                continue
            src.append(sel)
            dst.append(G.power_map(k)[sel])
        if not src:
            return np.empty(0, np.int64), np.empty(0, np.int64)
        return np.concatenate(src) - 1, np.concatenate(dst) - 1

    # --- components -------------------------------------------------------------

    def labels(self, method: str = "prime") -> np.ndarray:
        """Per vertex, the smallest vertex id of its component."""
        if method not in self._labels:
            if method == "prime":
                src, dst = self.prime_edges()
            elif method == "baseline":
                src, dst = self.power_edges()
            else:
                raise ValueError(f"unknown component method {method!r}")
            self._labels[method] = kernels.union_find_labels(
                self.n, np.ascontiguousarray(src, np.int64), np.ascontiguousarray(dst, np.int64))
        return self._labels[method]

    def components(self, method: str = "prime") -> ComponentSummary:
        lab = self.labels(method)
        if self.n == 0:
            return ComponentSummary(0, (), ())
        reps, sizes = np.unique(lab, return_counts=True)
        return ComponentSummary(
            count=int(reps.size),
            sizes=tuple(sorted(int(s) for s in sizes)),
            representatives=tuple(self.element(v) for v in reps),
        )

    def component_of(self, x):
        return self.element(self.labels()[self.vertex(x)])

    def same_component(self, x, y) -> bool:
        lab = self.labels()
        return bool(lab[self.vertex(x)] == lab[self.vertex(y)])

    # --- adjacency ----------------------------------------------------------

    def _build_adjacency(self) -> None:
        if self._adj is not None:
            return
        src, dst = self.power_edges()
        src, dst = _unique_pairs(max(self.n, 1), src, dst)
        self._powers = _csr(self.n, src, dst)
        self._roots = _csr(self.n, dst, src)
        usrc, udst = _unique_pairs(max(self.n, 1), np.concatenate([src, dst]),
                                   np.concatenate([dst, src]))
        self._adj = _csr(self.n, usrc, udst)

    def root_index(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR (indptr, indices): for each vertex v, the vertices u != v with v in <u>."""
        self._build_adjacency()
        return self._roots

    def adjacency(self) -> tuple[np.ndarray, np.ndarray]:
        self._build_adjacency()
        return self._adj

    def neighbor_ids(self, v: int) -> np.ndarray:
        indptr, indices = self.adjacency()
        return indices[indptr[v]:indptr[v + 1]]

    def neighbors(self, x) -> set:
        return {self.element(w) for w in self.neighbor_ids(self.vertex(x))}

    # --- distances --------------------------------------------------------------

    def distance(self, x, y) -> float:
        s, t = self.vertex(x), self.vertex(y)
        if s == t:
            return 0
        if not self.same_component(x, y):
            return math.inf
        indptr, indices = self.adjacency()
        return int(kernels.bfs_distance(indptr, indices, s, t))

    def distances_from(self, x) -> np.ndarray:
        """BFS distances from ``x`` to every vertex (-1 when unreachable)."""
        indptr, indices = self.adjacency()
        return kernels.bfs_distances(indptr, indices, self.vertex(x))

    def diameter(self, exact_cap: int = DEFAULT_DIAMETER_CAP,
                 samples: int = DEFAULT_SAMPLES, seed: int = 0) -> DiameterResult:
        if self.n <= 1:
            return DiameterResult(0, False, self.n)
        if self.components().count > 1:
            return DiameterResult(math.inf, False, 0)
        if self.group.order <= exact_cap:
            sources = np.arange(self.n, dtype=np.int64)
            bound = False
        else:
            rng = np.random.default_rng(seed)
            k = min(max(samples, 1), self.n)
            sources = np.sort(rng.choice(self.n, size=k, replace=False)).astype(np.int64)
            bound = True
        indptr, indices = self.adjacency()
        chunks = np.array_split(sources, min(self.threads, len(sources)))
        if len(chunks) == 1:
            results = [kernels.max_eccentricity(indptr, indices, sources)]
        else:
            with ThreadPoolExecutor(len(chunks)) as pool:
                results = list(pool.map(
                    lambda c: kernels.max_eccentricity(indptr, indices, np.ascontiguousarray(c)),
                    chunks))
        if min(results) < 0:
            raise AssertionError("BFS missed vertices in a connected graph")
        return DiameterResult(int(max(results)), bound, len(sources))


def graph(G: Group, threads: int = 1) -> PowerGraph:
    """The cached :class:`PowerGraph` of ``G``."""
    pg = G.cache.get("powergraph")
    if pg is None:
        pg = G.cache["powergraph"] = PowerGraph(G, threads)
    pg.threads = max(1, threads)
    return pg


def components(G: Group, method: str = "prime") -> ComponentSummary:
    return graph(G).components(method)


def neighbors(G: Group, x) -> set:
    return graph(G).neighbors(x)


def distance(G: Group, x, y, cap: int = DEFAULT_DIAMETER_CAP) -> float:
    if G.order > cap:
        raise CapExceeded(f"BFS on {G.name}: order {G.order} exceeds cap {cap}")
    return graph(G).distance(x, y)


def diameter(G: Group, exact_cap: int = DEFAULT_DIAMETER_CAP, samples: int = DEFAULT_SAMPLES,
             seed: int = 0, threads: int = 1) -> DiameterResult:
    return graph(G, threads).diameter(exact_cap, samples, seed)


def component_of(G: Group, x):
    return graph(G).component_of(x)


def same_component(G: Group, x, y) -> bool:
    return graph(G).same_component(x, y)


def naive_components(G: Group) -> list[int]:
    """Component sizes from pairwise :func:`is_adjacent` tests (quadratic)."""
    elems = [a for a in G.elements() if a != G.identity]
    n = len(elems)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if is_adjacent(G, elems[i], elems[j]):
                a, b = find(i), find(j)
                if a != b:
                    parent[b] = a
    sizes: dict[int, int] = {}
    for i in range(n):
        r = find(i)
        sizes[r] = sizes.get(r, 0) + 1
    return sorted(sizes.values())
