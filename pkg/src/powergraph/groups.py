"""Finite groups with a dense element index.

Every group enumerates its elements in a fixed order with the identity at
index 0.  Besides element-level arithmetic (``mul``, ``inv``, ``pow``) each
group exposes two bulk arrays over that index, which is what the power-graph
engine consumes:

* ``orders()`` -- the order of every element;
* ``power_map(k)`` -- the index of ``x**k`` for every element ``x``.

Element encodings are canonical tuples or ints, so equality of encodings is
group equality.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from functools import cached_property, reduce

import numpy as np
from sympy.ntheory import factorint

from . import perm
from .groupspec import GroupSpec, Term, parse

DEFAULT_MAX_ORDER = 5_000_000
CENTER_CAP = 200_000

_CHUNK = 1 << 17


class CapExceeded(RuntimeError):
    """Requested work on a group larger than the configured cap."""


class EncodingError(ValueError):
    """Value is not a valid element encoding for the group."""


class Group:
    """Base class: generic enumeration-backed implementation.

    Subclasses provide ``contains``, ``_mul``, ``_inv`` and ``_enumerate``;
    families with structure override the bulk methods.
    """

    family: str = "generic"
    params: tuple = ()
    order: int
    identity: object

    def __init__(self, max_order: int = DEFAULT_MAX_ORDER):
        self.max_order = max_order
        self._power_cache: dict[int, np.ndarray] = {}
        self.cache: dict = {}  # scratch space for derived structures (engine state)

    # --- element arithmetic -------------------------------------------------

    def contains(self, a) -> bool:
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def check(self, *elems) -> None:
        for a in elems:
            if not self.contains(a):
                raise EncodingError(f"{a!r} is not an element of {self.name}")

    def mul(self, a, b):
        self.check(a, b)
        return self._mul(a, b)

    def inv(self, a):
        self.check(a)
        return self._inv(a)

    def pow(self, a, k: int):
        self.check(a)
        return self._pow(a, k)

    def _pow(self, a, k: int):
        if k < 0:
            a, k = self._inv(a), -k
        result = self.identity
        while k:
            if k & 1:
                result = self._mul(result, a)
            k >>= 1
            if k:
                a = self._mul(a, a)
        return result

    def element_order(self, a) -> int:
        self.check(a)
        return self._element_order(a)

    def _element_order(self, a) -> int:
        # strip prime factors from |G| while the power stays trivial
        m = self.order
        for p in self._order_primes:
            while m % p == 0 and self._pow(a, m // p) == self.identity:
                m //= p
        return m

    @cached_property
    def _order_primes(self) -> list[int]:
        return sorted(factorint(self.order))

    @property
    def name(self) -> str:
        return str(getattr(self, "spec", None) or f"{self.family}{self.params}")

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} order={self.order}>"

    def __len__(self) -> int:
        return self.order

    # --- enumeration --------------------------------------------------------

    def _check_cap(self) -> None:
        if self.order > self.max_order:
            raise CapExceeded(f"|{self.name}| = {self.order} exceeds cap {self.max_order}")

    def _enumerate(self) -> list:
        raise NotImplementedError

    @cached_property
    def _elements(self) -> list:
        self._check_cap()
        elems = self._enumerate()
        assert elems[0] == self.identity and len(elems) == self.order
        return elems

    @cached_property
    def _index(self) -> dict:
        return {a: i for i, a in enumerate(self._elements)}

    def elements(self) -> Iterator:
        """Deterministic stream of all elements, identity first."""
        return iter(self._elements)

    def element(self, i: int):
        return self._elements[i]

    def index(self, a) -> int:
        self.check(a)
        return self._index[a]

    # --- bulk arrays --------------------------------------------------------

    def orders(self) -> np.ndarray:
        if "orders" not in self.cache:
            self.cache["orders"] = self._orders()
        return self.cache["orders"]

    def _orders(self) -> np.ndarray:
        return np.fromiter((self._element_order(a) for a in self._elements),
                           dtype=np.int64, count=self.order)

    def power_map(self, k: int) -> np.ndarray:
        """Index array ``P`` with ``element(P[i]) == element(i) ** k``."""
        if k == 0:
            return np.zeros(self.order, dtype=np.int64)
        if k == 1:
            return np.arange(self.order, dtype=np.int64)
        if k < 0:
            return self.power_map(-k)[self.inverse_map()]
        if k in self._power_cache:
            return self._power_cache[k]
        f = factorint(k)
        if len(f) == 1 and next(iter(f.values())) == 1:
            pm = self._prime_power_map(k)
            self._power_cache[k] = pm
            return pm
        p = min(f)
        # x^(p*m) = (x^m)^p
        return self.power_map(p)[self.power_map(k // p)]

    def _prime_power_map(self, p: int) -> np.ndarray:
        idx = self._index
        return np.fromiter((idx[self._pow(a, p)] for a in self._elements),
                           dtype=np.int64, count=self.order)

    def inverse_map(self) -> np.ndarray:
        if "inverse" not in self.cache:
            idx = self._index
            self.cache["inverse"] = np.fromiter(
                (idx[self._inv(a)] for a in self._elements), dtype=np.int64, count=self.order)
        return self.cache["inverse"]

    # --- structure ----------------------------------------------------------

    def generators(self) -> list:
        """A generating set (greedy for the generic case)."""
        self._check_cap()
        gens: list = []
        span = {self.identity}
        for g in self._elements:
            if g in span:
                continue
            gens.append(g)
            span = _closure(self, gens)
            if len(span) == self.order:
                break
        return gens


def _closure(G: Group, gens: Sequence) -> set:
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = G._mul(h, g)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return seen


def subgroup_closure(G: Group, gens: Sequence) -> set:
    """Elements of the subgroup generated by ``gens``."""
    G.check(*gens)
    return _closure(G, list(gens))


def center(G: Group) -> list:
    """Elements commuting with every element of ``G``, in enumeration order."""
    if isinstance(G, DirectProduct):
        parts = [center(f) for f in G.factors]
        return [tuple(c) for c in itertools.product(*parts)]
    if G.order > CENTER_CAP:
        raise CapExceeded(f"center of {G.name}: order {G.order} exceeds cap {CENTER_CAP}")
    gens = G.generators()
    return [z for z in G.elements()
            if all(G._mul(z, g) == G._mul(g, z) for g in gens)]


# --- cyclic ------------------------------------------------------------------

class CyclicGroup(Group):
    family = "cyclic"

    def __init__(self, n: int, **kw):
        super().__init__(**kw)
        if n < 1:
            raise ValueError("cyclic order must be >= 1")
        self.n = self.order = n
        self.params = (n,)
        self.identity = 0

    def contains(self, a) -> bool:
        return isinstance(a, (int, np.integer)) and not isinstance(a, bool) and 0 <= a < self.n

    def _mul(self, a, b):
        return (a + b) % self.n

    def _inv(self, a):
        return -a % self.n

    def _pow(self, a, k):
        return a * k % self.n

    def _element_order(self, a):
        return self.n // math.gcd(a, self.n)

    def _enumerate(self):
        return list(range(self.n))

    def element(self, i):
        return int(i)

    def index(self, a):
        self.check(a)
        return int(a)

    def _orders(self):
        r = np.arange(self.n, dtype=np.int64)
        return self.n // np.gcd(r, self.n)

    def _prime_power_map(self, p):
        return np.arange(self.n, dtype=np.int64) * p % self.n

    def inverse_map(self):
        return -np.arange(self.n, dtype=np.int64) % self.n

    def generators(self):
        return [1 % self.n] if self.n > 1 else []


# --- direct products ---------------------------------------------------------

class DirectProduct(Group):
    """Flat direct product; elements are tuples of factor elements."""

    family = "product"

    def __init__(self, factors: Sequence[Group], **kw):
        super().__init__(**kw)
        if not factors:
            raise ValueError("empty direct product")
        self.factors = tuple(factors)
        self.sizes = tuple(f.order for f in self.factors)
        self.order = math.prod(self.sizes)
        self.identity = tuple(f.identity for f in self.factors)
        self.params = tuple(f.name for f in self.factors)

    def contains(self, a) -> bool:
        return (isinstance(a, tuple) and len(a) == len(self.factors)
                and all(f.contains(x) for f, x in zip(self.factors, a)))

    def _mul(self, a, b):
        return tuple(f._mul(x, y) for f, x, y in zip(self.factors, a, b))

    def _inv(self, a):
        return tuple(f._inv(x) for f, x in zip(self.factors, a))

    def _pow(self, a, k):
        return tuple(f._pow(x, k) for f, x in zip(self.factors, a))

    def _element_order(self, a):
        return math.lcm(*(f._element_order(x) for f, x in zip(self.factors, a)))

    def elements(self):
        self._check_cap()
        return (tuple(t) for t in itertools.product(*(f.elements() for f in self.factors)))

    def _enumerate(self):
        return list(self.elements())

    def element(self, i):
        i = int(i)
        parts = []
        for f, n in zip(reversed(self.factors), reversed(self.sizes)):
            i, r = divmod(i, n)
            parts.append(f.element(r))
        return tuple(reversed(parts))

    def index(self, a):
        self.check(a)
        i = 0
        for f, n, x in zip(self.factors, self.sizes, a):
            i = i * n + f.index(x)
        return i

    def _orders(self):
        self._check_cap()
        return reduce(lambda acc, o: np.lcm.outer(acc, o).ravel(),
                      (f.orders() for f in self.factors))

    def _prime_power_map(self, p):
        self._check_cap()
        maps = [f.power_map(p) for f in self.factors]
        out = maps[0]
        for m, n in zip(maps[1:], self.sizes[1:]):
            out = (out[:, None] * n + m[None, :]).ravel()
        return out

    def inverse_map(self):
        maps = [f.inverse_map() for f in self.factors]
        out = maps[0]
        for m, n in zip(maps[1:], self.sizes[1:]):
            out = (out[:, None] * n + m[None, :]).ravel()
        return out

    def generators(self):
        gens = []
        for i, f in enumerate(self.factors):
            for g in f.generators():
                t = list(self.identity)
                t[i] = g
                gens.append(tuple(t))
        return gens


class ElementaryAbelian(DirectProduct):
    family = "elementary"

    def __init__(self, p: int, k: int, **kw):
        super().__init__([CyclicGroup(p) for _ in range(k)], **kw)
        self.p, self.k = p, k
        self.params = (p, k)


# --- presentation normal forms ------------------------------------------------

class DihedralGroup(Group):
    """Dihedral group of order 2m; element (i, f) is r^i s^f."""

    family = "dihedral"

    def __init__(self, order: int, **kw):
        super().__init__(**kw)
        if order < 4 or order % 2:
            raise ValueError("dihedral order must be even and >= 4")
        self.m = order // 2
        self.order = order
        self.params = (order,)
        self.identity = (0, 0)

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == 2 and isinstance(a[0], int)
                and 0 <= a[0] < self.m and a[1] in (0, 1))

    def _mul(self, a, b):
        i, f = a
        j, g = b
        return ((i - j if f else i + j) % self.m, f ^ g)

    def _inv(self, a):
        i, f = a
        return a if f else (-i % self.m, 0)

    def _element_order(self, a):
        i, f = a
        return 2 if f else self.m // math.gcd(i, self.m)

    def _enumerate(self):
        return [(i, f) for i in range(self.m) for f in (0, 1)]

    def generators(self):
        return [(1 % self.m, 0), (0, 1)]


class DicyclicGroup(Group):
    """Dicyclic group of order 4m: <a, b | a^(2m), b^2 = a^m, b^-1 a b = a^-1>.

    Element (i, f) is a^i b^f.
    """

    family = "dicyclic"

    def __init__(self, m: int, **kw):
        super().__init__(**kw)
        if m < 2:
            raise ValueError("dicyclic parameter must be >= 2")
        self.m = m
        self.n = 2 * m  # order of a
        self.order = 4 * m
        self.params = (m,)
        self.identity = (0, 0)

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == 2 and isinstance(a[0], int)
                and 0 <= a[0] < self.n and a[1] in (0, 1))

    def _mul(self, a, b):
        i, f = a
        j, g = b
        if not f:
            return ((i + j) % self.n, g)
        if not g:
            return ((i - j) % self.n, 1)
        return ((i - j + self.m) % self.n, 0)

    def _inv(self, a):
        i, f = a
        # (a^i b)^-1 = a^(i+m) b
        return ((i + self.m) % self.n, 1) if f else (-i % self.n, 0)

    def _element_order(self, a):
        i, f = a
        return 4 if f else self.n // math.gcd(i, self.n)

    def _enumerate(self):
        return [(i, f) for i in range(self.n) for f in (0, 1)]

    def generators(self):
        return [(1, 0), (0, 1)]


class QuaternionGroup(DicyclicGroup):
    """Generalized quaternion group of order 2^k (k >= 3)."""

    family = "quaternion"

    def __init__(self, order: int, **kw):
        if order < 8 or order & (order - 1):
            raise ValueError("generalized quaternion order must be a power of 2 >= 8")
        super().__init__(order // 4, **kw)
        self.params = (order,)


# --- matrices over GF(p) ----------------------------------------------------

class _MatrixGroup(Group):
    """2x2 matrices over GF(p), encoded row-major as (a, b, c, d)."""

    def __init__(self, p: int, **kw):
        super().__init__(**kw)
        self.p = p
        self.params = (p,)
        self.identity = (1, 0, 0, 1)

    def _canon(self, m):
        return m

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == 4
                and all(isinstance(x, int) and 0 <= x < self.p for x in a)
                and self._member(a) and self._canon(a) == a)

    def _member(self, a) -> bool:
        raise NotImplementedError

    def canonical(self, m: Sequence[int]):
        """Reduce an arbitrary matrix (a, b, c, d) to this group's encoding."""
        m = tuple(int(x) % self.p for x in m)
        if len(m) != 4 or not self._member(m):
            raise EncodingError(f"{m} does not represent an element of {self.name}")
        return self._canon(m)

    def _mul(self, x, y):
        a, b, c, d = x
        e, f, g, h = y
        p = self.p
        return self._canon(((a * e + b * g) % p, (a * f + b * h) % p,
                            (c * e + d * g) % p, (c * f + d * h) % p))

    def _inv(self, x):
        a, b, c, d = x
        p = self.p
        di = pow((a * d - b * c) % p, -1, p)
        return self._canon((d * di % p, -b * di % p, -c * di % p, a * di % p))

    def _enumerate(self):
        p = self.p
        out = [m for m in itertools.product(range(p), repeat=4)
               if self._member(m) and self._canon(m) == m and m != self.identity]
        return [self.identity] + out


class SL2(_MatrixGroup):
    family = "SL2"

    def __init__(self, p: int, **kw):
        super().__init__(p, **kw)
        self.order = p * (p * p - 1)

    def _member(self, m):
        a, b, c, d = m
        return (a * d - b * c) % self.p == 1


class PSL2(_MatrixGroup):
    """SL(2, p) modulo {I, -I}; the representative is min(M, -M)."""

    family = "PSL2"

    def __init__(self, p: int, **kw):
        super().__init__(p, **kw)
        self.order = p * (p * p - 1) // (2 if p > 2 else 1)

    def _member(self, m):
        a, b, c, d = m
        return (a * d - b * c) % self.p == 1

    def _canon(self, m):
        neg = tuple(-x % self.p for x in m)
        return min(m, neg)


class PGL2(_MatrixGroup):
    """GL(2, p) modulo scalars; first nonzero entry (row-major) scaled to 1."""

    family = "PGL2"

    def __init__(self, p: int, **kw):
        if p == 2:
            raise ValueError("PGL2 needs an odd prime")
        super().__init__(p, **kw)
        self.order = p * (p * p - 1)

    def _member(self, m):
        a, b, c, d = m
        return (a * d - b * c) % self.p != 0

    def _canon(self, m):
        lead = next(x for x in m if x)
        s = pow(lead, -1, self.p)
        return tuple(x * s % self.p for x in m)


# --- Frobenius semidirect products ---------------------------------------------

class FrobeniusGroup(Group):
    """Z_p x| Z_q with the generator of Z_q acting as a -> r*a.

    Element (a, b); (a1, b1)(a2, b2) = (a1 + r^b1 a2, b1 + b2).
    """

    family = "frobenius"

    def __init__(self, p: int, q: int, r: int, **kw):
        super().__init__(**kw)
        if pow(r, q, p) != 1 or any(math.gcd(pow(r, b, p) - 1, p) != 1 for b in range(1, q)):
            raise ValueError(f"Frob({p},{q},{r}) is not a Frobenius group")
        self.p, self.q, self.r = p, q, r
        self.order = p * q
        self.params = (p, q, r)
        self.identity = (0, 0)
        self._rpow = [pow(r, b, p) for b in range(q)]

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == 2 and isinstance(a[0], int)
                and isinstance(a[1], int) and 0 <= a[0] < self.p and 0 <= a[1] < self.q)

    def _mul(self, x, y):
        a1, b1 = x
        a2, b2 = y
        return ((a1 + self._rpow[b1] * a2) % self.p, (b1 + b2) % self.q)

    def _inv(self, x):
        a, b = x
        nb = -b % self.q
        return (-self._rpow[nb] * a % self.p, nb)

    def _enumerate(self):
        return [(a, b) for a in range(self.p) for b in range(self.q)]

    @property
    def kernel_order(self) -> int:
        return self.p


# --- permutation groups ---------------------------------------------------

_FACT = [math.factorial(i) for i in range(21)]


def _lex_perms(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All permutations of 0..n-1 in lexicographic order, with parities."""
    table = np.zeros((1, 0), dtype=np.uint8)
    parity = np.zeros(1, dtype=np.uint8)
    for m in range(1, n + 1):
        blocks, pars = [], []
        for f in range(m):
            rest = table + (table >= f).astype(np.uint8)
            col = np.full((rest.shape[0], 1), f, dtype=np.uint8)
            blocks.append(np.hstack([col, rest]))
            # f smaller letters follow the leading f: f inversions
            pars.append(parity ^ (f & 1))
        table = np.vstack(blocks)
        parity = np.concatenate(pars)
    return table, parity


def _rank_rows(x: np.ndarray) -> np.ndarray:
    """Lexicographic rank of each row (a permutation of 0..n-1)."""
    n = x.shape[1]
    rank = np.zeros(x.shape[0], dtype=np.int64)
    for i in range(n - 1):
        c = (x[:, i + 1:] < x[:, i:i + 1]).sum(axis=1, dtype=np.int64)
        rank += c * _FACT[n - 1 - i]
    return rank


def _compose_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise a o b (apply b first)."""
    return np.take_along_axis(a, b.astype(np.intp), axis=1)


def _power_rows(x: np.ndarray, k: int) -> np.ndarray:
    n = x.shape[1]
    result = np.broadcast_to(np.arange(n, dtype=x.dtype), x.shape).copy()
    base = x
    while k:
        if k & 1:
            result = _compose_rows(base, result)
        k >>= 1
        if k:
            base = _compose_rows(base, base)
    return result


def _cycle_orders(x: np.ndarray) -> np.ndarray:
    n = x.shape[1]
    out = np.ones(x.shape[0], dtype=np.int64)
    rows = np.arange(x.shape[0])
    for i in range(n):
        cur = x[:, i].astype(np.intp)
        length = np.ones(x.shape[0], dtype=np.int64)
        active = cur != i
        while active.any():
            r = rows[active]
            cur[r] = x[r, cur[r]]
            length[r] += 1
            active[r] = cur[r] != i
        out = np.lcm(out, length)
    return out


class _PermGroup(Group):
    """Group of permutations of 1..n backed by a lexicographic image table."""

    def __init__(self, n: int, **kw):
        super().__init__(**kw)
        self.n = n
        self.params = (n,)
        self.identity = perm.identity(n)

    def _mul(self, a, b):
        return perm.compose(a, b)

    def _inv(self, a):
        return perm.inverse(a)

    def _pow(self, a, k):
        return perm.power(a, k)

    def _element_order(self, a):
        return perm.order(a)

    def contains(self, a):
        return isinstance(a, tuple) and len(a) == self.n and perm.is_perm(a)

    @cached_property
    def _table(self) -> tuple[np.ndarray, np.ndarray | None]:
        """(image table, sorted symmetric ranks or None)."""
        self._check_cap()
        table, parity = _lex_perms(self.n)
        if self.family == "alternating":
            keep = np.flatnonzero(parity == 0)
            return np.ascontiguousarray(table[keep]), keep.astype(np.int64)
        return table, None

    def elements(self):
        table, _ = self._table
        for start in range(0, table.shape[0], _CHUNK):
            for row in (table[start:start + _CHUNK] + 1).tolist():
                yield tuple(row)

    @cached_property
    def _elements(self):
        return list(self.elements())

    def element(self, i):
        return tuple(int(v) + 1 for v in self._table[0][int(i)])

    def _rank_to_index(self, ranks: np.ndarray) -> np.ndarray:
        _, a_ranks = self._table
        if a_ranks is None:
            return ranks
        return np.searchsorted(a_ranks, ranks)

    def index(self, a):
        self.check(a)
        row = np.array([a], dtype=np.uint8) - 1
        return int(self._rank_to_index(_rank_rows(row))[0])

    def _orders(self):
        table, _ = self._table
        return np.concatenate([_cycle_orders(table[s:s + _CHUNK])
                               for s in range(0, table.shape[0], _CHUNK)])

    def _prime_power_map(self, p):
        table, _ = self._table
        out = np.empty(table.shape[0], dtype=np.int64)
        for s in range(0, table.shape[0], _CHUNK):
            blk = _power_rows(table[s:s + _CHUNK], p)
            out[s:s + _CHUNK] = self._rank_to_index(_rank_rows(blk))
        return out

    def inverse_map(self):
        if "inverse" not in self.cache:
            table, _ = self._table
            inv = np.argsort(table, axis=1).astype(np.uint8)
            self.cache["inverse"] = self._rank_to_index(_rank_rows(inv))
        return self.cache["inverse"]


class SymmetricGroup(_PermGroup):
    family = "symmetric"

    def __init__(self, n: int, **kw):
        if n < 1:
            raise ValueError("degree must be >= 1")
        super().__init__(n, **kw)
        self.order = math.factorial(n)

    def generators(self):
        if self.n < 2:
            return []
        gens = [perm.from_cycles(self.n, [(1, 2)])]
        if self.n > 2:
            gens.append(perm.from_cycles(self.n, [tuple(range(1, self.n + 1))]))
        return gens


class AlternatingGroup(_PermGroup):
    family = "alternating"

    def __init__(self, n: int, **kw):
        if n < 3:
            raise ValueError("alternating degree must be >= 3")
        super().__init__(n, **kw)
        self.order = math.factorial(n) // 2

    def contains(self, a):
        return super().contains(a) and perm.is_even(a)

    def generators(self):
        return [perm.from_cycles(self.n, [(1, 2, k)]) for k in range(3, self.n + 1)]


# --- construction from specs ------------------------------------------------

def term_order(t: Term) -> int:
    k, a = t.kind, t.args
    if k == "C":
        return a[0]
    if k == "E":
        return a[0] ** a[1]
    if k in ("D", "Q"):
        return a[0]
    if k == "DIC":
        return 4 * a[0]
    if k == "S":
        return math.factorial(a[0])
    if k == "A":
        return math.factorial(a[0]) // 2
    if k in ("SL2", "PGL2"):
        p = a[0]
        return p * (p * p - 1)
    if k == "PSL2":
        p = a[0]
        return p * (p * p - 1) // (2 if p > 2 else 1)
    if k == "Frob":
        return a[0] * a[1]
    raise ValueError(f"unknown term kind {k}")


def _build_term(t: Term, max_order: int) -> Group:
    k, a = t.kind, t.args
    kw = {"max_order": max_order}
    g: Group
    if k == "C":
        g = CyclicGroup(a[0], **kw)
    elif k == "E":
        g = ElementaryAbelian(a[0], a[1], **kw)
    elif k == "D":
        g = DihedralGroup(a[0], **kw)
    elif k == "Q":
        g = QuaternionGroup(a[0], **kw)
    elif k == "DIC":
        g = DicyclicGroup(a[0], **kw)
    elif k == "S":
        g = SymmetricGroup(a[0], **kw)
    elif k == "A":
        g = AlternatingGroup(a[0], **kw)
    elif k == "SL2":
        g = SL2(a[0], **kw)
    elif k == "PSL2":
        g = PSL2(a[0], **kw)
    elif k == "PGL2":
        g = PGL2(a[0], **kw)
    else:
        g = FrobeniusGroup(*a, **kw)
    g.spec = GroupSpec((t,))
    return g


def make_group(spec: GroupSpec | str, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Build the group named by ``spec`` (a :class:`GroupSpec` or its text)."""
    if isinstance(spec, str):
        spec = parse(spec)
    order = math.prod(term_order(t) for t in spec.terms)
    if order > max_order:
        raise CapExceeded(f"|{spec}| = {order} exceeds cap {max_order}")
    if len(spec.terms) == 1:
        return _build_term(spec.terms[0], max_order)
    g = DirectProduct([_build_term(t, max_order) for t in spec.terms], max_order=max_order)
    g.spec = spec
    return g
