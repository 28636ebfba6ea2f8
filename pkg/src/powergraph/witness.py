"""Explicit paths in proper power graphs, built the way the connectivity
arguments for symmetric and alternating groups build them.

Every constructor validates its own output: no identity vertex, each
consecutive pair adjacent, endpoints as requested and the length within the
advertised bound.  Fresh letters are always the smallest available ones, so
witnesses are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import perm
from .engine import is_adjacent
from .groups import AlternatingGroup, Group, SymmetricGroup

COPRIME_BOUND = 2
TRANSPOSITION_BOUND = 4
THREECYCLE_BOUND = 4
INVOLUTION_BOUND = 6
ORDER3_BOUND = 8
PRIMEORDER_BOUND = 6


class WitnessError(ValueError):
    """Preconditions of a path construction do not hold."""


@dataclass(frozen=True)
class PathWitness:
    group: Group
    vertices: tuple
    bound: int

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __add__(self, other: PathWitness) -> PathWitness:
        if self.end != other.start:
            raise ValueError("paths do not share an endpoint")
        return PathWitness(self.group, self.vertices + other.vertices[1:], self.bound + other.bound)


def validate(w: PathWitness, start=None, end=None, bound: int | None = None) -> None:
    """Raise AssertionError unless ``w`` is a genuine path within its bound."""
    G = w.group
    vs = w.vertices
    assert vs, "empty path"
    for v in vs:
        assert G.contains(v), f"{v!r} is not an element of {G.name}"
        assert v != G.identity, "identity on path"
    for a, b in zip(vs, vs[1:]):
        assert is_adjacent(G, a, b), f"{_fmt(a)} and {_fmt(b)} are not adjacent"
    if start is not None:
        assert vs[0] == start, "wrong start vertex"
    if end is not None:
        assert vs[-1] == end, "wrong end vertex"
    limit = w.bound if bound is None else bound
    assert w.length <= limit, f"path length {w.length} exceeds bound {limit}"


def _fmt(a) -> str:
    return perm.format_cycles(a) if isinstance(a, tuple) and a and isinstance(a[0], int) else repr(a)


def _checked(G: Group, vertices: list, bound: int, end=None) -> PathWitness:
    w = PathWitness(G, tuple(vertices), bound)
    validate(w, end=end)
    return w


# --- generic -------------------------------------------------------------------

def coprime_path(G: Group, x, y) -> PathWitness:
    """x ~ xy ~ y for commuting non-identity x, y of coprime orders."""
    G.check(x, y)
    if x == G.identity or y == G.identity:
        raise WitnessError("x and y must be non-identity")
    if G.mul(x, y) != G.mul(y, x):
        raise WitnessError("x and y do not commute")
    if math.gcd(G.element_order(x), G.element_order(y)) != 1:
        raise WitnessError("orders of x and y are not coprime")
    return _checked(G, [x, G.mul(x, y), y], COPRIME_BOUND)


# --- permutation helpers ---------------------------------------------------------

@lru_cache(maxsize=None)
def symmetric(n: int) -> SymmetricGroup:
    # no enumeration happens unless bulk methods are called
    return SymmetricGroup(n, max_order=math.factorial(n))


@lru_cache(maxsize=None)
def alternating(n: int) -> AlternatingGroup:
    return AlternatingGroup(n, max_order=math.factorial(n))


def _perm(n: int, p) -> tuple:
    p = tuple(p)
    if len(p) != n or not perm.is_perm(p):
        raise WitnessError(f"{p!r} is not a permutation of 1..{n}")
    return p


def _fresh(n: int, used, k: int) -> list[int]:
    used = set(used)
    out = [i for i in range(1, n + 1) if i not in used][:k]
    if len(out) < k:
        raise WitnessError(f"need {k} letters outside {sorted(used)} in 1..{n}")
    return out


def _cyc(n: int, *cycs) -> tuple:
    return perm.from_cycles(n, cycs)


def _mul(*ps) -> tuple:
    out = ps[0]
    for p in ps[1:]:
        out = perm.compose(out, p)
    return out


# --- symmetric group -----------------------------------------------------------------

def transposition_path(n: int, t1, t2) -> PathWitness:
    """(i j) ~ (i j)(u v w) ~ (u v w) ~ (k l)(u v w) ~ (k l) in S_n, n >= 7."""
    if n < 7:
        raise WitnessError("transposition paths need n >= 7")
    t1, t2 = _perm(n, t1), _perm(n, t2)
    if perm.cycle_type(t1) != (2,) or perm.cycle_type(t2) != (2,):
        raise WitnessError("both endpoints must be transpositions")
    G = symmetric(n)
    if t1 == t2:
        return _checked(G, [t1], TRANSPOSITION_BOUND)
    c = _cyc(n, _fresh(n, perm.support(t1) | perm.support(t2), 3))
    path = [t1, _mul(t1, c), c, _mul(t2, c), t2]
    return _checked(G, path, TRANSPOSITION_BOUND, end=t2)


# --- alternating group -------------------------------------------------------------------

def threecycle_path(n: int, c1, c2) -> PathWitness:
    """Path of length <= 4 through a fresh double transposition, n >= 10."""
    if n < 10:
        raise WitnessError("3-cycle paths need n >= 10")
    c1, c2 = _perm(n, c1), _perm(n, c2)
    if perm.cycle_type(c1) != (3,) or perm.cycle_type(c2) != (3,):
        raise WitnessError("both endpoints must be 3-cycles")
    G = alternating(n)
    if c1 == c2:
        return _checked(G, [c1], THREECYCLE_BOUND)
    l1, l2, l3, l4 = _fresh(n, perm.support(c1) | perm.support(c2), 4)
    d = _cyc(n, (l1, l2), (l3, l4))
    path = [c1, _mul(c1, d), d, _mul(d, c2), c2]
    return _checked(G, path, THREECYCLE_BOUND, end=c2)


def involution_to_threecycle(n: int, pi) -> PathWitness:
    """Path of length <= 6 from an even involution to a 3-cycle, n >= 10."""
    if n < 10:
        raise WitnessError("involution paths need n >= 10")
    pi = _perm(n, pi)
    cs = perm.cycles(pi)
    if not cs or any(len(c) != 2 for c in cs) or not perm.is_even(pi):
        raise WitnessError("expected an involution in A_n")
    G = alternating(n)
    supp = perm.support(pi)
    if len(supp) <= n - 3:
        c = _cyc(n, _fresh(n, supp, 3))
        return _checked(G, [pi, _mul(pi, c), c], INVOLUTION_BOUND)

    # |Supp| >= n - 2 >= 8, so at least four transpositions
    (i1, i2), (j1, j2), (k1, k2), (l1, l2) = cs[:4]
    sigma = _cyc(n, *cs[4:])
    pi1 = _mul(_cyc(n, (i1, j1, k1, i2, j2, k2), (l1, l2)), sigma)
    sq = perm.power(pi1, 2)
    h1, h2 = _fresh(n, (i1, i2, j1, j2, k1, k2, l1, l2), 2)
    d = _cyc(n, (l1, l2), (h1, h2))
    t = _cyc(n, (i1, i2, j1))
    path = [pi, pi1, sq, _mul(sq, d), d, _mul(d, t), t]
    return _checked(G, path, INVOLUTION_BOUND, end=t)


def _is_order(p, k: int) -> bool:
    return perm.order(p) == k


def order3_to_threecycle(n: int, pi) -> PathWitness:
    """Path of length <= 8 from an even element of order 3 to a 3-cycle, n >= 11."""
    if n < 11:
        raise WitnessError("order-3 paths need n >= 11")
    pi = _perm(n, pi)
    if not _is_order(pi, 3):
        raise WitnessError("expected an element of order 3")
    G = alternating(n)
    cs = perm.cycles(pi)
    if len(cs) == 1:
        return _checked(G, [pi], ORDER3_BOUND)
    if len(cs) <= 3:
        (i1, i2, i3), (j1, j2, j3) = cs[:2]
        sigma = _cyc(n, *cs[2:])
        k1, k2 = _fresh(n, perm.support(pi), 2)
        x = _mul(_cyc(n, (i1, j1, i2, j2, i3, j3)), perm.inverse(sigma), _cyc(n, (k1, k2)))
    else:
        (i1, i2, i3), (j1, j2, j3), (k1, k2, k3), (l1, l2, l3) = cs[:4]
        sigma = _cyc(n, *cs[4:])
        x = _mul(_cyc(n, (i1, j1, i2, j2, i3, j3), (k1, l1, k2, l2, k3, l3)), perm.inverse(sigma))
    head = _checked(G, [pi, x, perm.power(x, 3)], 2)
    w = head + involution_to_threecycle(n, head.end)
    w = PathWitness(G, w.vertices, ORDER3_BOUND)
    validate(w)
    return w


def primeorder_to_threecycle(n: int, pi) -> PathWitness:
    """Path of length <= 6 from an even element of prime order p >= 5 to a 3-cycle.

    Covered when |Supp| <= n - 3, or when |Supp| >= n - 2 and |Supp| >= 3p;
    the remaining regime raises :class:`WitnessError`.
    """
    if n < 11:
        raise WitnessError("prime-order paths need n >= 11")
    pi = _perm(n, pi)
    p = perm.order(pi)
    if p < 5 or len(set(perm.cycle_type(pi))) != 1 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
        raise WitnessError("expected an element of prime order p >= 5")
    G = alternating(n)
    if not perm.is_even(pi):
        raise WitnessError("expected an element of A_n")
    supp = perm.support(pi)
    if len(supp) <= n - 3:
        c = _cyc(n, _fresh(n, supp, 3))
        return _checked(G, [pi, _mul(pi, c), c], PRIMEORDER_BOUND)
    if len(supp) < 3 * p:
        raise WitnessError(
            f"uncovered regime: |Supp| = {len(supp)} >= n - 2 but < 3p = {3 * p}")
    cs = perm.cycles(pi)
    a, b, c = cs[:3]
    sigma = _cyc(n, *cs[3:])
    s = pow(3, -1, p)
    big = tuple(x for t in range(p) for x in (a[t], b[t], c[t]))
    pi1 = _mul(_cyc(n, big), perm.power(sigma, s))
    head = _checked(G, [pi, pi1, perm.power(pi1, p)], 2)
    w = head + order3_to_threecycle(n, head.end)
    w = PathWitness(G, w.vertices, PRIMEORDER_BOUND)
    validate(w)
    return w


#: name -> (constructor, number of element arguments, smallest admissible n)
LEMMAS = {
    "coprime": (coprime_path, 2, None),
    "transposition": (transposition_path, 2, 7),
    "threecycle": (threecycle_path, 2, 10),
    "involution": (involution_to_threecycle, 1, 10),
    "order3": (order3_to_threecycle, 1, 11),
    "primeorder": (primeorder_to_threecycle, 1, 11),
}
