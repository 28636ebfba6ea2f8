"""Parser and formatter for group specifications.

Grammar (case- and whitespace-insensitive)::

    spec := term ("x" term)*
    term := "C" INT | "E" INT "^" INT | "D" INT | "Q" INT | "DIC" INT
          | "S" INT | "A" INT
          | "SL2(" INT ")" | "PSL2(" INT ")" | "PGL2(" INT ")"
          | "Frob(" INT "," INT "," INT ")"

``C n`` is cyclic of order n, ``E p^k`` elementary abelian of order p^k,
``D n`` dihedral of order n, ``Q n`` generalized quaternion of order n and
``DIC m`` dicyclic of order 4m.
"""

from __future__ import annotations

import re
from math import gcd
from dataclasses import dataclass

from sympy.ntheory import isprime


class SpecError(ValueError):
    """A group spec that does not parse or does not name a group.

    ``position`` is the 0-based offset into the original text, when known.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Term:
    kind: str
    args: tuple[int, ...]

    def __str__(self) -> str:
        k, a = self.kind, self.args
        if k == "E":
            return f"E{a[0]}^{a[1]}"
        if k in ("SL2", "PSL2", "PGL2"):
            return f"{k}({a[0]})"
        if k == "Frob":
            return f"Frob({a[0]},{a[1]},{a[2]})"
        return f"{k}{a[0]}"


@dataclass(frozen=True)
class GroupSpec:
    terms: tuple[Term, ...]

    def __str__(self) -> str:
        return " x ".join(str(t) for t in self.terms)

    @property
    def is_product(self) -> bool:
        return len(self.terms) > 1


_INT = r"(\d+)"
_PATTERNS: list[tuple[str, re.Pattern]] = [
    ("PSL2", re.compile(r"psl2\(" + _INT + r"\)")),
    ("PGL2", re.compile(r"pgl2\(" + _INT + r"\)")),
    ("SL2", re.compile(r"sl2\(" + _INT + r"\)")),
    ("Frob", re.compile(r"frob\(" + _INT + "," + _INT + "," + _INT + r"\)")),
    ("DIC", re.compile(r"dic" + _INT)),
    ("E", re.compile(r"e" + _INT + r"\^" + _INT)),
    ("C", re.compile(r"c" + _INT)),
    ("D", re.compile(r"d" + _INT)),
    ("Q", re.compile(r"q" + _INT)),
    ("S", re.compile(r"s" + _INT)),
    ("A", re.compile(r"a" + _INT)),
]


def parse(text: str) -> GroupSpec:
    """Parse ``text`` into a validated :class:`GroupSpec`."""
    # strip whitespace but remember where each kept character came from
    kept = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
    src = "".join(ch for _, ch in kept).lower()
    origin = [i for i, _ in kept] + [len(text)]
    if not src:
        raise SpecError("empty group spec", 0)

    terms = []
    pos = 0
    while True:
        for kind, pat in _PATTERNS:
            m = pat.match(src, pos)
            if m:
                break
        else:
            raise SpecError(f"unrecognised term {text[origin[pos]:].strip()!r}", origin[pos])
        term = Term(kind, tuple(int(g) for g in m.groups()))
        _validate(term, origin[pos])
        terms.append(term)
        pos = m.end()
        if pos == len(src):
            break
        if src[pos] != "x":
            raise SpecError(f"expected 'x' between terms, found {src[pos]!r}", origin[pos])
        pos += 1
        if pos == len(src):
            raise SpecError("dangling 'x' at end of spec", origin[pos])
    return GroupSpec(tuple(terms))


def _validate(term: Term, position: int) -> None:
    k, a = term.kind, term.args

    def fail(msg: str):
        raise SpecError(f"{term}: {msg}", position)

    if k == "C" and a[0] < 1:
        fail("cyclic order must be >= 1")
    elif k == "E":
        p, e = a
        if not isprime(p):
            fail(f"{p} is not prime")
        if e < 1:
            fail("rank must be >= 1")
    elif k == "D" and (a[0] < 4 or a[0] % 2):
        fail("dihedral order must be even and >= 4")
    elif k == "Q":
        n = a[0]
        if n < 8 or n & (n - 1):
            fail("generalized quaternion order must be a power of 2 >= 8 (use DIC m for order 4m)")
    elif k == "DIC" and a[0] < 2:
        fail("dicyclic parameter must be >= 2")
    elif k == "S" and a[0] < 1:
        fail("degree must be >= 1")
    elif k == "A" and a[0] < 3:
        fail("alternating degree must be >= 3")
    elif k in ("SL2", "PSL2") and not isprime(a[0]):
        fail(f"field size {a[0]} must be prime")
    elif k == "PGL2" and (not isprime(a[0]) or a[0] == 2):
        fail(f"field size {a[0]} must be an odd prime")
    elif k == "Frob":
        p, q, r = a
        if p < 2 or q < 2:
            fail("kernel and complement orders must be >= 2")
        if pow(r, q, p) != 1:
            fail(f"{r}^{q} is not 1 mod {p}")
        # fixed-point-free action: r^b - 1 must be a unit mod p for 0 < b < q
        for b in range(1, q):
            if gcd(pow(r, b, p) - 1, p) != 1:
                fail(f"action a -> {r}^{b} a has nontrivial fixed points")
