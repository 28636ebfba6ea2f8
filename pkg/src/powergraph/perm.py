"""Permutations as image tuples on the letters 1..n.

A permutation ``p`` of degree ``n`` is the tuple ``(p(1), ..., p(n))``.
Products compose right to left: ``compose(a, b)(i) == a(b(i))``.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Sequence

Perm = tuple[int, ...]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_perm(p: Sequence[int], n: int | None = None) -> bool:
    if n is not None and len(p) != n:
        return False
    return sorted(p) == list(range(1, len(p) + 1))


def compose(a: Perm, b: Perm) -> Perm:
    """Return ``a * b``, i.e. apply ``b`` first, then ``a``."""
    return tuple(a[j - 1] for j in b)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p, 1):
        out[j - 1] = i
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    # walk each cycle once instead of square-and-multiply
    n = len(p)
    out = [0] * n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j] - 1
        m = len(cyc)
        for pos, letter in enumerate(cyc):
            out[letter] = cyc[(pos + k) % m] + 1
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of length > 1, each starting at its smallest letter."""
    n = len(p)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start - 1]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = p[j - 1]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths greater than one, largest first."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def support(p: Perm) -> frozenset[int]:
    return frozenset(i for i, j in enumerate(p, 1) if i != j)


def order(p: Perm) -> int:
    return math.lcm(*cycle_type(p)) if any(i != j for i, j in enumerate(p, 1)) else 1


def is_even(p: Perm) -> bool:
    return sum(len(c) - 1 for c in cycles(p)) % 2 == 0


def from_cycles(n: int, cycs: Iterable[Sequence[int]]) -> Perm:
    """Build the product of the given cycles (composed right to left)."""
    result = identity(n)
    for cyc in cycs:
        cyc = list(cyc)
        if len(set(cyc)) != len(cyc):
            raise ValueError(f"repeated letter in cycle {tuple(cyc)}")
        for letter in cyc:
            if not 1 <= letter <= n:
                raise ValueError(f"letter {letter} outside 1..{n}")
        if len(cyc) < 2:
            continue
        img = list(range(1, n + 1))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
        result = compose(result, tuple(img))
    return result


def parse_cycles(text: str, n: int | None = None) -> Perm:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"`` or ``"()"``.

    Letters may be separated by spaces or commas.  When ``n`` is omitted the
    degree is the largest letter mentioned.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation literal")
    pos = 0
    cycs = []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ValueError(f"unexpected text {stripped[pos:m.start()]!r} in {text!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            cycs.append([int(tok) for tok in body])
        except ValueError:
            raise ValueError(f"bad letter in cycle ({m.group(1)})") from None
        pos = m.end()
    if stripped[pos:].strip() or not cycs:
        raise ValueError(f"malformed cycle notation {text!r}")
    if n is None:
        n = max((max(c) for c in cycs if c), default=1)
    return from_cycles(n, cycs)


def format_cycles(p: Perm) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)
