"""Text literals for group elements.

Permutations use cycle notation, ``(1 2 3)(4 5)``; cyclic residues are
plain integers; everything tuple-shaped (direct products, dihedral and
dicyclic normal forms, semidirect pairs, 2x2 matrices in row-major order)
is written bracketed and comma-separated, e.g. ``[2, (1 2 3)]``.
"""

from __future__ import annotations

from . import perm
from .groups import (
    CyclicGroup,
    DirectProduct,
    EncodingError,
    Group,
    _MatrixGroup,
    _PermGroup,
)


def split_top(text: str) -> list[str]:
    """Split on commas that are not nested inside () or []."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise EncodingError(f"unbalanced brackets in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise EncodingError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur).strip())
    return parts


def _unbracket(text: str) -> list[str]:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise EncodingError(f"expected a bracketed tuple, got {text!r}")
    return split_top(t[1:-1])


def _int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise EncodingError(f"expected an integer, got {tok!r}") from None


def parse_element(G: Group, text: str):
    """Parse ``text`` into the canonical encoding of an element of ``G``."""
    if isinstance(G, _PermGroup):
        try:
            a = perm.parse_cycles(text, G.n)
        except ValueError as exc:
            raise EncodingError(str(exc)) from None
    elif isinstance(G, CyclicGroup):
        a = _int(text.strip())
    elif isinstance(G, DirectProduct):
        parts = _unbracket(text)
        if len(parts) != len(G.factors):
            raise EncodingError(f"{G.name} needs {len(G.factors)} components, got {len(parts)}")
        a = tuple(parse_element(f, s) for f, s in zip(G.factors, parts))
    elif isinstance(G, _MatrixGroup):
        flat = text.replace("[", " ").replace("]", " ").replace(",", " ").split()
        if len(flat) != 4:
            raise EncodingError(f"a 2x2 matrix needs 4 entries, got {text!r}")
        a = G.canonical([_int(x) for x in flat])
    else:
        a = tuple(_int(s) for s in _unbracket(text))
    if not G.contains(a):
        raise EncodingError(f"{text!r} is not an element of {G.name}")
    return a


def format_element(G: Group, a) -> str:
    if isinstance(G, _PermGroup):
        return perm.format_cycles(a)
    if isinstance(G, CyclicGroup):
        return str(a)
    if isinstance(G, DirectProduct):
        return "[" + ", ".join(format_element(f, x) for f, x in zip(G.factors, a)) + "]"
    return "[" + ", ".join(map(str, a)) + "]"


def to_json(G: Group, a):
    """JSON-friendly form: the formatted literal, except cyclic residues stay ints."""
    return a if isinstance(G, CyclicGroup) else format_element(G, a)
