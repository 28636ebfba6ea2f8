"""Closed-form component counts and diameter classes.

Everything is exact Python integer arithmetic.  Quotients go through
:func:`exact_div`, which refuses to round: a remainder means a formula has
been misread.  Classification returns every case whose hypotheses hold;
when several apply, all are evaluated and their agreement is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from sympy.ntheory import isprime

from .census import (
    OrderCensus,
    is_cyclic,
    is_nilpotent,
    is_p_group,
    unique_prime_order_subgroups,
)

READINGS = ("statement", "proof")

#: small-degree tables quoted for symmetric and alternating groups
SYMMETRIC_TABLE = {2: 1, 3: 4, 4: 13, 5: 31, 6: 83, 7: 541, 8: 961}
ALTERNATING_TABLE = {3: 1, 4: 7, 5: 31, 6: 121, 7: 421, 8: 842, 9: 5442, 10: 29345}


class PredictionError(ValueError):
    """The requested formula does not apply to the given parameters."""


@lru_cache(maxsize=None)
def fact(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def _prime(x) -> bool:
    """Primality of a possibly non-integral quantity (non-integers are not prime)."""
    if isinstance(x, int):
        return x > 1 and bool(isprime(x))
    return False


def _half(n: int):
    return n // 2 if n % 2 == 0 else n / 2


@dataclass(frozen=True)
class Case:
    tag: str
    value: int | float | None


@dataclass
class Prediction:
    """Outcome of a predictor.

    ``value`` is set iff every precondition holds (and, when several cases
    apply, they agree).  ``kind`` is ``"count"`` or ``"diameter"``.
    """

    tag: str
    value: int | float | None
    kind: str = "count"
    cases: list[Case] = field(default_factory=list)
    preconditions: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        vals = {c.value for c in self.cases}
        return len(vals) <= 1

    @property
    def applicable(self) -> bool:
        return all(ok for _, ok in self.preconditions)

    @property
    def connected(self) -> bool:
        return self.kind == "count" and self.value == 1

    def display(self) -> str:
        if self.value is None:
            return "UNCLASSIFIED" if not self.cases else "DISAGREE"
        if self.connected:
            return "CONNECTED"
        if self.value == math.inf:
            return "inf"
        return str(self.value)

    def to_json(self) -> dict:
        def enc(v):
            if v is None:
                return None
            return "inf" if v == math.inf else str(v)

        return {
            "case": self.tag,
            "kind": self.kind,
            "value": enc(self.value),
            "connected": self.connected,
            "cases": [{"case": c.tag, "value": enc(c.value)} for c in self.cases],
            "agree": self.agree,
            "preconditions": dict(sorted(self.preconditions)),
        }


def _single(tag: str, value, pre: list[tuple[str, bool]], kind: str = "count") -> Prediction:
    ok = all(h for _, h in pre)
    return Prediction(tag, value if ok else None, kind,
                      [Case(tag, value)] if ok else [], pre)


def _combine(family: str, cases: list[Case], pre: list[tuple[str, bool]]) -> Prediction:
    if not cases:
        return Prediction(f"{family}-unclassified", None, "count", [], pre)
    tag = "+".join(c.tag for c in cases)
    vals = {c.value for c in cases}
    value = cases[0].value if len(vals) == 1 else None
    return Prediction(tag, value, "count", cases, pre)


# --- nilpotent groups --------------------------------------------------------------

def pred_pgroup(c: OrderCensus) -> Prediction:
    p = is_p_group(c)
    if p is None:
        raise PredictionError("not a p-group")
    value = exact_div(c.count(p), p - 1)
    return _single("Thm-pgroup", value, [("p-group", True)])


def pred_diameter_class(G, c: OrderCensus) -> Prediction:
    """Diameter 1, 2, 3 or 4 when the group falls in one of the classified shapes."""
    p = is_p_group(c)
    cyclic = is_cyclic(c)
    nil = is_nilpotent(G, c)
    unique = unique_prime_order_subgroups(c)
    pre = [("nontrivial", c.group_order > 1), ("nilpotent", nil),
           ("p-group", p is not None), ("cyclic", cyclic),
           ("unique prime-order subgroups", unique)]
    if c.group_order <= 2:
        # a single vertex or none at all
        return Prediction("diameter-trivial", 0, "diameter", [Case("diameter-trivial", 0)], pre)
    if p is not None and cyclic:
        tag, v = "Thm-diameter-cyclic-pgroup", 1
    elif nil and unique:
        tag, v = "Thm-diameter-nilpotent-cyclic-sylows", 2
    elif not nil and unique:
        tag, v = "Thm-diameter-nonnilpotent-unique-subgroups", 3
    elif nil and p is None:
        tag, v = "Thm-nilpotent-fat-sylow", 4
    else:
        return Prediction("diameter-unclassified", None, "diameter", [], pre)
    return Prediction(tag, v, "diameter", [Case(tag, v)], pre)


# --- partitioned groups -----------------------------------------------------------------

def pred_hughes_thompson(order: int, p: int, hp_is_qgroup: bool,
                         hp_component_count: int | None = None) -> Prediction:
    if not _prime(p):
        raise PredictionError(f"{p} is not prime")
    if order % p:
        raise PredictionError(f"{p} does not divide {order}")
    n = exact_div(order, p)
    if hp_is_qgroup:
        if hp_component_count is None:
            raise PredictionError("c(H_p) is required when H_p is a q-group")
        return _single("Thm-hughes-thompson-qgroup", hp_component_count + n,
                       [("p | |G|", True), ("H_p is a q-group", True)])
    return _single("Thm-hughes-thompson", 1 + n, [("p | |G|", True), ("H_p is not a q-group", True)])


def pred_frobenius(kernel_order: int, kernel_is_pgroup: bool,
                   kernel_component_count: int | None = None) -> Prediction:
    if kernel_order < 2:
        raise PredictionError("kernel must be nontrivial")
    if kernel_is_pgroup:
        if kernel_component_count is None:
            raise PredictionError("c(K) is required when the kernel is a p-group")
        return _single("Thm-frobenius-pkernel", kernel_order + kernel_component_count,
                       [("K is a p-group", True)])
    return _single("Thm-frobenius", kernel_order + 1, [("K is not a p-group", True)])


def _check_prime_power(p: int, n: int) -> None:
    if not _prime(p):
        raise PredictionError(f"{p} is not prime")
    if n < 1:
        raise PredictionError("exponent n must be >= 1")


def _psl_pgl_value(p: int, n: int) -> int:
    return exact_div(p ** (2 * n + 1) - 1, p - 1)


def pred_psl2(p: int, n: int = 1) -> Prediction:
    _check_prime_power(p, n)
    # the partition argument needs q >= 4; PSL2(2) = S3 and PSL2(3) = A4 fall outside
    return _single("Thm-psl2", _psl_pgl_value(p, n), [("q = p^n >= 4", p ** n >= 4)])


def pred_pgl2(p: int, n: int = 1) -> Prediction:
    _check_prime_power(p, n)
    if p == 2:
        raise PredictionError("PGL2 formula needs p odd")
    return _single("Thm-pgl2", _psl_pgl_value(p, n), [("p odd", True)])


def pred_suzuki(m: int) -> Prediction:
    if m < 1:
        raise PredictionError("Suzuki parameter m must be >= 1")
    q = 2 ** (2 * m + 1)
    value = exact_div(q ** 3 * (q + 1) ** 2, 2) - q * q + q - 1
    assert value % q == q - 1
    return _single("Thm-suzuki", value, [("m >= 1", True)])


# --- symmetric and alternating groups ------------------------------------------------------

def symmetric_cases(n: int) -> list[Case]:
    if n < 2:
        raise PredictionError("symmetric degree must be >= 2")
    out = []
    if n in SYMMETRIC_TABLE:
        out.append(Case("Thm-Sn-table", SYMMETRIC_TABLE[n]))
        return out
    if n >= 9 and not _prime(n) and not _prime(n - 1):
        out.append(Case("Thm-Sn-case1", 1))
    if n >= 11 and _prime(n):
        out.append(Case("Thm-Sn-case2", fact(n - 2) + 1))
    if n >= 12 and _prime(n - 1):
        p = n - 1
        out.append(Case("Thm-Sn-case3", (p + 1) * fact(p - 2) + 1))
    return out


def pred_symmetric(n: int) -> Prediction:
    return _combine("Thm-Sn", symmetric_cases(n), [("n >= 2", n >= 2)])


def _an_case2(p: int, reading: str) -> list[Case]:
    base = fact(p - 2)
    if _prime(p - 2):
        return [Case("Thm-An-case2", base + exact_div(p * (p - 1) * fact(p - 4), 2) + 1)]
    if _prime((p - 1) // 2):
        return [Case("Thm-An-case2", base + exact_div(4 * p * (p - 2) * fact(p - 4), p - 1) + 1)]
    return [Case("Thm-An-case2", base + 1)]


def _an_case3(p: int, reading: str) -> list[Case]:
    base = (p + 1) * fact(p - 2)
    if _prime((p + 1) // 2):
        return [Case("Thm-An-case3", base + exact_div(4 * p * fact(p - 2), p + 1) + 1)]
    if _prime((p - 1) // 2):
        coeff = 4 if reading == "statement" else 2
        return [Case("Thm-An-case3",
                     base + exact_div(coeff * p * (p + 1) * (p - 2) * fact(p - 4), p - 1) + 1)]
    return [Case("Thm-An-case3", base + 1)]


def _an_case4(p: int, reading: str) -> list[Case]:
    x = exact_div((p + 2) * (p + 1) * fact(p - 2), 2)
    y = exact_div(4 * p * (p + 2) * fact(p - 2), p + 1) if (p + 1) % 2 == 0 else None
    a, b = _prime(p + 2), _prime((p + 1) // 2)
    if reading == "statement":
        if a and b:
            v = fact(p) + x + x + 1
        elif a:
            v = fact(p) + x + 1
        elif b:
            v = x + y + 1
        else:
            v = fact(p) + 1
    else:
        # per-class counts: p!-many (p+2)-cycle classes, x p-cycle classes, y (q,q)-classes
        v = x + 1 + (fact(p) if a else 0) + (y if b else 0)
    return [Case("Thm-An-case4", v)]


def _an_case5(p: int, reading: str) -> list[Case]:
    base = exact_div(fact(2 * p - 1), p * (p - 1))
    if _prime(2 * p - 1):
        return [Case("Thm-An-case5", 2 * p * fact(2 * p - 3) + base + 1)]
    return [Case("Thm-An-case5", base + 1)]


def _an_case6(p: int, reading: str) -> list[Case]:
    base = exact_div((2 * p + 1) * fact(2 * p - 1), p * (p - 1))
    if _prime(2 * p + 1):
        return [Case("Thm-An-case6", base + fact(2 * p - 1) + 1)]
    if _prime(2 * p - 1):
        return [Case("Thm-An-case6", base + p * (2 * p + 1) * fact(2 * p - 3) + 1)]
    return [Case("Thm-An-case6", base + 1)]


def _an_case7(p: int, reading: str) -> list[Case]:
    if _prime(2 * p + 1):
        return [Case("Thm-An-case7", 2 * (p + 1) * fact(2 * p - 1) + 1)]
    return [Case("Thm-An-case7", 1)]


def alternating_cases(n: int, reading: str = "statement") -> list[Case]:
    if n < 3:
        raise PredictionError("alternating degree must be >= 3")
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    if n in ALTERNATING_TABLE:
        return [Case("Thm-An-table", ALTERNATING_TABLE[n])]
    out: list[Case] = []
    if n >= 11 and _prime(n):
        out += _an_case2(n, reading)
    if n >= 12 and _prime(n - 1):
        out += _an_case3(n - 1, reading)
    if n >= 13 and _prime(n - 2):
        out += _an_case4(n - 2, reading)
    if n >= 14 and n % 2 == 0 and _prime(n // 2):
        out += _an_case5(n // 2, reading)
    if n >= 11 and n % 2 == 1 and _prime((n - 1) // 2):
        out += _an_case6((n - 1) // 2, reading)
    if n >= 12 and n % 2 == 0 and _prime((n - 2) // 2):
        out += _an_case7((n - 2) // 2, reading)
    if not any(_prime(x) for x in (n, n - 1, n - 2, _half(n), _half(n - 1), _half(n - 2))):
        out.append(Case("Thm-An-case1", 1))
    return out


def pred_alternating(n: int, reading: str = "statement") -> Prediction:
    pre = [("n >= 3", n >= 3), ("reading", reading in READINGS)]
    return _combine("Thm-An", alternating_cases(n, reading), pre)


#: family name -> predictor taking integer parameters (used by the CLI)
FAMILIES = {
    "symmetric": pred_symmetric,
    "alternating": pred_alternating,
    "psl2": pred_psl2,
    "pgl2": pred_pgl2,
    "suzuki": pred_suzuki,
    "frobenius": pred_frobenius,
    "hughes-thompson": pred_hughes_thompson,
}
