"""Element-order census and the structural predicates derived from it."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sympy import totient
from sympy.ntheory import factorint, isprime

from .groups import Group


@dataclass(frozen=True)
class OrderCensus:
    """``counts[k]`` is the number of elements of order ``k``."""

    group_order: int
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if sum(self.counts.values()) != self.group_order:
            raise ValueError("census counts do not sum to the group order")

    def count(self, k: int) -> int:
        return self.counts.get(k, 0)

    @property
    def primes(self) -> list[int]:
        return sorted(factorint(self.group_order))

    @property
    def exponent(self) -> int:
        return int(np.lcm.reduce(list(self.counts))) if self.counts else 1

    def p_part(self, p: int) -> int:
        m = 1
        n = self.group_order
        while n % p == 0:
            n //= p
            m *= p
        return m

    def to_json(self) -> dict[str, int]:
        return {str(k): v for k, v in sorted(self.counts.items())}


def census(G: Group) -> OrderCensus:
    """Exact order counts, from one vectorised pass over the element orders."""
    ks, cs = np.unique(G.orders(), return_counts=True)
    return OrderCensus(G.order, {int(k): int(c) for k, c in zip(ks, cs)})


def count_subgroups_of_prime_order(c: OrderCensus, p: int) -> int:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return c.count(p) // (p - 1)


def count_cyclic_subgroups_of_order(c: OrderCensus, k: int) -> int:
    """Number of cyclic subgroups of order ``k``: each has phi(k) generators."""
    if k < 2:
        raise ValueError("k must be >= 2")
    phi = int(totient(k))
    n, r = divmod(c.count(k), phi)
    assert r == 0, f"count({k}) is not a multiple of phi({k})"
    return n


def is_p_group(c: OrderCensus) -> int | None:
    """The prime p when |G| is a power of p (> 1), else None."""
    ps = c.primes
    return ps[0] if len(ps) == 1 else None


def _p_power(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def is_nilpotent(G: Group | None, c: OrderCensus) -> bool:
    """Every Sylow subgroup is normal: the p-power-order elements number exactly |G|_p."""
    if c.group_order == 1:
        return True
    for p in c.primes:
        n = sum(v for k, v in c.counts.items() if _p_power(k, p))
        if n != c.p_part(p):
            return False
    return True


def sylows_cyclic_or_quaternion(c: OrderCensus) -> bool:
    """For nilpotent G: each Sylow is cyclic or generalized quaternion.

    Equivalent to a unique subgroup of each prime order.
    """
    return unique_prime_order_subgroups(c)


def unique_prime_order_subgroups(c: OrderCensus) -> bool:
    return all(c.count(p) == p - 1 for p in c.primes)


def is_cyclic(c: OrderCensus) -> bool:
    return c.count(c.group_order) > 0
