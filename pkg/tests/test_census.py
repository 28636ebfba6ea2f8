from __future__ import annotations

import pytest
from sympy import totient

from powergraph import engine
from powergraph.catalog import catalog
from powergraph.census import (
    OrderCensus,
    census,
    count_cyclic_subgroups_of_order,
    count_subgroups_of_prime_order,
    is_cyclic,
    is_nilpotent,
    is_p_group,
    sylows_cyclic_or_quaternion,
    unique_prime_order_subgroups,
)
from powergraph.groups import make_group


def C(spec):
    return census(make_group(spec))


@pytest.mark.parametrize("spec, counts", [
    ("S3", {1: 1, 2: 3, 3: 2}),
    ("C12", {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4}),
    ("Q8", {1: 1, 2: 1, 4: 6}),
])
def test_census_examples(spec, counts):
    assert C(spec).counts == counts


@pytest.mark.parametrize("spec, p, n", [("E3^2", 3, 4), ("Q8", 2, 1), ("C12", 2, 1), ("E2^3", 2, 7)])
def test_prime_order_subgroups(spec, p, n):
    assert count_subgroups_of_prime_order(C(spec), p) == n


def test_prime_order_rejects_composite():
    with pytest.raises(ValueError):
        count_subgroups_of_prime_order(C("C12"), 4)


def _cyclic_subgroups_brute(G, k):
    subs = set()
    for a in G.elements():
        if G._element_order(a) == k:
            subs.add(frozenset(G._pow(a, i) for i in range(k)))
    return len(subs)


def test_cyclic_subgroups_s7():
    c = C("S7")
    G = make_group("S7")
    assert count_cyclic_subgroups_of_order(c, 7) == 120
    # order-6 elements of S7 have types (6), (3,2) and (3,2,2): 840 + 420 + 210 over phi(6)
    assert count_cyclic_subgroups_of_order(c, 6) == 735 == _cyclic_subgroups_brute(G, 6)
    assert count_cyclic_subgroups_of_order(C("C12"), 12) == 1


def test_p_group():
    assert is_p_group(C("C8")) == 2
    assert is_p_group(C("S3")) is None
    assert is_p_group(C("E3^2")) == 3
    assert is_p_group(C("C1")) is None


@pytest.mark.parametrize("spec, expected", [
    ("S3", False), ("C6 x S3", False), ("Q8 x C9", True), ("A4", False), ("Frob(7,3,2)", False),
    ("Frob(5,4,2)", False), ("C1", True), ("E2^2 x C3", True), ("D8 x E3^2", True), ("Q16 x C5", True),
    ("D8 x S3", False), ("E3^2 x C4", True),
])
def test_nilpotent(spec, expected):
    G = make_group(spec)
    assert is_nilpotent(G, census(G)) is expected


@pytest.mark.parametrize("spec, expected", [
    ("C12", True), ("E2^2", False), ("Q8 x C9", True), ("Q16", True), ("D8", False),
])
def test_sylow_shape(spec, expected):
    assert sylows_cyclic_or_quaternion(C(spec)) is expected


@pytest.mark.parametrize("spec, expected", [("DIC3", True), ("S3", False), ("C15", True), ("SL2(5)", False)])
def test_unique_prime_order_subgroups(spec, expected):
    assert unique_prime_order_subgroups(C(spec)) is expected


def test_is_cyclic():
    assert is_cyclic(C("C4 x C9"))
    assert not is_cyclic(C("E2^2"))


def test_census_laws_over_catalog():
    for spec in catalog(100_000):
        c = C(spec)
        assert sum(c.counts.values()) == c.group_order
        assert c.count(1) == 1
        for k, v in c.counts.items():
            assert v % int(totient(k)) == 0, (spec, k)


def test_pgroup_bijection_with_engine():
    for spec in catalog(100_000):
        G = make_group(spec)
        c = census(G)
        p = is_p_group(c)
        if p is not None:
            assert count_subgroups_of_prime_order(c, p) == engine.components(G).count, spec


def test_census_validates_sum():
    with pytest.raises(ValueError):
        OrderCensus(6, {1: 1, 2: 3})
    assert C("S4").to_json() == {"1": 1, "2": 9, "3": 8, "4": 6}
    assert C("C12").exponent == 12


def test_six_cycle_subgroups_s7():
    # the 420 figure counts only subgroups generated by a single 6-cycle
    from powergraph import perm
    G = make_group("S7")
    six = {frozenset(G._pow(a, i) for i in range(6)) for a in G.elements() if perm.cycle_type(a) == (6,)}
    assert len(six) == 420
    assert count_cyclic_subgroups_of_order(C("S7"), 6) - len(six) == 315
