from __future__ import annotations

import math
import random
from collections import Counter

import numpy as np
import pytest

from powergraph import perm
from powergraph.census import census
from powergraph.groups import CapExceeded, EncodingError, center, make_group, subgroup_closure
from powergraph.literals import parse_element

# one or more instances per family, all of order <= 10^4
FAMILY_SPECS = [
    "C1", "C9973", "C12", "E2^10", "E3^5", "D200", "D6", "Q64", "Q8", "DIC25", "DIC3",
    "S1", "S2", "S7", "A7", "A5", "SL2(7)", "SL2(2)", "PSL2(13)", "PSL2(2)", "PGL2(11)",
    "PGL2(3)", "Frob(101,5,36)", "Frob(7,3,2)", "Frob(5,4,2)", "C6 x S3", "Q8 x C9",
]

TRIPLES = 100_000


@pytest.fixture(scope="module", params=FAMILY_SPECS)
def group(request):
    return make_group(request.param)


def test_identity_and_inverse_exhaustive(group):
    G = group
    e = G.identity
    elems = list(G.elements())
    assert len(elems) == G.order and len(set(elems)) == G.order
    assert elems[0] == e
    for a in elems:
        assert G._mul(a, e) == a and G._mul(e, a) == a
        ai = G._inv(a)
        assert G._mul(a, ai) == e and G._mul(ai, a) == e


def test_associativity_sampled(group):
    G = group
    rng = random.Random(7)
    elems = list(G.elements())
    m = G._mul
    for _ in range(TRIPLES):
        a, b, c = rng.choice(elems), rng.choice(elems), rng.choice(elems)
        assert m(m(a, b), c) == m(a, m(b, c))


def test_lagrange_exhaustive(group):
    o = group.orders()
    assert np.all(group.order % o == 0)
    assert o[0] == 1 and np.count_nonzero(o == 1) == 1


def test_power_map_matches_pow(group):
    G = group
    rng = random.Random(3)
    for k in (2, 3, 6, -1, 12):
        pm = G.power_map(k)
        for i in rng.sample(range(G.order), min(G.order, 200)):
            assert G.element(pm[i]) == G._pow(G.element(i), k)


def test_index_roundtrip(group):
    G = group
    for i in range(0, G.order, max(1, G.order // 500)):
        assert G.index(G.element(i)) == i


@pytest.mark.parametrize("n", range(1, 8))
def test_perm_order_is_lcm_of_cycle_type(n):
    G = make_group(f"S{n}")
    o = G.orders()
    for i, a in enumerate(G.elements()):
        ct = perm.cycle_type(a)
        assert o[i] == (math.lcm(*ct) if ct else 1)


@pytest.mark.parametrize("spec, order", [
    ("S8", 40320), ("A9", 181440), ("PSL2(7)", 168), ("PGL2(5)", 120), ("SL2(5)", 120),
    ("D12", 12), ("Q16", 16), ("DIC3", 12), ("E5^2", 25), ("Frob(7,3,2)", 21), ("C6 x S3", 36),
])
def test_orders(spec, order):
    assert make_group(spec).order == order


def test_spec_examples():
    S3 = make_group("S3")
    a, b = parse_element(S3, "(1 2)"), parse_element(S3, "(1 3)")
    assert perm.format_cycles(S3.mul(a, b)) == "(1 3 2)"
    C12 = make_group("C12")
    assert C12.mul(7, 8) == 3
    assert C12.element_order(8) == 3


def test_psl2_5_census_equals_a5():
    assert census(make_group("PSL2(5)")).counts == census(make_group("A5")).counts
    assert census(make_group("PGL2(3)")).counts == census(make_group("S4")).counts


@pytest.mark.parametrize("spec, expected", [
    ("Q8", {1: 1, 2: 1, 4: 6}),
    ("S4", {1: 1, 2: 9, 3: 8, 4: 6}),
    ("D12", {1: 1, 2: 7, 3: 2, 6: 2}),
    ("SL2(3)", {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}),
])
def test_order_histograms(spec, expected):
    G = make_group(spec)
    assert dict(Counter(int(x) for x in G.orders())) == expected


def test_center_sizes():
    assert len(center(make_group("Q8"))) == 2
    assert len(center(make_group("S5"))) == 1
    assert len(center(make_group("C6 x S3"))) == 6
    assert len(center(make_group("SL2(5)"))) == 2
    assert len(center(make_group("D12"))) == 2


def test_generators_generate():
    for spec in ("S5", "PSL2(7)", "DIC5", "Frob(7,3,2)", "E2^3", "C4 x C9"):
        G = make_group(spec)
        assert len(subgroup_closure(G, G.generators())) == G.order


def test_membership_errors():
    G = make_group("C6")
    with pytest.raises(EncodingError):
        G.mul(6, 1)
    with pytest.raises(EncodingError):
        make_group("S4").inv((1, 2, 3))


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        make_group("S9", max_order=1000)
    with pytest.raises(CapExceeded):
        make_group("C6 x A7", max_order=10_000)
