from __future__ import annotations

import random

import pytest

from powergraph import engine, perm
from powergraph import witness as W
from powergraph.checks import WITNESS_DEGREES, random_coprime_instance, random_instance
from powergraph.catalog import catalog
from powergraph.groups import make_group
from powergraph.literals import format_element, parse_element

INSTANCES = 1000


def P(text, n):
    return perm.parse_cycles(text, n)


def fmt(w):
    return [perm.format_cycles(v) for v in w]


BOUNDS = {
    "transposition": W.TRANSPOSITION_BOUND, "threecycle": W.THREECYCLE_BOUND,
    "involution": W.INVOLUTION_BOUND, "order3": W.ORDER3_BOUND, "primeorder": W.PRIMEORDER_BOUND,
}


def test_bounds():
    assert (W.COPRIME_BOUND, W.TRANSPOSITION_BOUND, W.THREECYCLE_BOUND) == (2, 4, 4)
    assert (W.INVOLUTION_BOUND, W.ORDER3_BOUND, W.PRIMEORDER_BOUND) == (6, 8, 6)


# --- spec examples -------------------------------------------------------------------------------

def test_coprime_examples():
    C6 = make_group("C6")
    assert list(W.coprime_path(C6, 2, 3)) == [2, 5, 3]
    G = make_group("C6 x S3")
    x, y = parse_element(G, "[2, ()]"), parse_element(G, "[3, ()]")
    assert [format_element(G, v) for v in W.coprime_path(G, x, y)] == ["[2, ()]", "[5, ()]", "[3, ()]"]
    S5 = make_group("S5")
    w = W.coprime_path(S5, P("(1 2 3)", 5), P("(4 5)", 5))
    assert fmt(w) == ["(1 2 3)", "(1 2 3)(4 5)", "(4 5)"]


def test_coprime_preconditions():
    S3 = make_group("S3")
    with pytest.raises(W.WitnessError):
        W.coprime_path(S3, P("(1 2 3)", 3), P("(1 2)", 3))  # do not commute
    with pytest.raises(W.WitnessError):
        W.coprime_path(make_group("C12"), 3, 6)  # orders 4 and 2
    with pytest.raises(W.WitnessError):
        W.coprime_path(make_group("C6"), 0, 3)


def test_transposition_examples():
    w = W.transposition_path(7, P("(1 2)", 7), P("(3 4)", 7))
    assert fmt(w) == ["(1 2)", "(1 2)(5 6 7)", "(5 6 7)", "(3 4)(5 6 7)", "(3 4)"]
    assert W.transposition_path(7, P("(1 2)", 7), P("(1 2)", 7)).length == 0
    w = W.transposition_path(7, P("(1 2)", 7), P("(1 3)", 7))
    assert w.length == 4 and perm.support(w.vertices[2]) <= {4, 5, 6, 7}
    with pytest.raises(W.WitnessError):
        W.transposition_path(6, P("(1 2)", 6), P("(3 4)", 6))
    with pytest.raises(W.WitnessError):
        W.transposition_path(7, P("(1 2 3)", 7), P("(3 4)", 7))


def test_threecycle_examples():
    w = W.threecycle_path(10, P("(1 2 3)", 10), P("(4 5 6)", 10))
    assert fmt(w) == ["(1 2 3)", "(1 2 3)(7 8)(9 10)", "(7 8)(9 10)", "(4 5 6)(7 8)(9 10)", "(4 5 6)"]
    assert W.threecycle_path(10, P("(1 2 3)", 10), P("(1 2 3)", 10)).length == 0
    w = W.threecycle_path(11, P("(1 2 3)", 11), P("(1 2 4)", 11))
    W.validate(w, bound=4)
    with pytest.raises(W.WitnessError):
        W.threecycle_path(9, P("(1 2 3)", 9), P("(4 5 6)", 9))


def test_involution_examples():
    w = W.involution_to_threecycle(10, P("(1 2)(3 4)", 10))
    assert fmt(w) == ["(1 2)(3 4)", "(1 2)(3 4)(5 6 7)", "(5 6 7)"]
    w = W.involution_to_threecycle(10, P("(1 2)(3 4)(5 6)(7 8)", 10))
    assert w.length <= 6 and fmt(w)[-1] == "(1 2 3)"
    w = W.involution_to_threecycle(12, P("(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)", 12))
    W.validate(w, bound=6)
    assert perm.cycle_type(w.end) == (3,)
    with pytest.raises(W.WitnessError):
        W.involution_to_threecycle(10, P("(1 2)", 10))  # odd


def test_order3_examples():
    assert W.order3_to_threecycle(11, P("(1 2 3)", 11)).length == 0
    w = W.order3_to_threecycle(11, P("(1 2 3)(4 5 6)", 11))
    W.validate(w, bound=8)
    assert perm.cycle_type(w.end) == (3,)
    w = W.order3_to_threecycle(13, P("(1 2 3)(4 5 6)(7 8 9)(10 11 12)", 13))
    W.validate(w, bound=8)
    with pytest.raises(W.WitnessError):
        W.order3_to_threecycle(11, P("(1 2 3 4 5)", 11))


def test_primeorder_examples():
    pi = P("(1 2 3 4 5)", 12)
    w = W.primeorder_to_threecycle(12, pi)
    assert fmt(w) == ["(1 2 3 4 5)", "(1 2 3 4 5)(6 7 8)", "(6 7 8)"]
    pi = P("(1 2 3 4 5)(6 7 8 9 10)(11 12 13 14 15)", 17)
    w = W.primeorder_to_threecycle(17, pi)
    W.validate(w, start=pi, bound=6)
    assert perm.cycle_type(w.end) == (3,)
    with pytest.raises(W.WitnessError, match="uncovered"):
        W.primeorder_to_threecycle(12, P("(1 2 3 4 5)(6 7 8 9 10)", 12))


def test_validator_rejects_bad_paths():
    G = make_group("C12")
    with pytest.raises(AssertionError):
        W.validate(W.PathWitness(G, [4, 6], 2))  # not adjacent
    with pytest.raises(AssertionError):
        W.validate(W.PathWitness(G, [0, 1], 2))  # identity vertex
    with pytest.raises(AssertionError):
        W.validate(W.PathWitness(G, [1, 2, 4, 8], 2))  # too long
    with pytest.raises(AssertionError):
        W.validate(W.PathWitness(G, [1, 2], 2), end=3)


# --- randomized validity -------------------------------------------------------------------------

CASES = [(op, n) for op, degrees in WITNESS_DEGREES.items() for n in degrees]


@pytest.mark.parametrize("op, n", CASES)
def test_randomized_witnesses(op, n):
    fn, nargs, _ = W.LEMMAS[op]
    rng = random.Random(f"{op}-{n}")
    for _ in range(INSTANCES):
        args = random_instance(op, n, rng)
        w = fn(*args)
        W.validate(w, start=args[1], bound=BOUNDS[op])
        if nargs == 2:
            assert w.end == args[2]
        else:
            assert perm.cycle_type(w.end) == (3,)


def test_randomized_coprime():
    rng = random.Random(11)
    specs = catalog(200)
    for _ in range(INSTANCES):
        G, x, y = random_coprime_instance(rng, specs)
        W.validate(W.coprime_path(G, x, y), start=x, end=y, bound=W.COPRIME_BOUND)


def test_witnesses_deterministic():
    a = W.involution_to_threecycle(13, P("(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)", 13))
    b = W.involution_to_threecycle(13, P("(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)", 13))
    assert a.vertices == b.vertices


def test_transposition_endpoints_share_component():
    S7 = make_group("S7")
    rng = random.Random(5)
    for _ in range(200):
        _, t1, t2 = random_instance("transposition", 7, rng)
        assert engine.same_component(S7, t1, t2)


def test_concatenation():
    w1 = W.transposition_path(7, P("(1 2)", 7), P("(3 4)", 7))
    w2 = W.transposition_path(7, P("(3 4)", 7), P("(5 6)", 7))
    w = w1 + w2
    assert w.length == 8 and w.bound == 8
    W.validate(w, start=P("(1 2)", 7), end=P("(5 6)", 7))
