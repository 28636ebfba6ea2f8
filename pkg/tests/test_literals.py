from __future__ import annotations

import pytest

from powergraph.catalog import catalog
from powergraph.groups import EncodingError, make_group
from powergraph.literals import format_element, parse_element, split_top, to_json


def test_split_top():
    assert split_top("1, (1 2), [3, (4 5)]") == ["1", "(1 2)", "[3, (4 5)]"]
    with pytest.raises(EncodingError):
        split_top("[1, 2")
    with pytest.raises(EncodingError):
        split_top("1)")


@pytest.mark.parametrize("spec", catalog(200))
def test_roundtrip_over_catalog(spec):
    G = make_group(spec)
    for a in list(G.elements())[:: max(1, G.order // 40)]:
        assert parse_element(G, format_element(G, a)) == a


@pytest.mark.parametrize("spec, text, shown", [
    ("S5", "(1 2 3)(4 5)", "(1 2 3)(4 5)"),
    ("S5", "()", "()"),
    ("C12", "7", "7"),
    ("C6 x S3", "[0, (1 2 3)]", "[0, (1 2 3)]"),
    ("D12", "[2, 1]", "[2, 1]"),
    ("Q8 x C9", "[[1, 0], 3]", "[[1, 0], 3]"),
])
def test_literals(spec, text, shown):
    G = make_group(spec)
    assert format_element(G, parse_element(G, text)) == shown


def test_projective_canonical_form():
    G = make_group("PGL2(5)")
    a = parse_element(G, "[2, 0, 0, 2]")
    assert a == G.identity
    b = parse_element(G, "[[0, 3], [3, 1]]")
    assert parse_element(G, format_element(G, b)) == b
    P = make_group("PSL2(5)")
    m = parse_element(P, "[1, 1, 0, 1]")
    assert parse_element(P, "[4, 4, 0, 4]") == m


def test_json_form():
    assert to_json(make_group("C6"), 5) == 5
    G = make_group("C6 x S3")
    assert to_json(G, parse_element(G, "[1, (1 2)]")) == "[1, (1 2)]"


@pytest.mark.parametrize("spec, text", [
    ("C6", "6"), ("C6", "x"), ("S3", "(1 4)"), ("S3", "(1 2"), ("C6 x S3", "[1]"),
    ("C6 x S3", "1, (1 2)"), ("D12", "[7, 0]"), ("PSL2(5)", "[1, 2, 3]"), ("PSL2(5)", "[1, 1, 1, 1]"),
])
def test_rejects(spec, text):
    with pytest.raises(EncodingError):
        parse_element(make_group(spec), text)
