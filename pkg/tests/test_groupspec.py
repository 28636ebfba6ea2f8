from __future__ import annotations

import pytest

from powergraph.groupspec import SpecError, parse


@pytest.mark.parametrize("text, canonical", [
    ("S7", "S7"),
    ("c6 x s3", "C6 x S3"),
    ("E2^2", "E2^2"),
    ("Q8xC9", "Q8 x C9"),
    ("  psl2( 7 )", "PSL2(7)"),
    ("Frob(7,3,2)", "Frob(7,3,2)"),
    ("DIC3", "DIC3"),
    ("SL2(5)", "SL2(5)"),
])
def test_canonical_form(text, canonical):
    assert str(parse(text)) == canonical
    assert str(parse(canonical)) == canonical


def test_product_terms():
    g = parse("E3^2 x C4")
    assert g.is_product
    assert [t.kind for t in g.terms] == ["E", "C"]


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("S7 x", 4),
    ("C6 y S3", 3),
    ("Z5", 0),
    ("C6 x E4^2", 5),
])
def test_errors_carry_position(text, position):
    with pytest.raises(SpecError) as info:
        parse(text)
    assert info.value.position == position


@pytest.mark.parametrize("text", ["Q12", "D5", "PGL2(2)", "PSL2(4)", "Frob(7,3,3)", "Frob(8,2,7)", "A2"])
def test_invalid_parameters(text):
    with pytest.raises(SpecError):
        parse(text)
