"""A fixed catalog of small groups used by the property and verification suites."""

from __future__ import annotations

from .groups import term_order
from .groupspec import parse

CATALOG: tuple[str, ...] = (
    # cyclic and abelian
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12", "C15", "C16", "C27", "C30",
    "E2^2", "E2^3", "E2^4", "E3^2", "E5^2", "E3^3",
    "C2 x C4", "C4 x C4", "C4 x C9", "C2 x C6", "C3 x C9",
    # dihedral / quaternion / dicyclic
    "D6", "D8", "D10", "D12", "D16", "D18", "D20",
    "Q8", "Q16", "Q32", "DIC3", "DIC5", "DIC6", "DIC9",
    # symmetric / alternating
    "S3", "S4", "S5", "S6", "A4", "A5", "A6",
    # matrix groups over prime fields
    "SL2(3)", "SL2(5)", "PSL2(2)", "PSL2(3)", "PSL2(5)", "PSL2(7)", "PGL2(3)", "PGL2(5)",
    "SL2(7)", "PGL2(7)", "PSL2(11)", "PSL2(13)", "PGL2(11)",
    # Frobenius groups
    "Frob(7,3,2)", "Frob(5,4,2)", "Frob(5,2,4)", "Frob(7,2,6)", "Frob(7,6,3)",
    "Frob(11,5,3)", "Frob(13,3,3)", "Frob(13,4,5)", "Frob(15,2,14)", "Frob(31,5,2)",
    # products
    "C6 x S3", "C2 x S3", "C3 x S3", "C5 x S3", "S3 x S3", "C2 x A4", "C3 x A4",
    "C2 x S4", "C2 x D8", "C3 x D8", "C2 x Q8", "C3 x Q8", "Q8 x C9", "C4 x Q8",
    "E2^2 x C3", "E3^2 x C4", "C2 x DIC3", "C5 x DIC3", "C7 x Frob(7,3,2)",
    "C2 x PSL2(5)", "C15 x S3", "C6 x D10",
    "Q8 x S3", "E2^3 x S3", "S3 x S4", "C7 x S4", "S3 x S3 x S3", "C2 x S5", "C3 x SL2(5)",
    "C4 x A5", "C5 x SL2(3)", "Q16 x C3",
)


def order_of(spec: str) -> int:
    out = 1
    for t in parse(spec).terms:
        out *= term_order(t)
    return out


def catalog(max_order: int | None = None) -> list[str]:
    """Catalog specs (canonically formatted), optionally limited by group order."""
    specs = [str(parse(s)) for s in CATALOG]
    if max_order is not None:
        specs = [s for s in specs if order_of(s) <= max_order]
    return specs
