"""Connectivity of proper power graphs of finite groups.

Build a group from a spec string, then ask the engine for components,
distances and diameters::

    >>> from powergraph import make_group, components
    >>> components(make_group("E2^2")).count
    3
"""

from ._backend import BACKEND
from .census import OrderCensus, census
from .engine import (
    ComponentSummary,
    DiameterResult,
    PowerGraph,
    component_of,
    components,
    diameter,
    distance,
    is_adjacent,
    neighbors,
    same_component,
)
from .groups import CapExceeded, EncodingError, Group, center, make_group
from .groupspec import GroupSpec, SpecError, parse

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CapExceeded", "ComponentSummary", "DiameterResult", "EncodingError", "Group",
    "GroupSpec", "OrderCensus", "PowerGraph", "SpecError", "census", "center", "component_of",
    "components", "diameter", "distance", "is_adjacent", "make_group", "neighbors", "parse",
    "same_component",
]
