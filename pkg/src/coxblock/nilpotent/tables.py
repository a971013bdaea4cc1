"""Lookups in the bundled exceptional orbit tables, and type-independent diagram validation."""

from __future__ import annotations

from typing import Optional, Sequence

from ..data import DataBundle, DataError, default_data
from ..rootsystem import CartanType, build_root_system
from .diagrams import WeightedDynkinDiagram
from .labels import DiagramError, NamedOrbit, OrbitLabel, label_from_diagram

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


def _key(t: CartanType) -> str:
    key = str(t.untwisted)
    if key not in EXCEPTIONAL:
        raise ValueError(f"{t} is not an exceptional type; orbit tables cover {', '.join(EXCEPTIONAL)}")
    return key


def exceptional_orbit_table(
    t: CartanType, data: Optional[DataBundle] = None
) -> list[tuple[NamedOrbit, WeightedDynkinDiagram]]:
    if isinstance(t, str):
        t = CartanType.parse(t)
    key = _key(t)
    bundle = data or default_data()
    if key not in bundle.orbits:
        raise DataError(f"no orbit table for {key} in the data bundle", bundle.directory)
    rs = build_root_system(t.untwisted)
    return [(NamedOrbit(r.name), WeightedDynkinDiagram(rs, r.weights)) for r in bundle.orbits[key]]


def lookup_orbit(t: CartanType, name: str, data: Optional[DataBundle] = None) -> WeightedDynkinDiagram:
    """Exact name lookup; "regular" and "zero" are accepted aliases."""
    if isinstance(t, str):
        t = CartanType.parse(t)
    key = _key(t)
    wanted = {"regular": key, "zero": "0"}.get(name, name)
    for label, diagram in exceptional_orbit_table(t, data):
        if label.name == wanted:
            return diagram
    raise KeyError(f"no orbit named {name!r} in the {key} table")


def exceptional_label(t: CartanType, weights: Sequence[int], data: Optional[DataBundle] = None) -> NamedOrbit:
    w = tuple(weights)
    for label, diagram in exceptional_orbit_table(t, data):
        if diagram.weights == w:
            return label
    raise DiagramError(f"{w} is not a weighted Dynkin diagram for {t.untwisted}")


def diagram_label(t: CartanType, weights: Sequence[int], data: Optional[DataBundle] = None) -> OrbitLabel:
    """Label of the orbit with this diagram, for any split simple type."""
    if t.family in "ABCD":
        return label_from_diagram(t.untwisted, weights)
    return exceptional_label(t, weights, data)


def all_diagrams(t: CartanType, data: Optional[DataBundle] = None) -> list[tuple[OrbitLabel, tuple[int, ...]]]:
    from .labels import classical_labels, diagram_from_label

    if t.family in "ABCD":
        return [(l, diagram_from_label(t.untwisted, l)) for l in classical_labels(t.untwisted)]
    return [(l, d.weights) for l, d in exceptional_orbit_table(t, data)]
