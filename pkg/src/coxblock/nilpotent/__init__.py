"""Nilpotent orbits: labels, weighted Dynkin diagrams, induction from Levi subalgebras."""

from .diagrams import (
    ParityReport,
    RootWeights,
    WeightedDynkinDiagram,
    character_support,
    kawanaka_parity,
    orbit_dimension,
    root_weight_sets,
)
from .labels import (
    DiagramError,
    LabelError,
    NamedOrbit,
    OrbitLabel,
    Partition,
    PartitionPair,
    classical_labels,
    diagram_from_label,
    label_from_diagram,
    parse_label,
)
from .levi import ChainWitness, LeviDatum, Lemma32Report, lemma32_check, levi_datum
from .table1 import Table1Report, verify_table1
from .tables import diagram_label, exceptional_orbit_table, lookup_orbit

__all__ = [
    "ChainWitness",
    "DiagramError",
    "LabelError",
    "Lemma32Report",
    "LeviDatum",
    "NamedOrbit",
    "OrbitLabel",
    "ParityReport",
    "Partition",
    "PartitionPair",
    "RootWeights",
    "Table1Report",
    "WeightedDynkinDiagram",
    "character_support",
    "classical_labels",
    "diagram_from_label",
    "diagram_label",
    "exceptional_orbit_table",
    "kawanaka_parity",
    "label_from_diagram",
    "lemma32_check",
    "levi_datum",
    "lookup_orbit",
    "orbit_dimension",
    "parse_label",
    "root_weight_sets",
    "verify_table1",
]
