"""Levi data and the three-condition induction criterion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..data import DataBundle
from ..rootsystem import (
    Component,
    Root,
    RootSystem,
    build_root_system,
    connected_components,
    subsystem_components,
    subsystem_label,
)
from .diagrams import WeightedDynkinDiagram, as_diagram, orbit_dimension_unchecked
from .labels import DiagramError
from .tables import diagram_label


@dataclass(frozen=True)
class LeviDatum:
    I: frozenset[int]
    components: tuple[Component, ...]
    positive_roots: tuple[Root, ...]
    u_I: tuple[Root, ...]

    @property
    def label(self) -> str:
        return subsystem_label(self.components)


def levi_datum(rs: RootSystem, I: Iterable[int]) -> LeviDatum:
    I = frozenset(I)
    if not I <= set(rs.simple_roots):
        raise ValueError(f"{sorted(I)} is not a subset of the simple roots of {rs.cartan_type}")
    outside = [i - 1 for i in rs.simple_roots if i not in I]
    levi_pos, u = [], []
    for r in rs.positive_roots:
        (u if any(r[k] for k in outside) else levi_pos).append(r)
    return LeviDatum(I, tuple(subsystem_components(rs, I)), tuple(levi_pos), tuple(u))


@dataclass(frozen=True)
class ChainWitness:
    """Witness for one component C of J: the path alpha_1..alpha_n in I and beta in C."""

    component: tuple[int, ...]
    path: tuple[int, ...]
    beta: Optional[int]

    def to_json(self) -> dict:
        return {"component": list(self.component), "path": list(self.path), "beta": self.beta}


@dataclass(frozen=True)
class Lemma32Report:
    cond_i: bool
    levi_label: str
    cond_ii: bool
    cond_iii: bool
    witnesses: tuple[ChainWitness, ...]
    failed_components: tuple[tuple[int, ...], ...]
    uI_in_u2: bool
    dim_identity: bool
    dim_ambient: int
    dim_levi: int
    u_I: int
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii and self.uI_in_u2 and self.dim_identity

    def failures(self) -> list[str]:
        names = ("cond_i", "cond_ii", "cond_iii", "uI_in_u2", "dim_identity")
        return [n for n in names if not getattr(self, n)]

    def to_json(self) -> dict:
        return {
            "cond_i": self.cond_i,
            "levi_label": self.levi_label,
            "cond_ii": self.cond_ii,
            "cond_iii": self.cond_iii,
            "witnesses": [w.to_json() for w in self.witnesses],
            "failed_components": [list(c) for c in self.failed_components],
            "uI_in_u2": self.uI_in_u2,
            "dim_identity": self.dim_identity,
            "dim_ambient": self.dim_ambient,
            "dim_levi": self.dim_levi,
            "u_I": self.u_I,
            "passed": self.passed,
            "notes": list(self.notes),
        }


def levi_orbit_dimension(rs: RootSystem, components: Sequence[Component], d: WeightedDynkinDiagram) -> int:
    """Orbit dimension computed inside the Levi, one simple factor at a time."""
    total = 0
    for comp in components:
        sub = build_root_system(comp.cartan_type)
        total += orbit_dimension_unchecked(sub, d.restrict(comp.nodes))
    return total


def _component_labels(components, d, data) -> tuple[bool, str, list[str]]:
    ok = True
    pieces, notes = [], []
    for comp in components:
        local = d.restrict(comp.nodes)
        try:
            label = diagram_label(comp.cartan_type, local, data)
            pieces.append(f"{comp.cartan_type}:{label}")
        except DiagramError as exc:
            ok = False
            pieces.append(f"{comp.cartan_type}:?")
            notes.append(str(exc))
    return ok, "+".join(pieces) if pieces else "T", notes


def _as_path(rs: RootSystem, nodes: set[int]) -> list[tuple[int, ...]]:
    """Both end-to-end orderings of ``nodes`` if they induce a simple path, else []."""
    if len(nodes) == 1:
        return [tuple(nodes)]
    deg = {v: len(rs.adjacency[v] & nodes) for v in nodes}
    ends = [v for v, k in deg.items() if k == 1]
    if len(ends) != 2 or any(k > 2 for k in deg.values()):
        return []
    walk = [ends[0]]
    while len(walk) < len(nodes):
        nxt = [w for w in rs.adjacency[walk[-1]] & nodes if w not in walk]
        if len(nxt) != 1:
            return []
        walk.append(nxt[0])
    return [tuple(walk), tuple(reversed(walk))]


def _chain_witness(rs: RootSystem, d: WeightedDynkinDiagram, I: frozenset[int], comp: tuple[int, ...]):
    zero_I = {g for g in I if d.weights[g - 1] == 0}
    positive_I = {g for g in I if d.weights[g - 1] > 0}
    comp_set = set(comp)
    touching: set[int] = set()
    for piece in connected_components(rs, zero_I):
        if any(rs.adjacency[v] & comp_set for v in piece):
            touching.update(piece)
    if not touching:
        return ChainWitness(comp, (), None)
    for path in _as_path(rs, touching):
        for beta in sorted(rs.adjacency[path[-1]] & comp_set):
            ok = True
            for k, a in enumerate(path):
                allowed = {beta} | positive_I
                if k > 0:
                    allowed.add(path[k - 1])
                if k + 1 < len(path):
                    allowed.add(path[k + 1])
                if not rs.adjacency[a] <= allowed:
                    ok = False
                    break
            if ok:
                return ChainWitness(comp, path, beta)
    return None


def lemma32_check(rs: RootSystem, d, I: Iterable[int], data: Optional[DataBundle] = None) -> Lemma32Report:
    """Evaluate conditions (i)-(iii), u_I inside u(2), and the dimension identity.

    Condition (iii) is read as: for every connected component C of J = Delta minus I,
    the weight-zero part of I adjacent to C is empty or is a single simple path
    alpha_1..alpha_n with alpha_n adjacent to some beta in C, and each alpha_i has
    no Dynkin neighbours other than its path neighbours, beta, and nodes of I of
    positive weight.
    """
    d = as_diagram(rs, d)
    I = frozenset(I)
    datum = levi_datum(rs, I)
    J = [j for j in rs.simple_roots if j not in I]

    cond_i, levi_label, notes = _component_labels(datum.components, d, data)
    cond_ii = all(d.weights[j - 1] == 2 for j in J)

    witnesses, failed = [], []
    for comp in connected_components(rs, J):
        w = _chain_witness(rs, d, I, comp)
        if w is None:
            failed.append(comp)
        else:
            witnesses.append(w)
    cond_iii = not failed

    uI_in_u2 = all(d.weight(r) >= 2 for r in datum.u_I)
    dim_ambient = orbit_dimension_unchecked(rs, d)
    dim_levi = levi_orbit_dimension(rs, datum.components, d)
    dim_identity = dim_ambient == dim_levi + 2 * len(datum.u_I)
    return Lemma32Report(
        cond_i,
        levi_label,
        cond_ii,
        cond_iii,
        tuple(witnesses),
        tuple(failed),
        uI_in_u2,
        dim_identity,
        dim_ambient,
        dim_levi,
        len(datum.u_I),
        tuple(notes),
    )
