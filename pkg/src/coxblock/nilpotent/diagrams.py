"""Weighted Dynkin diagrams and the root filtration they induce."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from ..rootsystem import Root, RootSystem, root_phi_map
from .labels import DiagramError


@dataclass(frozen=True, eq=False)
class WeightedDynkinDiagram:
    """Weights in {0, 1, 2} on the simple roots of ``host`` (Bourbaki order)."""

    host: RootSystem
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) != self.host.rank:
            raise DiagramError(f"expected {self.host.rank} weights for {self.host.cartan_type}, got {len(w)}")
        if any(x not in (0, 1, 2) for x in w):
            raise DiagramError(f"weights must lie in {{0,1,2}}, got {w}")
        object.__setattr__(self, "weights", w)

    def __eq__(self, other):
        if not isinstance(other, WeightedDynkinDiagram):
            return NotImplemented
        return self.host.cartan_type == other.host.cartan_type and self.weights == other.weights

    def __hash__(self):
        return hash((self.host.cartan_type, self.weights))

    def weight(self, root: Sequence[int]) -> int:
        """Additive extension d(alpha) = sum of coefficient times simple weight."""
        return sum(c * w for c, w in zip(root, self.weights))

    def restrict(self, nodes: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.weights[i - 1] for i in nodes)

    def is_even(self) -> bool:
        return all(w != 1 for w in self.weights)

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.weights)


def as_diagram(rs: RootSystem, d) -> WeightedDynkinDiagram:
    if isinstance(d, WeightedDynkinDiagram):
        return d
    return WeightedDynkinDiagram(rs, tuple(d))


@dataclass(frozen=True)
class RootWeights:
    """Positive roots grouped by weight; ``equal[w]`` is Phi+_{=w}."""

    equal: Mapping[int, tuple[Root, ...]]

    def at_least(self, w: int) -> tuple[Root, ...]:
        return tuple(r for k in sorted(self.equal) if k >= w for r in self.equal[k])

    def count(self, w: int) -> int:
        return len(self.equal.get(w, ()))

    def u_dimension(self, i: int) -> int:
        """dim u(i) = |Phi+_{>=i}|."""
        return len(self.at_least(i))


def root_weight_sets(rs: RootSystem, d) -> RootWeights:
    d = as_diagram(rs, d)
    groups: dict[int, list[Root]] = {}
    for r in rs.positive_roots:
        groups.setdefault(d.weight(r), []).append(r)
    return RootWeights({k: tuple(v) for k, v in sorted(groups.items())})


def orbit_dimension_unchecked(rs: RootSystem, d) -> int:
    """dim g - dim g(0) - dim g(1) with g(1) the span of weight-one root spaces."""
    rw = root_weight_sets(rs, d)
    dim_g = len(rs.roots) + rs.rank
    dim_g0 = rs.rank + 2 * rw.count(0)
    return dim_g - dim_g0 - rw.count(1)


def orbit_dimension(rs: RootSystem, d, validate: bool = True) -> int:
    """Dimension of the nilpotent orbit with weighted diagram d.

    With ``validate`` the diagram must belong to some orbit of the type
    (classical: label round trip; exceptional: bundled table membership).
    """
    d = as_diagram(rs, d)
    if validate:
        from .tables import diagram_label

        diagram_label(rs.cartan_type.untwisted, d.weights)
    return orbit_dimension_unchecked(rs, d)


@dataclass(frozen=True)
class ParityReport:
    dim_g1: int
    even: bool

    def to_json(self) -> dict:
        return {"dim_g1": self.dim_g1, "even": self.even}


def kawanaka_parity(rs: RootSystem, d) -> ParityReport:
    n1 = root_weight_sets(rs, d).count(1)
    return ParityReport(n1, n1 % 2 == 0)


def character_support(rs: RootSystem, d, support: Iterable[Sequence[int]]) -> dict[Root, bool]:
    """Per phi-orbit of weight-2 positive roots: does the orbit meet ``support``?

    Keys are the smallest root of each orbit (in the root-system ordering).
    """
    d = as_diagram(rs, d)
    weight2 = set(root_weight_sets(rs, d).equal.get(2, ()))
    supp = {tuple(r) for r in support}
    bad = supp - weight2
    if bad:
        raise ValueError(f"support contains roots of weight other than 2: {sorted(bad)}")
    phi = root_phi_map(rs)
    order = rs.root_index
    flags: dict[Root, bool] = {}
    seen: set[Root] = set()
    for r in sorted(weight2, key=order.__getitem__):
        if r in seen:
            continue
        orbit = [r]
        x = phi[r]
        while x != r:
            orbit.append(x)
            x = phi[x]
        seen.update(orbit)
        flags[r] = any(o in supp for o in orbit)
    return flags
