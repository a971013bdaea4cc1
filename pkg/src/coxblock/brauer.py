"""Brauer trees of principal blocks in the Coxeter case.

Trees are assembled from Harish-Chandra series data following the HLM shape:
each series is a line chi_m - chi_{m+1} - ... - chi_M, and the m-end of every
line is joined to the exceptional node.  Planar embeddings are supplied as
data and only validated here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

EXCEPTIONAL = "exc"
EXC_SYMBOL = "χ_exc"
SCHEMA_VERSION = 1


class TreeError(ValueError):
    """Malformed series data or an invalid tree/embedding."""


class BindingError(ValueError):
    """A root-of-unity spec does not resolve to an element of the stated order."""


@dataclass(frozen=True)
class RootOfUnitySpec:
    """The unique ``order``-th root of unity congruent to q^exponent modulo ell."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")

    def __str__(self) -> str:
        return f"ζ{self.order}≡q^{self.exponent}"


@dataclass(frozen=True)
class CharacterName:
    name: str
    series: str
    index: int

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class HCSeriesDatum:
    name: str
    zeta: RootOfUnitySpec
    m: int
    characters: tuple[CharacterName, ...]

    def __post_init__(self):
        if not self.characters:
            raise TreeError(f"series {self.name} has no characters")
        idx = [c.index for c in self.characters]
        if idx != list(range(self.m, self.m + len(idx))):
            raise TreeError(f"series {self.name}: indices {idx} are not m, m+1, ..., M")

    @property
    def M(self) -> int:
        return self.m + len(self.characters) - 1

    @classmethod
    def from_names(cls, name: str, zeta: RootOfUnitySpec, m: int, names: Sequence[str]) -> "HCSeriesDatum":
        chars = tuple(CharacterName(n, name, m + k) for k, n in enumerate(names))
        return cls(name, zeta, m, chars)


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str]

    def other(self, node: str) -> str:
        a, b = self.ends
        return b if node == a else a


@dataclass(frozen=True)
class BrauerTree:
    """Nodes are character names plus the exceptional node ``exc``.

    ``planar`` maps a node to the cyclic order of its incident edge ids; it is
    empty until an embedding is attached.
    """

    characters: tuple[CharacterName, ...]
    m_exc: int
    edges: tuple[Edge, ...]
    planar: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    label: str = ""

    def __post_init__(self):
        validate_tree(self)

    @property
    def nodes(self) -> tuple[str, ...]:
        return (EXCEPTIONAL,) + tuple(c.name for c in self.characters)

    def incident(self, node: str) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges if node in e.ends)

    def degree(self, node: str) -> int:
        return len(self.incident(node))

    def neighbours(self, node: str) -> tuple[str, ...]:
        return tuple(e.other(node) for e in self.edges if node in e.ends)

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def edge_between(self, u: str, v: str) -> Edge:
        for e in self.edges:
            if set(e.ends) == {u, v}:
                return e
        raise KeyError(f"no edge between {u} and {v}")

    def character(self, name: str) -> CharacterName:
        for c in self.characters:
            if c.name == name:
                return c
        raise KeyError(name)


def validate_tree(tree: BrauerTree) -> None:
    names = tree.nodes
    if len(set(names)) != len(names):
        raise TreeError("duplicate node names")
    if tree.m_exc < 1:
        raise TreeError("exceptional multiplicity must be at least 1")
    node_set = set(names)
    ids = [e.id for e in tree.edges]
    if len(set(ids)) != len(ids):
        raise TreeError("duplicate edge ids")
    for e in tree.edges:
        if not set(e.ends) <= node_set or e.ends[0] == e.ends[1]:
            raise TreeError(f"edge {e.id} has invalid ends {e.ends}")
    if len(tree.edges) != len(names) - 1:
        raise TreeError(f"{len(tree.edges)} edges for {len(names)} nodes: not a tree")
    reached = {EXCEPTIONAL}
    stack = [EXCEPTIONAL]
    while stack:
        v = stack.pop()
        for e in tree.edges:
            if v in e.ends:
                w = e.other(v)
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
    if reached != node_set:
        raise TreeError("graph is not connected")
    for node, order in tree.planar.items():
        if node not in node_set:
            raise TreeError(f"planar order given for unknown node {node!r}")
        if sorted(order) != sorted(tree.incident(node)):
            raise TreeError(f"planar order at {node} is not a permutation of its incident edges")


def build_hlm_tree(series: Sequence[HCSeriesDatum], m_exc: int, label: str = "") -> BrauerTree:
    """One line per series, its chi_m end attached to the exceptional node."""
    if not series:
        raise TreeError("series list is empty")
    indices = [c.index for s in series for c in s.characters]
    dup = sorted({i for i in indices if indices.count(i) > 1})
    if dup:
        raise TreeError(f"character indices {dup} occur in more than one series")
    names = [c.name for s in series for c in s.characters]
    if len(set(names)) != len(names) or EXCEPTIONAL in names:
        raise TreeError("character names must be distinct and differ from 'exc'")
    ordered = sorted(series, key=lambda s: s.m)
    chars: list[CharacterName] = []
    edges: list[Edge] = []
    for s in ordered:
        chars.extend(s.characters)
        edges.append(Edge(f"e{len(edges)}", (EXCEPTIONAL, s.characters[0].name)))
        for a, b in zip(s.characters, s.characters[1:]):
            edges.append(Edge(f"e{len(edges)}", (a.name, b.name)))
    chars.sort(key=lambda c: c.index)
    return BrauerTree(tuple(chars), m_exc, tuple(edges), {}, label)


def attach_planar_order(tree: BrauerTree, orders: Mapping[str, Sequence[str]]) -> BrauerTree:
    """Attach cyclic edge orders.

    Nodes of degree at most two have a unique cyclic order and may be omitted;
    every node of higher degree must be given.
    """
    planar: dict[str, tuple[str, ...]] = {}
    known = set(tree.nodes)
    for node, order in orders.items():
        if node not in known:
            raise TreeError(f"planar order given for unknown node {node!r}")
        inc = tree.incident(node)
        extra = [e for e in order if e not in inc]
        if extra:
            raise TreeError(f"planar order at {node} mentions non-incident edges {extra}")
        if sorted(order) != sorted(inc):
            raise TreeError(f"planar order at {node} must list each incident edge exactly once")
        planar[node] = tuple(order)
    for node in tree.nodes:
        if node in planar:
            continue
        inc = tree.incident(node)
        if len(inc) > 2:
            raise TreeError(f"missing planar order for node {node!r} of degree {len(inc)}")
        planar[node] = inc
    return BrauerTree(tree.characters, tree.m_exc, tree.edges, planar, tree.label)


def orders_from_neighbours(tree: BrauerTree, neighbours: Mapping[str, Sequence[str]]) -> dict[str, list[str]]:
    """Translate cyclic orders of neighbour names into cyclic orders of edge ids."""
    out = {}
    for node, names in neighbours.items():
        try:
            out[node] = [tree.edge_between(node, other).id for other in names]
        except KeyError as exc:
            raise TreeError(f"planar data at {node}: {exc.args[0]}") from None
    return out


def cyclic_equal(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = list(b) + list(b)
    return any(doubled[k : k + len(a)] == list(a) for k in range(len(b)))


@dataclass(frozen=True)
class ProjectiveCharacter:
    """[P_e] = chi_u + chi_v for the edge e = {u, v}; the exceptional node stays one symbol."""

    edge: str
    constituents: tuple[str, str]
    m_exc: Optional[int] = None

    def __str__(self) -> str:
        return " + ".join(self.constituents)


def projective_characters(tree: BrauerTree) -> dict[str, ProjectiveCharacter]:
    out = {}
    for e in tree.edges:
        parts = tuple(EXC_SYMBOL if v == EXCEPTIONAL else v for v in e.ends)
        exc = tree.m_exc if EXCEPTIONAL in e.ends else None
        out[e.id] = ProjectiveCharacter(e.id, parts, exc)
    return out


def degree_layout(series: HCSeriesDatum, r: int) -> dict[str, int]:
    """chi_{m+i} sits in cohomological degree r + i."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return {c.name: r + k for k, c in enumerate(series.characters)}


# --- serialization ------------------------------------------------------------


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edge_walk(tree: BrauerTree) -> list[str]:
    """Edges in depth-first order from the exceptional node, following the planar orders."""
    seen: list[str] = []

    def visit(node: str, via: Optional[str]):
        order = list(tree.planar.get(node) or tree.incident(node))
        if via is not None and via in order:
            k = order.index(via)
            order = order[k + 1 :] + order[:k]
        for eid in order:
            if eid in seen:
                continue
            seen.append(eid)
            visit(tree.edge(eid).other(node), eid)

    visit(EXCEPTIONAL, None)
    return seen


def to_dot(tree: BrauerTree) -> str:
    name = tree.label or "brauer_tree"
    lines = [f"graph {_dot_id(name)} {{", "  ordering=out;", "  node [shape=circle];"]
    lines.append(
        f"  {_dot_id(EXCEPTIONAL)} [label={_dot_id(EXC_SYMBOL)}, shape=doublecircle, "
        f"style=filled, fillcolor=black, fontcolor=white, multiplicity={tree.m_exc}];"
    )
    for c in tree.characters:
        lines.append(f"  {_dot_id(c.name)} [label={_dot_id(c.name)}, index={c.index}, series={_dot_id(c.series)}];")
    for eid in _edge_walk(tree):
        e = tree.edge(eid)
        pos = []
        for v in e.ends:
            order = tree.planar.get(v) or tree.incident(v)
            pos.append(f"{v}:{order.index(eid)}")
        lines.append(
            f"  {_dot_id(e.ends[0])} -- {_dot_id(e.ends[1])} [id={_dot_id(eid)}, cyclic_position={_dot_id(';'.join(pos))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(tree: BrauerTree) -> dict:
    nodes = [{"name": EXCEPTIONAL, "exceptional": True, "multiplicity": tree.m_exc}]
    nodes += [
        {"name": c.name, "exceptional": False, "multiplicity": 1, "series": c.series, "index": c.index}
        for c in tree.characters
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "label": tree.label,
        "nodes": nodes,
        "edges": [{"id": e.id, "ends": list(e.ends)} for e in tree.edges],
        "planar": {k: list(v) for k, v in tree.planar.items()},
    }


def serialize_tree(tree: BrauerTree, fmt: str = "dot") -> str:
    fmt = fmt.lower()
    if fmt == "dot":
        return to_dot(tree)
    if fmt == "json":
        return json.dumps(to_json_dict(tree), ensure_ascii=False, indent=2) + "\n"
    raise ValueError(f"unknown tree format {fmt!r} (expected dot or json)")


def parse_tree_json(text: Union[str, dict]) -> BrauerTree:
    payload = json.loads(text) if isinstance(text, str) else text
    if payload.get("schema_version") != SCHEMA_VERSION:
        raise TreeError(f"unsupported schema_version {payload.get('schema_version')!r}")
    exc = [n for n in payload["nodes"] if n["exceptional"]]
    if len(exc) != 1 or exc[0]["name"] != EXCEPTIONAL:
        raise TreeError("exactly one exceptional node named 'exc' is required")
    chars = tuple(
        CharacterName(n["name"], n.get("series", ""), int(n["index"])) for n in payload["nodes"] if not n["exceptional"]
    )
    edges = tuple(Edge(e["id"], tuple(e["ends"])) for e in payload["edges"])
    planar = {k: tuple(v) for k, v in payload.get("planar", {}).items()}
    return BrauerTree(chars, int(exc[0]["multiplicity"]), edges, planar, payload.get("label", ""))


# --- roots of unity -------------------------------------------------------------


@dataclass(frozen=True)
class ResidueRing:
    """F_ell, or F_ell[sqrt d] for the Suzuki and Ree types; elements are (a, b) = a + b sqrt d."""

    ell: int
    d: int = 1

    def mul(self, x, y):
        if self.d == 1:
            return x * y % self.ell
        a, b = x
        c, e = y
        return ((a * c + self.d * b * e) % self.ell, (a * e + b * c) % self.ell)

    def one(self):
        return 1 if self.d == 1 else (1, 0)

    def power(self, x, k: int):
        result = self.one()
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def has_exact_order(ring: ResidueRing, x, order: int) -> bool:
    if ring.power(x, order) != ring.one():
        return False
    return all(ring.power(x, order // p) != ring.one() for p in _prime_factors(order))


def q_residue(q: int, ell: int, radicand: int = 1):
    """Image of q in the residue ring.

    For radicand d > 1 the argument is the prime power Q = d^(2m+1) and q is
    d^m sqrt(d), represented as (0, d^m mod ell).
    """
    if q % ell == 0:
        raise BindingError(f"ell = {ell} divides q")
    if radicand == 1:
        return q % ell
    k, Q = 0, q
    while Q % radicand == 0:
        Q //= radicand
        k += 1
    if Q != 1 or k % 2 == 0:
        raise BindingError(f"Q = {q} is not an odd power of {radicand}")
    return (0, pow(radicand, (k - 1) // 2, ell))


def bind_roots_of_unity(
    specs: Iterable[RootOfUnitySpec], q: int, ell: int, radicand: int = 1
) -> dict[RootOfUnitySpec, object]:
    """Resolve each spec to q^e in the residue ring and check its multiplicative order."""
    ring = ResidueRing(ell, radicand)
    qbar = q_residue(q, ell, radicand)
    out = {}
    for spec in specs:
        x = ring.power(qbar, spec.exponent)
        if not has_exact_order(ring, x, spec.order):
            raise BindingError(f"q^{spec.exponent} mod {ell} does not have order {spec.order}")
        out[spec] = x
    return out


# --- bundled fixtures -----------------------------------------------------------


def series_from_data(cartan_type: str, data=None) -> list[HCSeriesDatum]:
    from .data import default_data

    bundle = data or default_data()
    if cartan_type not in bundle.series:
        raise KeyError(f"no series data for {cartan_type}; available: {', '.join(sorted(bundle.series))}")
    return [
        HCSeriesDatum.from_names(r.series, RootOfUnitySpec(r.zeta_order, r.zeta_exponent), r.m, r.characters)
        for r in bundle.series[cartan_type]
    ]


def fixture_tree(cartan_type: str, data=None, planar: bool = True) -> BrauerTree:
    """HLM tree of a bundled fixture, with its transcribed planar embedding."""
    from .data import default_data

    bundle = data or default_data()
    if cartan_type not in bundle.fixtures:
        raise KeyError(f"no Coxeter-case fixture for {cartan_type}")
    tree = build_hlm_tree(series_from_data(cartan_type, bundle), bundle.fixtures[cartan_type].m_exc, cartan_type)
    if not planar:
        return tree
    neighbours = {r.node: r.neighbours for r in bundle.planar.get(cartan_type, [])}
    return attach_planar_order(tree, orders_from_neighbours(tree, neighbours))
