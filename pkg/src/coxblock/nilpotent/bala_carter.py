"""Generate exceptional nilpotent-orbit tables from Bala-Carter data.

Every orbit is induced, in the Bala-Carter sense, from a distinguished orbit of
a Levi subalgebra.  For each subset S of simple roots and each choice of
distinguished diagram on the components of S we solve for the neutral element
h in the coroot span of S, move it into the dominant chamber and read off the
weighted diagram.  Names follow the usual conventions: components joined by
"+", short-root A-type pieces marked with "~", and primes separating the two
classes of isomorphic, non-conjugate Levi subalgebras in E7.

This module is used offline to write the bundled tables and in the tests as
an independent cross-check; runtime lookups read the bundled files.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from ..rootsystem import CartanType, Component, RootSystem, build_root_system, subsystem_components
from .diagrams import orbit_dimension_unchecked, root_weight_sets
from .labels import classical_labels, diagram_from_label, is_distinguished_label

_FAMILY_RANK = {"E": 0, "F": 1, "G": 1, "D": 2, "C": 3, "B": 4, "A": 5}

# Names of distinguished orbits of exceptional types, by decreasing dimension.
_EXCEPTIONAL_DISTINGUISHED = {
    "G2": ["G2", "G2(a1)"],
    "F4": ["F4", "F4(a1)", "F4(a2)", "F4(a3)"],
    "E6": ["E6", "E6(a1)", "E6(a3)"],
    "E7": ["E7", "E7(a1)", "E7(a2)", "E7(a3)", "E7(a4)", "E7(a5)"],
    "E8": ["E8", "E8(a1)", "E8(a2)", "E8(a3)", "E8(a4)", "E8(b4)", "E8(a5)",
           "E8(b5)", "E8(a6)", "E8(b6)", "E8(a7)"],
}


def even_distinguished_candidates(rs: RootSystem) -> list[tuple[int, ...]]:
    """Even diagrams with dim g(0) = dim g(2), by decreasing orbit dimension."""
    out = []
    for bits in product((0, 2), repeat=rs.rank):
        rw = root_weight_sets(rs, bits)
        if rs.rank + 2 * rw.count(0) == rw.count(2):
            out.append(bits)
    return sorted(out, key=lambda d: (-orbit_dimension_unchecked(rs, d), d))


def distinguished_diagrams(t: CartanType) -> list[tuple[str, tuple[int, ...]]]:
    """(name suffix, diagram) for distinguished orbits of a split simple type.

    Suffixes are "" for the regular orbit and "(a_k)" / "(b_k)" otherwise.
    """
    key = str(t)
    rs = build_root_system(t)
    if t.family in "ABCD":
        diagrams = [diagram_from_label(t, l) for l in classical_labels(t) if is_distinguished_label(t, l)]
        diagrams = sorted(set(diagrams), key=lambda d: (-orbit_dimension_unchecked(rs, d), d))
        return [("" if k == 0 else f"(a{k})", d) for k, d in enumerate(diagrams)]
    diagrams = even_distinguished_candidates(rs)
    names = _EXCEPTIONAL_DISTINGUISHED[key]
    if len(diagrams) != len(names):
        raise AssertionError(f"{key}: {len(diagrams)} distinguished candidates, expected {len(names)}")
    return [(name[len(key):], d) for name, d in zip(names, diagrams)]


def _is_short(rs: RootSystem, comp: Component) -> bool:
    return max(rs.lengths[i - 1] for i in comp.nodes) < max(rs.lengths)


def _component_name(rs: RootSystem, comp: Component, suffix: str) -> tuple[tuple, str]:
    t = comp.cartan_type
    tilde = t.family == "A" and _is_short(rs, comp) and rs.cartan_type.family in "FG"
    base = f"{t.family}{'~' if tilde else ''}{t.rank}{suffix}"
    sort_key = (_FAMILY_RANK[t.family], -t.rank, tilde, suffix)
    return sort_key, base


def _join_names(pieces: list[tuple[tuple, str]]) -> str:
    if not pieces:
        return "0"
    counts = Counter(name for _, name in pieces)
    keys = {name: key for key, name in pieces}
    parts = []
    for name in sorted(counts, key=lambda n: keys[n]):
        m = counts[name]
        parts.append(f"{m}{name}" if m > 1 else name)
    return "+".join(parts)


def _dominant(rs: RootSystem, values: list[Fraction]) -> tuple[int, ...]:
    v = list(values)
    n = rs.rank
    while True:
        j = next((k for k in range(n) if v[k] < 0), None)
        if j is None:
            break
        vj = v[j]
        for i in range(n):
            v[i] -= vj * rs.cartan[j][i]
    if any(x.denominator != 1 for x in v):
        raise AssertionError(f"non-integral neutral element {v}")
    return tuple(int(x) for x in v)


def _solve(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(A)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def induced_diagram(rs: RootSystem, nodes: tuple[int, ...], local: tuple[int, ...]) -> tuple[int, ...]:
    """Dominant diagram of the neutral element with alpha_s(h) = local[s] on S = nodes."""
    if not nodes:
        return (0,) * rs.rank
    idx = [i - 1 for i in nodes]
    # h = sum_t x_t alpha_t^vee, alpha_s(h) = sum_t x_t cartan[t][s]
    A = [[Fraction(rs.cartan[t][s]) for t in idx] for s in idx]
    x = _solve(A, [Fraction(v) for v in local])
    values = [sum((x[k] * rs.cartan[t][i] for k, t in enumerate(idx)), Fraction(0)) for i in range(rs.rank)]
    return _dominant(rs, values)


@dataclass(frozen=True)
class GeneratedOrbit:
    name: str
    weights: tuple[int, ...]
    dimension: int


def generate_orbit_table(t: CartanType) -> list[GeneratedOrbit]:
    """All nilpotent orbits of a split simple type, sorted by dimension then name."""
    rs = build_root_system(t)
    found: dict[tuple[int, ...], str] = {}
    for k in range(rs.rank + 1):
        for S in combinations(rs.simple_roots, k):
            comps = subsystem_components(rs, S)
            choices = [distinguished_diagrams(c.cartan_type) for c in comps]
            for pick in product(*choices):
                nodes: list[int] = []
                local: list[int] = []
                pieces = []
                for comp, (suffix, diag) in zip(comps, pick):
                    nodes.extend(comp.nodes)
                    local.extend(diag)
                    pieces.append(_component_name(rs, comp, suffix))
                d = induced_diagram(rs, tuple(nodes), tuple(local))
                name = _join_names(pieces)
                prev = found.get(d)
                if prev is not None and prev != name:
                    raise AssertionError(f"{t}: diagram {d} named both {prev} and {name}")
                found[d] = name
    by_name: dict[str, list[tuple[int, ...]]] = {}
    for d, name in found.items():
        by_name.setdefault(name, []).append(d)
    out = []
    for name, ds in by_name.items():
        if len(ds) == 1:
            out.append(GeneratedOrbit(name, ds[0], orbit_dimension_unchecked(rs, ds[0])))
            continue
        if len(ds) != 2:
            raise AssertionError(f"{t}: {len(ds)} orbits share the name {name}")
        ds = sorted(ds, key=lambda d: orbit_dimension_unchecked(rs, d))
        shown = f"({name})"
        for d, mark in zip(ds, ("''", "'")):
            out.append(GeneratedOrbit(shown + mark, d, orbit_dimension_unchecked(rs, d)))
    return sorted(out, key=lambda o: (o.dimension, o.name))
