"""Irreducible root systems, Frobenius diagram automorphisms and Coxeter elements.

Simple roots use Bourbaki numbering and are addressed by their 1-based label
everywhere in the public API (words, subsets, orbits).  Roots are integer
coordinate vectors over the simple roots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .polynomial import IntPolynomial, QuadraticNumber, charpoly, cyclotomic

Root = tuple[int, ...]


class CartanTypeError(ValueError):
    """Invalid (family, rank, twist) combination."""


# Frobenius exponent delta; nothing in the literature used here tabulates it.
_DELTA = {1: 1, 2: 2, 3: 3}
_VERY_TWISTED = {("B", 2), ("G", 2), ("F", 4)}
_RADICAND = {"B": 2, "F": 2, "G": 3}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int
    twist: int = 1

    def __post_init__(self):
        f, n, t = self.family, self.rank, self.twist
        if f not in "ABCDEFG" or len(f) != 1:
            raise CartanTypeError(f"unknown family {f!r}")
        if not isinstance(n, int) or n < 1:
            raise CartanTypeError(f"rank must be a positive integer, got {n!r}")
        rank_ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not rank_ok:
            raise CartanTypeError(f"{f}{n} is not an irreducible Cartan type")
        if t == 1:
            return
        if t == 2:
            ok = (f == "A" and n >= 2) or (f == "D") or (f == "E" and n == 6) or (f, n) in _VERY_TWISTED
        elif t == 3:
            ok = f == "D" and n == 4
        else:
            ok = False
        if not ok:
            raise CartanTypeError(f"{f}{n} has no Frobenius twist of order {t}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse labels like ``A3``, ``2A5``, ``3D4``, ``2G2``, ``^2E_6``."""
        s = text.strip().replace("^", "").replace("_", "").replace("{", "").replace("}", "")
        s = s.replace("²", "2").replace("³", "3")
        m = re.fullmatch(r"([23]?)([A-Ga-g])(\d+)", s)
        if not m:
            raise CartanTypeError(f"cannot parse Cartan type {text!r}")
        twist = int(m.group(1)) if m.group(1) else 1
        return cls(m.group(2).upper(), int(m.group(3)), twist)

    @property
    def very_twisted(self) -> bool:
        """Suzuki and Ree types 2B2, 2G2, 2F4 (Frobenius swaps root lengths)."""
        return self.twist == 2 and (self.family, self.rank) in _VERY_TWISTED

    @property
    def delta(self) -> int:
        return _DELTA[self.twist]

    @property
    def radicand(self) -> int:
        return _RADICAND[self.family] if self.very_twisted else 1

    @property
    def untwisted(self) -> "CartanType":
        return CartanType(self.family, self.rank)

    def __str__(self) -> str:
        prefix = "" if self.twist == 1 else str(self.twist)
        return f"{prefix}{self.family}{self.rank}"


def _dynkin_data(family: str, n: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges (0-based) and squared lengths of simple roots, Bourbaki numbering."""
    if family == "A":
        return [(i, i + 1) for i in range(n - 1)], [2] * n
    if family == "B":
        return [(i, i + 1) for i in range(n - 1)], [2] * (n - 1) + [1]
    if family == "C":
        return [(i, i + 1) for i in range(n - 1)], [1] * (n - 1) + [2]
    if family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)], [2] * n
    if family == "E":
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return edges, [2] * n
    if family == "F":
        return [(0, 1), (1, 2), (2, 3)], [2, 2, 1, 1]
    if family == "G":
        return [(0, 1)], [1, 3]
    raise CartanTypeError(family)


def _phi_permutation(t: CartanType) -> tuple[int, ...]:
    n = t.rank
    ident = list(range(n))
    if t.twist == 1:
        return tuple(ident)
    f = t.family
    if f == "A":
        return tuple(n - 1 - i for i in range(n))
    if f == "D" and t.twist == 2:
        p = ident[:]
        p[n - 2], p[n - 1] = n - 1, n - 2
        return tuple(p)
    if f == "D" and t.twist == 3:
        # 1 -> 3 -> 4 -> 1 on the outer nodes
        return (2, 1, 3, 0)
    if f == "E":
        return (5, 1, 4, 3, 2, 0)
    if f in ("B", "G"):
        return (1, 0)
    if f == "F":
        return (3, 2, 1, 0)
    raise CartanTypeError(str(t))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Exact root data for one irreducible Cartan type with its diagram automorphism.

    ``cartan[i][j]`` is <alpha_i^vee, alpha_j>, so s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i.
    ``phi`` is the induced permutation of simple roots (0-based indices).
    """

    cartan_type: CartanType
    cartan: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    roots: tuple[Root, ...]
    phi: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        return self.cartan

    @property
    def simple_roots(self) -> tuple[int, ...]:
        """Bourbaki labels 1..rank."""
        return tuple(range(1, self.rank + 1))

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if is_positive(r))

    @cached_property
    def root_index(self) -> dict[Root, int]:
        return {r: i for i, r in enumerate(self.roots)}

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        """Dynkin-graph neighbours, 1-based labels."""
        n = self.rank
        return {
            i + 1: frozenset(j + 1 for j in range(n) if j != i and self.cartan[i][j] != 0)
            for i in range(n)
        }

    def is_positive(self, root: Sequence[int]) -> bool:
        return is_positive(root)

    def reflect(self, i: int, v: Sequence[int]) -> Root:
        """Simple reflection s_i (1-based) applied to a coordinate vector."""
        k = i - 1
        pairing = sum(self.cartan[k][j] * v[j] for j in range(self.rank))
        out = list(v)
        out[k] -= pairing
        return tuple(out)

    def phi_label(self, i: int) -> int:
        return self.phi[i - 1] + 1

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type}, {len(self.roots)} roots)"


def is_positive(root: Sequence[int]) -> bool:
    return all(c >= 0 for c in root) and any(c > 0 for c in root)


def _cartan_from_dynkin(n: int, edges, lengths) -> tuple[tuple[int, ...], ...]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        long_len = max(lengths[i], lengths[j])
        C[i][j] = -(long_len // lengths[i])
        C[j][i] = -(long_len // lengths[j])
    return tuple(tuple(r) for r in C)


def _close_roots(n: int, cartan) -> tuple[Root, ...]:
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                pairing = sum(cartan[i][j] * v[j] for j in range(n))
                if pairing == 0:
                    continue
                w = list(v)
                w[i] -= pairing
                w = tuple(w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    pos = sorted((r for r in seen if is_positive(r)), key=lambda r: (sum(r), r))
    neg = [tuple(-c for c in r) for r in pos]
    return tuple(pos) + tuple(neg)


@lru_cache(maxsize=None)
def build_root_system(t: CartanType) -> RootSystem:
    """Generate the full root system of ``t`` by closure under simple reflections."""
    if isinstance(t, str):
        t = CartanType.parse(t)
    n = t.rank
    edges, lengths = _dynkin_data(t.family, n)
    cartan = _cartan_from_dynkin(n, edges, lengths)
    roots = _close_roots(n, cartan)
    return RootSystem(t, cartan, tuple(lengths), roots, _phi_permutation(t))


def phi_orbits(rs: RootSystem) -> list[tuple[int, ...]]:
    """Orbits of phi on the simple roots (1-based), each sorted, ordered by minimum."""
    seen: set[int] = set()
    orbits = []
    for i in range(rs.rank):
        if i in seen:
            continue
        orbit = []
        j = i
        while j not in orbit:
            orbit.append(j)
            j = rs.phi[j]
        seen.update(orbit)
        orbits.append(tuple(sorted(k + 1 for k in orbit)))
    return sorted(orbits)


def twisted_rank(rs: RootSystem) -> int:
    return len(phi_orbits(rs))


def phi_stable_subsets(rs: RootSystem, proper: bool = False) -> list[frozenset[int]]:
    """All unions of phi-orbits, by size then lexicographically."""
    orbits = phi_orbits(rs)
    out = []
    for k in range(len(orbits) + 1):
        for combo in combinations(orbits, k):
            out.append(frozenset(x for o in combo for x in o))
    if proper:
        full = frozenset(rs.simple_roots)
        out = [s for s in out if s != full]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def is_phi_stable(rs: RootSystem, subset: Iterable[int]) -> bool:
    s = set(subset)
    return all(rs.phi_label(i) in s for i in s)


# --- Weyl group elements ---------------------------------------------------


def reflection_matrix(rs: RootSystem, i: int) -> np.ndarray:
    n = rs.rank
    M = np.eye(n, dtype=np.int64)
    M[i - 1, :] -= np.array(rs.cartan[i - 1], dtype=np.int64)
    return M


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element given by a word in simple reflections (1-based).

    ``matrix`` acts on column vectors of root coordinates and equals the
    product of the reflection matrices of ``word`` from left to right.
    """

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def act(self, v: Sequence[int]) -> Root:
        return tuple(int(x) for x in self.array @ np.array(v, dtype=np.int64))

    def to_json(self) -> dict:
        return {"word": list(self.word), "matrix": [list(r) for r in self.matrix]}


def weyl_element(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    M = np.eye(rs.rank, dtype=np.int64)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise ValueError(f"simple reflection index {i} out of range for {rs.cartan_type}")
        M = M @ reflection_matrix(rs, i)
    return WeylElement(tuple(word), tuple(tuple(int(x) for x in row) for row in M))


def identity_element(rs: RootSystem) -> WeylElement:
    return weyl_element(rs, ())


def permutes_roots(rs: RootSystem, w: WeylElement) -> bool:
    images = {w.act(r) for r in rs.roots}
    return images == set(rs.roots)


def coxeter_element(rs: RootSystem, representatives: Optional[Sequence[int]] = None) -> WeylElement:
    """One simple reflection per phi-orbit, in ascending order of representative.

    ``representatives`` overrides the default choice (orbit minima); the word is
    taken in the order given.
    """
    orbits = phi_orbits(rs)
    if representatives is None:
        word = tuple(o[0] for o in orbits)
    else:
        reps = tuple(representatives)
        hit = sorted(tuple(o) for o in orbits if any(r in o for r in reps))
        if len(reps) != len(orbits) or len(hit) != len(orbits):
            raise ValueError("representatives must meet every phi-orbit exactly once")
        word = reps
    return weyl_element(rs, word)


def subcoxeter_element(rs: RootSystem, c: WeylElement, subset: Iterable[int]) -> WeylElement:
    """Drop from c the reflections indexed outside the phi-stable subset."""
    I = frozenset(subset)
    if not I <= set(rs.simple_roots):
        raise ValueError(f"subset {sorted(I)} is not a set of simple roots of {rs.cartan_type}")
    if not is_phi_stable(rs, I):
        raise ValueError(f"subset {sorted(I)} is not phi-stable")
    return weyl_element(rs, tuple(i for i in c.word if i in I))


def char_poly(w: WeylElement) -> IntPolynomial:
    """det(xI - M) for the lattice action of w; monic of degree rank."""
    return IntPolynomial(tuple(charpoly(w.matrix)))


# --- Frobenius action and Coxeter numbers ---------------------------------


def phi_matrix(rs: RootSystem) -> np.ndarray:
    """Permutation matrix sending e_i to e_phi(i) (ordinary twists)."""
    n = rs.rank
    P = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        P[rs.phi[i], i] = 1
    return P


def frobenius_matrix(rs: RootSystem) -> list[list]:
    """Isometry sigma with F = q*sigma on the root lattice tensor R.

    For ordinary twists this is the permutation matrix of phi.  For the Suzuki
    and Ree types sigma sends alpha_i to sqrt(|alpha_i|^2/|alpha_phi(i)|^2)
    alpha_phi(i), with entries in Q(sqrt d).
    """
    n = rs.rank
    t = rs.cartan_type
    if not t.very_twisted:
        return [[int(x) for x in row] for row in phi_matrix(rs)]
    d = t.radicand
    zero = QuadraticNumber.of(0, 0, d)
    S = [[zero] * n for _ in range(n)]
    for i in range(n):
        j = rs.phi[i]
        ratio = Fraction(rs.lengths[i], rs.lengths[j])
        if ratio == 1:
            scale = QuadraticNumber.of(1, 0, d)
        elif ratio == d:
            scale = QuadraticNumber.of(0, 1, d)
        elif ratio == Fraction(1, d):
            scale = QuadraticNumber.of(0, Fraction(1, d), d)
        else:
            raise AssertionError("unexpected length ratio")
        S[j][i] = scale
    return S


def _matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), A[i][0] * 0) for j in range(p)] for i in range(n)]


def twisted_action(rs: RootSystem, w: WeylElement) -> list[list]:
    """Matrix of sigma o w on the root lattice (entries int or QuadraticNumber)."""
    sigma = frobenius_matrix(rs)
    return _matmul(sigma, [list(r) for r in w.matrix])


def matrix_order(M, limit: int = 1000) -> int:
    n = len(M)
    one = M[0][0] * 0 + 1
    zero = one * 0
    ident = [[one if i == j else zero for j in range(n)] for i in range(n)]
    P = [row[:] for row in M]
    for k in range(1, limit + 1):
        if all(P[i][j] == ident[i][j] for i in range(n) for j in range(n)):
            return k
        P = _matmul(P, M)
    raise ValueError("matrix has no finite order below the search limit")


@dataclass(frozen=True)
class CoxeterNumber:
    """h is None for the Suzuki/Ree types: use torus_order there."""

    h: Optional[int]
    delta: int
    very_twisted: bool = False

    def to_json(self) -> dict:
        return {"h": self.h, "delta": self.delta, "very_twisted": self.very_twisted}


def coxeter_number(t: CartanType) -> CoxeterNumber:
    if isinstance(t, str):
        t = CartanType.parse(t)
    if t.very_twisted:
        return CoxeterNumber(None, t.delta, True)
    rs = build_root_system(t)
    c = coxeter_element(rs)
    return CoxeterNumber(matrix_order(twisted_action(rs, c)), t.delta)


def twisted_coxeter_order(rs: RootSystem) -> int:
    """Order of sigma o c; equals h for every type, including Suzuki/Ree."""
    return matrix_order(twisted_action(rs, coxeter_element(rs)))


def twisted_char_poly(rs: RootSystem, w: WeylElement) -> IntPolynomial:
    """det(xI - sigma w); equals char_poly(w) for split types."""
    t = rs.cartan_type
    if t.very_twisted:
        return IntPolynomial(tuple(charpoly(twisted_action(rs, w), one=QuadraticNumber.of(1, 0, t.radicand))), t.radicand)
    return IntPolynomial(tuple(charpoly(twisted_action(rs, w))))


def torus_order(rs: RootSystem, w: WeylElement) -> IntPolynomial:
    """|T^{wF}| as a polynomial in q: |det(q * sigma w - 1)|.

    Uses det(qA - I) = (-1)^n q^n p_A(1/q) with p_A the characteristic
    polynomial; the sign is normalised to a positive leading coefficient.
    """
    t = rs.cartan_type
    A = twisted_action(rs, w)
    n = rs.rank
    if t.very_twisted:
        one = QuadraticNumber.of(1, 0, t.radicand)
        p = charpoly(A, one=one)
    else:
        p = charpoly(A)
    # coefficient of q^k in det(qA - I) is (-1)^n * p[n-k]
    coeffs = [p[n - k] * (-1) ** n for k in range(n + 1)]
    lead = coeffs[-1]
    lead_sign = (lead.a if isinstance(lead, QuadraticNumber) else lead) < 0
    if lead_sign:
        coeffs = [-c for c in coeffs]
    return IntPolynomial(tuple(coeffs), t.radicand)


def phi_h(t: CartanType) -> IntPolynomial:
    """The cyclotomic polynomial of the Coxeter number (ordinary types only)."""
    h = coxeter_number(t).h
    if h is None:
        raise ValueError(f"{t}: no integral Phi_h; use torus_order")
    return cyclotomic(h)


def coxeter_torus_polynomial(t: CartanType) -> IntPolynomial:
    rs = build_root_system(t)
    return torus_order(rs, coxeter_element(rs))


# --- Sub-diagrams and their Cartan types -----------------------------------


def cartan_isomorphisms(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]):
    """Yield every bijection p (tuple, index of A -> index of B) with B[p i][p j] == A[i][j]."""
    n = len(A)
    if len(B) != n:
        return
    assigned: list[int] = []
    used = [False] * n

    def extend():
        k = len(assigned)
        if k == n:
            yield tuple(assigned)
            return
        for cand in range(n):
            if used[cand]:
                continue
            if all(B[cand][assigned[j]] == A[k][j] and B[assigned[j]][cand] == A[j][k] for j in range(k)):
                used[cand] = True
                assigned.append(cand)
                yield from extend()
                assigned.pop()
                used[cand] = False

    yield from extend()


def connected_components(rs: RootSystem, subset: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of the Dynkin sub-diagram on ``subset`` (sorted, by minimum)."""
    remaining = set(subset)
    comps = []
    while remaining:
        start = min(remaining)
        stack, comp = [start], {start}
        while stack:
            v = stack.pop()
            for w in rs.adjacency[v]:
                if w in remaining and w not in comp:
                    comp.add(w)
                    stack.append(w)
        remaining -= comp
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def _candidate_types(k: int) -> list[CartanType]:
    out = [CartanType("A", k)]
    if k >= 2:
        out.append(CartanType("B", k))
    if k >= 3:
        out.append(CartanType("C", k))
    if k >= 4:
        out.append(CartanType("D", k))
    if k in (6, 7, 8):
        out.append(CartanType("E", k))
    if k == 4:
        out.append(CartanType("F", 4))
    if k == 2:
        out.append(CartanType("G", 2))
    return out


@dataclass(frozen=True)
class Component:
    """An irreducible piece of a sub-diagram: its type and its nodes in that type's Bourbaki order."""

    cartan_type: CartanType
    nodes: tuple[int, ...]

    def __str__(self) -> str:
        return str(self.cartan_type)


def identify_component(rs: RootSystem, nodes: Sequence[int]) -> Component:
    """Type of a connected sub-diagram, with its nodes listed in Bourbaki order.

    The first ordering found wins; callers that need all of them use
    ``cartan_isomorphisms`` directly.
    """
    nodes = tuple(sorted(nodes))
    sub = [[rs.cartan[i - 1][j - 1] for j in nodes] for i in nodes]
    for t in _candidate_types(len(nodes)):
        std = build_root_system(t).cartan
        for perm in cartan_isomorphisms(std, sub):
            return Component(t, tuple(nodes[perm[i]] for i in range(len(nodes))))
    raise ValueError(f"nodes {nodes} do not form an irreducible finite-type diagram")


def subsystem_components(rs: RootSystem, subset: Iterable[int]) -> list[Component]:
    return [identify_component(rs, c) for c in connected_components(rs, subset)]


def subsystem_label(components: Sequence[Component]) -> str:
    if not components:
        return "T"
    return "+".join(str(c) for c in components)


def root_phi_map(rs: RootSystem) -> dict[Root, Root]:
    """The bijection phi on all roots induced by the diagram automorphism.

    Built from phi(alpha_j) = alpha_phi(j) and phi(s_i beta) = s_phi(i) phi(beta),
    which also covers the Suzuki and Ree types where lengths are swapped.
    """
    n = rs.rank
    images: dict[Root, Root] = {}
    frontier = []
    for j in range(n):
        a = tuple(1 if k == j else 0 for k in range(n))
        b = tuple(1 if k == rs.phi[j] else 0 for k in range(n))
        images[a] = b
        frontier.append(a)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in rs.simple_roots:
                r = rs.reflect(i, beta)
                if r in images:
                    continue
                images[r] = rs.reflect(rs.phi_label(i), images[beta])
                nxt.append(r)
        frontier = nxt
    return images
