"""Orbit labels for classical types and the sl2-weight recipe linking them to diagrams.

Type A orbits are partitions of n+1.  Types B, C, D use pairs (alpha, beta):
the Jordan type is alpha u alpha u beta (B, D) or alpha u alpha u 2*beta (C),
with beta's parts distinct (and odd for B, D).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

from ..rootsystem import CartanType


class LabelError(ValueError):
    """A label violating its family's constraints."""


class DiagramError(ValueError):
    """A weight vector that is not a weighted Dynkin diagram for the type."""


def _fmt(parts: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in sorted(parts)) + "]"


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise LabelError(f"partition parts must be positive: {self.parts}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return _fmt(self.parts)


@dataclass(frozen=True)
class PartitionPair:
    """(alpha, beta); ``variant`` is "I" or "II" for very even orbits in type D."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    variant: Optional[str] = None

    def __post_init__(self):
        if any(p <= 0 for p in self.alpha + self.beta):
            raise LabelError("partition parts must be positive")
        object.__setattr__(self, "alpha", tuple(sorted(self.alpha, reverse=True)))
        object.__setattr__(self, "beta", tuple(sorted(self.beta, reverse=True)))

    @property
    def very_even(self) -> bool:
        return not self.beta and all(p % 2 == 0 for p in self.alpha)

    def __str__(self) -> str:
        s = f"{_fmt(self.alpha)};{_fmt(self.beta)}"
        return s + (f"({self.variant})" if self.variant else "")


@dataclass(frozen=True)
class NamedOrbit:
    name: str

    def __str__(self) -> str:
        return self.name


OrbitLabel = Union[Partition, PartitionPair, NamedOrbit]

_LIST = r"\[\s*([0-9,\s]*)\]"


def _ints(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.replace(" ", "").split(",") if x)


def parse_label(text: str) -> OrbitLabel:
    """Parse ``[1,2,3]``, ``[1];[3]``, ``[2,2];[](II)`` or a bare exceptional name."""
    s = text.strip()
    m = re.fullmatch(_LIST + r"\s*;\s*" + _LIST + r"\s*(?:\((I|II)\))?", s)
    if m:
        return PartitionPair(_ints(m.group(1)), _ints(m.group(2)), m.group(3))
    m = re.fullmatch(_LIST, s)
    if m:
        return Partition(_ints(m.group(1)))
    if not s:
        raise LabelError("empty label")
    return NamedOrbit(s)


# --- partitions --------------------------------------------------------------


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def dual_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = sorted(parts, reverse=True)
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0] if parts else 0))


def jordan_type(t: CartanType, label: OrbitLabel) -> tuple[int, ...]:
    """Jordan type of the orbit in the natural representation."""
    if isinstance(label, Partition):
        return label.parts
    if isinstance(label, PartitionPair):
        if t.family == "C":
            parts = list(label.alpha) * 2 + [2 * b for b in label.beta]
        else:
            parts = list(label.alpha) * 2 + list(label.beta)
        return tuple(sorted(parts, reverse=True))
    raise LabelError(f"{label} is not a classical label")


def pair_from_jordan(family: str, parts: Sequence[int]) -> PartitionPair:
    """Split an orthogonal or symplectic Jordan type into (alpha, beta)."""
    counts = Counter(parts)
    beta: list[int] = []
    alpha: list[int] = []
    for p, m in counts.items():
        if family == "C":
            if p % 2 == 0 and m % 2 == 1:
                beta.append(p // 2)
                m -= 1
        elif p % 2 == 1 and m % 2 == 1:
            beta.append(p)
            m -= 1
        if m % 2:
            raise LabelError(f"{sorted(parts, reverse=True)} is not a Jordan type for family {family}")
        alpha.extend([p] * (m // 2))
    return PartitionPair(tuple(alpha), tuple(beta))


def natural_dimension(t: CartanType) -> int:
    n = t.rank
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[t.family]


def validate_label(t: CartanType, label: OrbitLabel) -> None:
    """Raise LabelError naming the violated constraint."""
    f, n = t.family, t.rank
    if f not in "ABCD":
        raise LabelError(f"{t} is exceptional; classical labels do not apply")
    if f == "A":
        if not isinstance(label, Partition):
            raise LabelError("type A labels are partitions")
        if label.size != n + 1:
            raise LabelError(f"|lambda| = {label.size} but type {t} needs |lambda| = {n + 1}")
        return
    if not isinstance(label, PartitionPair):
        raise LabelError(f"type {f} labels are pairs of partitions (alpha;beta)")
    a, b = sum(label.alpha), sum(label.beta)
    if len(set(label.beta)) != len(label.beta):
        raise LabelError(f"parts of beta must be distinct, got {_fmt(label.beta)}")
    if f in "BD" and any(p % 2 == 0 for p in label.beta):
        raise LabelError(f"parts of beta must be odd in type {f}, got {_fmt(label.beta)}")
    if f == "B" and 2 * a + b != 2 * n + 1:
        raise LabelError(f"2|alpha| + |beta| = {2 * a + b}, expected 2n+1 = {2 * n + 1}")
    if f == "C" and a + b != n:
        raise LabelError(f"|alpha| + |beta| = {a + b}, expected n = {n}")
    if f == "D":
        if 2 * a + b != 2 * n:
            raise LabelError(f"2|alpha| + |beta| = {2 * a + b}, expected 2n = {2 * n}")
        if label.very_even and label.variant not in ("I", "II"):
            raise LabelError("very even label needs a variant (I) or (II)")
        if not label.very_even and label.variant is not None:
            raise LabelError("only very even labels carry a variant")
    elif label.variant is not None:
        raise LabelError("only very even labels in type D carry a variant")


def classical_labels(t: CartanType) -> list[OrbitLabel]:
    """Every orbit label of a classical type, in a fixed order."""
    N = natural_dimension(t)
    f = t.family
    out: list[OrbitLabel] = []
    for lam in partitions(N):
        if f == "A":
            out.append(Partition(lam))
            continue
        try:
            pair = pair_from_jordan(f, lam)
        except LabelError:
            continue
        if f == "D" and pair.very_even:
            out.append(PartitionPair(pair.alpha, pair.beta, "I"))
            out.append(PartitionPair(pair.alpha, pair.beta, "II"))
        else:
            out.append(pair)
    return out


# --- sl2 weights -------------------------------------------------------------


def sl2_weights(parts: Sequence[int]) -> Counter:
    """Multiset of h-eigenvalues: p-1, p-3, ..., 1-p for each part p."""
    weights: Counter = Counter()
    for p in parts:
        for k in range(p):
            weights[p - 1 - 2 * k] += 1
    return weights


def _descending(weights: Counter, count: int) -> list[int]:
    """The ``count`` largest weights, walking down the support of the multiset."""
    out: list[int] = []
    top = max(weights) if weights else 0
    w = top
    while len(out) < count:
        take = min(weights.get(w, 0), count - len(out))
        out.extend([w] * take)
        w -= 1
    return out


def diagram_from_label(t: CartanType, label: OrbitLabel) -> tuple[int, ...]:
    """Weighted Dynkin diagram (Bourbaki order) of a classical orbit label."""
    validate_label(t, label)
    n = t.rank
    weights = sl2_weights(jordan_type(t, label))
    if t.family == "A":
        h = _descending(weights, n + 1)
        return tuple(h[i] - h[i + 1] for i in range(n))
    h = _descending(weights, n)
    d = [h[i] - h[i + 1] for i in range(n - 1)]
    if t.family == "B":
        d.append(h[n - 1])
    elif t.family == "C":
        d.append(2 * h[n - 1])
    else:
        d.append(h[n - 2] + h[n - 1])
        if isinstance(label, PartitionPair) and label.variant == "II":
            d[n - 2], d[n - 1] = d[n - 1], d[n - 2]
    return tuple(d)


def _peel_strings(weights: Counter) -> Optional[tuple[int, ...]]:
    """Decompose a symmetric multiset into sl2 strings; None if impossible."""
    w = Counter({k: v for k, v in weights.items() if v})
    parts = []
    while w:
        top = max(w)
        if top < 0:
            return None
        for k in range(top, -top - 1, -2):
            if w.get(k, 0) <= 0:
                return None
            w[k] -= 1
            if w[k] == 0:
                del w[k]
        parts.append(top + 1)
    return tuple(sorted(parts, reverse=True))


def label_from_diagram(t: CartanType, d: Sequence[int]) -> OrbitLabel:
    """Inverse of diagram_from_label; DiagramError if d is not in its image."""
    f, n = t.family, t.rank
    if f not in "ABCD":
        raise DiagramError(f"{t} is exceptional; use the orbit table")
    d = tuple(d)
    if len(d) != n or any(x not in (0, 1, 2) for x in d):
        raise DiagramError(f"{d} is not a weighted Dynkin diagram for this type: need {n} weights in {{0,1,2}}")
    h: list[Fraction]
    if f == "A":
        h = [Fraction(0)]
        for x in reversed(d):
            h.insert(0, h[0] + x)
        shift = Fraction(sum(h), n + 1)
        h = [x - shift for x in h]
        multiset = h
    else:
        if f == "B":
            last = [Fraction(d[-1])]
        elif f == "C":
            last = [Fraction(d[-1], 2)]
        else:
            last = [Fraction(d[-2] + d[-1], 2), Fraction(d[-1] - d[-2], 2)]
        h = last
        for x in reversed(d[: n - len(last)]):
            h.insert(0, h[0] + x)
        multiset = h + [-x for x in h] + ([Fraction(0)] if f == "B" else [])
    if any(x.denominator != 1 for x in multiset):
        raise DiagramError(f"{d} is not a weighted Dynkin diagram for {t}")
    parts = _peel_strings(Counter(int(x) for x in multiset))
    if parts is None:
        raise DiagramError(f"{d} is not a weighted Dynkin diagram for {t}")
    if f == "A":
        label: OrbitLabel = Partition(parts)
    else:
        try:
            label = pair_from_jordan(f, parts)
        except LabelError:
            raise DiagramError(f"{d} is not a weighted Dynkin diagram for {t}") from None
        if f == "D" and label.very_even:
            label = PartitionPair(label.alpha, label.beta, "II" if h[-1] < 0 else "I")
    if diagram_from_label(t, label) != d:
        raise DiagramError(f"{d} is not a weighted Dynkin diagram for {t}")
    return label


def is_distinguished_label(t: CartanType, label: OrbitLabel) -> bool:
    """Classical distinguished orbits: Jordan type with distinct parts (all odd or all even)."""
    parts = jordan_type(t, label)
    if len(set(parts)) != len(parts):
        return False
    if t.family == "A":
        return len(parts) == 1
    return all(p % 2 == (0 if t.family == "C" else 1) for p in parts)
