"""Type lists shared by the test modules."""

from __future__ import annotations

from coxblock.rootsystem import CartanType

SPLIT = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(3, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)
TWISTED = ["2A2", "2A3", "2A4", "2A5", "2D4", "2D5", "3D4", "2E6"]
VERY_TWISTED = ["2B2", "2G2", "2F4"]
ALL = SPLIT + TWISTED + VERY_TWISTED


def root_count(t: CartanType) -> int:
    """Number of roots from the textbook closed forms."""
    n = t.rank
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n, 0),
        "F": 48,
        "G": 12,
    }[t.family]
