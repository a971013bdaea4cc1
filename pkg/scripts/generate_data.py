"""Regenerate the exceptional orbit table and refresh SHA256SUMS.

Run from the repository root:  python3 scripts/generate_data.py
The orbit table is produced by the Bala-Carter generator; every other data
file is maintained by hand and only re-hashed here.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from coxblock.data import ORBITS_FILE, write_checksums  # noqa: E402
from coxblock.nilpotent.bala_carter import generate_orbit_table  # noqa: E402
from coxblock.rootsystem import CartanType  # noqa: E402

DATA = ROOT / "src" / "coxblock" / "data"

HEADER = """\
# Nilpotent orbits of the exceptional simple Lie algebras (good characteristic).
# Columns: type, Bala-Carter name, weighted Dynkin diagram (Bourbaki order), dimension.
# Names: "~" marks a short-root Levi factor; primes separate the two classes of
# non-conjugate isomorphic Levi subalgebras in E7 ('' is the smaller orbit).
# Provenance: generated by scripts/generate_data.py from Bala-Carter Levi data;
# checked against the standard tables in Carter, Finite Groups of Lie Type, chs. 5 and 13,
# and Collingwood-McGovern, Nilpotent Orbits in Semisimple Lie Algebras, ch. 8.
# Dimensions are recomputed from the diagrams on load.
"""


def render() -> str:
    """Contents of the orbit table file."""
    lines = [HEADER.rstrip("\n")]
    for name in ("G2", "F4", "E6", "E7", "E8"):
        table = generate_orbit_table(CartanType.parse(name))
        lines.append(f"# {name}: {len(table)} orbits")
        for orbit in table:
            weights = ",".join(str(w) for w in orbit.weights)
            lines.append(f"{name}\t{orbit.name}\t{weights}\t{orbit.dimension}")
    return "\n".join(lines) + "\n"


def main() -> None:
    (DATA / ORBITS_FILE).write_text(render(), encoding="utf-8")
    write_checksums(DATA)
    print(f"wrote {DATA / ORBITS_FILE} and refreshed checksums")


if __name__ == "__main__":
    main()
