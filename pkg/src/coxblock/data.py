"""Bundled data files: exceptional orbit tables, induction rows, Brauer-tree inputs.

All files are tab-separated with ``#`` comment lines.  A SHA256SUMS file in
the data directory pins their contents; a user directory given by flag or by
the COXBLOCK_DATA environment variable replaces the bundled files it shadows
and may add series files of its own.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator, Optional, Sequence

ENV_VAR = "COXBLOCK_DATA"
CHECKSUM_FILE = "SHA256SUMS"

ORBITS_FILE = "exceptional_orbits.tsv"
TABLE1_FILE = "table1.tsv"
SERIES_FILE = "series.tsv"
FIXTURES_FILE = "fixtures.tsv"
PLANAR_FILE = "planar.tsv"


class DataError(Exception):
    """Configuration problem in a data file; carries the location."""

    def __init__(self, message: str, path: Optional[Path] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)


def bundled_dir() -> Path:
    return Path(str(resources.files("coxblock") / "data"))


def sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def read_checksums(directory: Path) -> dict[str, str]:
    path = directory / CHECKSUM_FILE
    if not path.exists():
        return {}
    sums = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DataError("expected '<sha256>  <file>'", path, lineno)
        sums[parts[1]] = parts[0]
    return sums


def write_checksums(directory: Path) -> None:
    names = sorted(p.name for p in directory.glob("*.tsv"))
    lines = [f"{sha256(directory / n)}  {n}" for n in names]
    (directory / CHECKSUM_FILE).write_text("\n".join(lines) + "\n", encoding="utf-8")


def verify_checksums(directory: Path, required: bool) -> None:
    sums = read_checksums(directory)
    if not sums:
        if required:
            raise DataError("missing checksum file", directory / CHECKSUM_FILE)
        return
    for name, digest in sums.items():
        path = directory / name
        if not path.exists():
            raise DataError("listed in SHA256SUMS but missing", path)
        if sha256(path) != digest:
            raise DataError("checksum mismatch (file edited without refreshing SHA256SUMS)", path)


def records(path: Path, ncols: int) -> Iterator[tuple[int, list[str]]]:
    """Non-comment rows of a TSV file with exactly ``ncols`` fields."""
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DataError("data file not found; reinstall the package or fix --data-dir", path) from None
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        fields = [f.strip() for f in raw.split("\t")]
        if len(fields) != ncols:
            raise DataError(f"expected {ncols} tab-separated fields, found {len(fields)}", path, lineno)
        yield lineno, fields


def parse_int(text: str, path: Path, lineno: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise DataError(f"{what} must be an integer, got {text!r}", path, lineno) from None


def parse_weights(text: str, path: Path, lineno: int) -> tuple[int, ...]:
    try:
        w = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise DataError(f"malformed weight vector {text!r}", path, lineno) from None
    if any(x not in (0, 1, 2) for x in w):
        raise DataError(f"weights must lie in {{0,1,2}}: {text!r}", path, lineno)
    return w


# --- record types -------------------------------------------------------------


@dataclass(frozen=True)
class OrbitRecord:
    cartan_type: str
    name: str
    weights: tuple[int, ...]
    dimension: int
    line: int


@dataclass(frozen=True)
class Table1Record:
    row_id: str
    group: str
    levi_type: str
    levi_label: str
    levi_weights: str
    ambient_type: str
    ambient_label: str
    ambient_weights: str
    n_min: Optional[int]
    source: str
    line: int

    @property
    def parametric(self) -> bool:
        return self.n_min is not None


@dataclass(frozen=True)
class SeriesRecord:
    cartan_type: str
    series: str
    zeta_order: int
    zeta_exponent: int
    m: int
    characters: tuple[str, ...]
    line: int


@dataclass(frozen=True)
class FixtureRecord:
    cartan_type: str
    q: int
    ell: int
    m_exc: int
    r: int
    line: int


@dataclass(frozen=True)
class PlanarRecord:
    cartan_type: str
    node: str
    neighbours: tuple[str, ...]
    line: int


@dataclass
class DataBundle:
    directory: Path
    orbits: dict[str, list[OrbitRecord]] = field(default_factory=dict)
    table1: list[Table1Record] = field(default_factory=list)
    series: dict[str, list[SeriesRecord]] = field(default_factory=dict)
    fixtures: dict[str, FixtureRecord] = field(default_factory=dict)
    planar: dict[str, list[PlanarRecord]] = field(default_factory=dict)
    sources: dict[str, Path] = field(default_factory=dict)


def _load_orbits(path: Path) -> dict[str, list[OrbitRecord]]:
    from .rootsystem import CartanType, CartanTypeError

    out: dict[str, list[OrbitRecord]] = {}
    seen: set[tuple[str, str]] = set()
    for lineno, (t, name, w, dim) in records(path, 4):
        try:
            ct = CartanType.parse(t)
        except CartanTypeError as exc:
            raise DataError(str(exc), path, lineno) from None
        weights = parse_weights(w, path, lineno)
        if len(weights) != ct.rank:
            raise DataError(f"{t} needs {ct.rank} weights, found {len(weights)}", path, lineno)
        if (t, name) in seen:
            raise DataError(f"duplicate orbit {name} for {t}", path, lineno)
        seen.add((t, name))
        out.setdefault(t, []).append(OrbitRecord(t, name, weights, parse_int(dim, path, lineno, "dimension"), lineno))
    return out


def _load_table1(path: Path) -> list[Table1Record]:
    rows = []
    ids = set()
    for lineno, f in records(path, 10):
        row_id, group, lt, ll, lw, at, al, aw, nmin, source = f
        if row_id in ids:
            raise DataError(f"duplicate row id {row_id}", path, lineno)
        ids.add(row_id)
        n_min = None if nmin in ("-", "") else parse_int(nmin, path, lineno, "n_min")
        rows.append(Table1Record(row_id, group, lt, ll, lw, at, al, aw, n_min, source, lineno))
    return rows


def _load_series(path: Path) -> dict[str, list[SeriesRecord]]:
    from .rootsystem import CartanType, CartanTypeError

    out: dict[str, list[SeriesRecord]] = {}
    for lineno, (t, sid, order, exp, m, chars) in records(path, 6):
        names = tuple(c.strip() for c in chars.split(";") if c.strip())
        if not names:
            raise DataError("series without characters", path, lineno)
        rec = SeriesRecord(
            t,
            sid,
            parse_int(order, path, lineno, "zeta order"),
            parse_int(exp, path, lineno, "zeta exponent"),
            parse_int(m, path, lineno, "m"),
            names,
            lineno,
        )
        if rec.zeta_order < 1:
            raise DataError("zeta order must be positive", path, lineno)
        try:
            CartanType.parse(t)
        except CartanTypeError as exc:
            raise DataError(str(exc), path, lineno) from None
        taken = {k for r in out.get(t, []) for k in range(r.m, r.m + len(r.characters))}
        if taken & set(range(rec.m, rec.m + len(names))):
            raise DataError(f"{t}: character indices of {sid} overlap an earlier series", path, lineno)
        out.setdefault(t, []).append(rec)
    return out


def _load_fixtures(path: Path) -> dict[str, FixtureRecord]:
    out = {}
    for lineno, (t, q, ell, m_exc, r) in records(path, 5):
        rec = FixtureRecord(
            t,
            parse_int(q, path, lineno, "q"),
            parse_int(ell, path, lineno, "ell"),
            parse_int(m_exc, path, lineno, "m_exc"),
            parse_int(r, path, lineno, "r"),
            lineno,
        )
        if rec.m_exc < 1:
            raise DataError("m_exc must be at least 1", path, lineno)
        out[t] = rec
    return out


def _load_planar(path: Path) -> dict[str, list[PlanarRecord]]:
    out: dict[str, list[PlanarRecord]] = {}
    for lineno, (t, node, nbrs) in records(path, 3):
        names = tuple(c.strip() for c in nbrs.split(";") if c.strip())
        out.setdefault(t, []).append(PlanarRecord(t, node, names, lineno))
    return out


def resolve_data_dir(flag: Optional[str] = None) -> Optional[Path]:
    """Override directory: the flag wins over the environment variable."""
    chosen = flag or os.environ.get(ENV_VAR)
    return Path(chosen) if chosen else None


def _pick(name: str, override: Optional[Path]) -> Path:
    if override is not None and (override / name).exists():
        return override / name
    return bundled_dir() / name


def load_data(data_dir: Optional[str | Path] = None, use_env: bool = True) -> DataBundle:
    """Load and validate every data file.

    Files present in the override directory shadow the bundled ones.  Any
    ``series*.tsv`` files there are merged into the bundled series data.
    """
    override = Path(data_dir) if data_dir is not None else (resolve_data_dir() if use_env else None)
    if override is not None and not override.is_dir():
        raise DataError("data directory does not exist", override)
    verify_checksums(bundled_dir(), required=True)
    if override is not None:
        verify_checksums(override, required=False)
    bundle = DataBundle(override or bundled_dir())
    bundle.sources = {name: _pick(name, override) for name in (ORBITS_FILE, TABLE1_FILE, SERIES_FILE, FIXTURES_FILE, PLANAR_FILE)}
    bundle.orbits = _load_orbits(bundle.sources[ORBITS_FILE])
    bundle.table1 = _load_table1(bundle.sources[TABLE1_FILE])
    bundle.series = _load_series(bundle.sources[SERIES_FILE])
    bundle.fixtures = _load_fixtures(bundle.sources[FIXTURES_FILE])
    bundle.planar = _load_planar(bundle.sources[PLANAR_FILE])
    if override is not None:
        for extra in sorted(override.glob("series?*.tsv")):
            for t, recs in _load_series(extra).items():
                if t in bundle.series:
                    raise DataError(f"series for {t} already defined", extra)
                bundle.series[t] = recs
    validate_bundle(bundle)
    return bundle


def validate_bundle(bundle: DataBundle) -> None:
    """Cross-file invariants: orbit dimensions and planar data with matching series."""
    from .nilpotent.diagrams import orbit_dimension_unchecked
    from .rootsystem import CartanType, build_root_system

    for t, recs in bundle.orbits.items():
        rs = build_root_system(CartanType.parse(t))
        for rec in recs:
            dim = orbit_dimension_unchecked(rs, rec.weights)
            if dim != rec.dimension:
                raise DataError(
                    f"{rec.name}: stated dimension {rec.dimension} but the diagram gives {dim}",
                    bundle.sources.get(ORBITS_FILE),
                    rec.line,
                )
    for t in bundle.planar:
        if t not in bundle.series:
            raise DataError(f"planar data for {t} has no series data")


_DEFAULT: Optional[DataBundle] = None


def default_data() -> DataBundle:
    """The bundled data (or the COXBLOCK_DATA override), loaded once."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_data()
    return _DEFAULT


def reset_default_data() -> None:
    global _DEFAULT
    _DEFAULT = None
