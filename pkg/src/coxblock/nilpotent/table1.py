"""Re-verification of the bundled table of induced orbits."""

from __future__ import annotations

import ast
import operator
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from ..data import DataBundle, Table1Record, default_data
from ..rootsystem import (
    CartanType,
    CartanTypeError,
    RootSystem,
    build_root_system,
    cartan_isomorphisms,
    phi_stable_subsets,
)
from .labels import DiagramError, LabelError, diagram_from_label, parse_label, validate_label
from .levi import Lemma32Report, lemma32_check

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul}


def _eval(expr: str, n: int) -> int:
    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id == "n":
            return n
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](walk(node.left), walk(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -walk(node.operand)
        raise ValueError(f"unsupported template expression {expr!r}")

    return walk(ast.parse(expr, mode="eval"))


def instantiate(template: str, n: Optional[int]) -> str:
    if n is None:
        if "{" in template:
            raise ValueError(f"template {template!r} needs a value of n")
        return template
    return re.sub(r"\{([^}]*)\}", lambda m: str(_eval(m.group(1), n)), template)


def expand_weights(text: str) -> tuple[int, ...]:
    out: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if "^" in item:
            v, k = item.split("^")
            if int(k) < 0:
                raise ValueError(f"negative repetition in {text!r}")
            out.extend([int(v)] * int(k))
        elif item:
            out.append(int(item))
    return tuple(out)


@dataclass(frozen=True)
class RowInstance:
    row_id: str
    group: str
    n: Optional[int]
    levi_type: str
    levi_label: str
    levi_weights: tuple[int, ...]
    ambient_type: str
    ambient_label: str
    ambient_weights: tuple[int, ...]

    @property
    def key(self) -> str:
        return self.row_id if self.n is None else f"{self.row_id}[n={self.n}]"


def instantiate_row(rec: Table1Record, n: Optional[int] = None) -> RowInstance:
    return RowInstance(
        rec.row_id,
        rec.group,
        n,
        instantiate(rec.levi_type, n),
        instantiate(rec.levi_label, n),
        expand_weights(instantiate(rec.levi_weights, n)),
        instantiate(rec.ambient_type, n),
        instantiate(rec.ambient_label, n),
        expand_weights(instantiate(rec.ambient_weights, n)),
    )


@dataclass
class RowReport:
    key: str
    row_id: str
    group: str
    n: Optional[int]
    levi_consistent: bool = False
    ambient_consistent: bool = False
    subset: Optional[tuple[int, ...]] = None
    lemma: Optional[Lemma32Report] = None
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.levi_consistent and self.ambient_consistent and self.lemma is not None and self.lemma.passed

    def to_json(self) -> dict:
        lemma = self.lemma.to_json() if self.lemma else None
        return {
            "row_id": self.key,
            "group": self.group,
            "n": self.n,
            "levi_consistent": self.levi_consistent,
            "ambient_consistent": self.ambient_consistent,
            "subset": list(self.subset) if self.subset is not None else None,
            "cond_i": bool(lemma and lemma["cond_i"]),
            "cond_ii": bool(lemma and lemma["cond_ii"]),
            "cond_iii": bool(lemma and lemma["cond_iii"]),
            "uI_in_u2": bool(lemma and lemma["uI_in_u2"]),
            "dim_identity": bool(lemma and lemma["dim_identity"]),
            "witnesses": lemma["witnesses"] if lemma else [],
            "dimensions": (
                {"ambient": lemma["dim_ambient"], "levi": lemma["dim_levi"], "u_I": lemma["u_I"]} if lemma else None
            ),
            "passed": self.passed,
            "problems": list(self.problems),
        }


def _label_consistent(t: CartanType, label_text: str, weights, data, problems: list[str], side: str) -> bool:
    try:
        label = parse_label(label_text)
        if t.family in "ABCD":
            validate_label(t.untwisted, label)
            expected = diagram_from_label(t.untwisted, label)
        else:
            from .tables import lookup_orbit

            expected = lookup_orbit(t, str(label), data).weights
    except (LabelError, KeyError) as exc:
        problems.append(f"{side} label {label_text}: {exc}")
        return False
    if tuple(expected) != tuple(weights):
        problems.append(f"{side} label {label_text} has diagram {expected}, row gives {tuple(weights)}")
        return False
    return True


def _weighted_match(rs: RootSystem, I: tuple[int, ...], weights, levi_rs: RootSystem, levi_weights) -> bool:
    sub = [[rs.cartan[i - 1][j - 1] for j in I] for i in I]
    for perm in cartan_isomorphisms(levi_rs.cartan, sub):
        if all(weights[I[perm[k]] - 1] == levi_weights[k] for k in range(len(I))):
            return True
    return False


def verify_instance(inst: RowInstance, data: Optional[DataBundle] = None) -> RowReport:
    report = RowReport(inst.key, inst.row_id, inst.group, inst.n)
    try:
        levi_t = CartanType.parse(inst.levi_type)
        amb_t = CartanType.parse(inst.ambient_type)
    except CartanTypeError as exc:
        report.problems.append(str(exc))
        return report
    report.levi_consistent = _label_consistent(levi_t, inst.levi_label, inst.levi_weights, data, report.problems, "Levi")
    report.ambient_consistent = _label_consistent(
        amb_t, inst.ambient_label, inst.ambient_weights, data, report.problems, "ambient"
    )
    rs = build_root_system(amb_t)
    levi_rs = build_root_system(levi_t.untwisted)
    d = inst.ambient_weights
    if len(d) != rs.rank or len(inst.levi_weights) != levi_rs.rank:
        report.problems.append("weight vector length does not match the rank")
        return report
    if levi_t.twist != 1 and levi_t.twist != amb_t.twist:
        report.problems.append(f"Levi twist {levi_t} does not match ambient {amb_t}")
    forced = {i for i in rs.simple_roots if d[i - 1] != 2}
    first_failure: Optional[tuple[tuple[int, ...], Lemma32Report]] = None
    for I in phi_stable_subsets(rs):
        if len(I) != levi_rs.rank or not forced <= I:
            continue
        nodes = tuple(sorted(I))
        if not _weighted_match(rs, nodes, d, levi_rs, inst.levi_weights):
            continue
        lemma = lemma32_check(rs, d, I, data)
        if lemma.passed:
            report.subset, report.lemma = nodes, lemma
            break
        if first_failure is None:
            first_failure = (nodes, lemma)
    if report.lemma is None:
        if first_failure is None:
            report.problems.append("no phi-stable subset I carries a Levi diagram isomorphic to the row's")
        else:
            report.subset, report.lemma = first_failure
            report.problems.append(f"Lemma conditions fail for I={list(first_failure[0])}: {first_failure[1].failures()}")
    return report


def row_instances(rows, min_n: int = 2, max_n: int = 8, max_rank: Optional[int] = None) -> list[RowInstance]:
    out = []
    for rec in rows:
        if rec.parametric:
            for n in range(max(min_n, rec.n_min), max_n + 1):
                inst = instantiate_row(rec, n)
                if max_rank is None or CartanType.parse(inst.ambient_type).rank <= max_rank:
                    out.append(inst)
        else:
            inst = instantiate_row(rec)
            if max_rank is None or CartanType.parse(inst.ambient_type).rank <= max_rank:
                out.append(inst)
    return out


@dataclass
class Table1Report:
    rows: list[RowReport]
    groups: dict[str, list[str]]

    def group_resolution(self) -> dict[str, Optional[str]]:
        """For each group of alternative readings, the single passing row (None if not exactly one)."""
        out = {}
        for g, keys in self.groups.items():
            passing = [r.key for r in self.rows if r.group == g and r.passed]
            out[g] = passing[0] if len(passing) == 1 else None
        return out

    @property
    def passed(self) -> bool:
        plain = all(r.passed for r in self.rows if r.group == "-")
        return plain and all(v is not None for v in self.group_resolution().values())

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "rows": [r.to_json() for r in self.rows],
            "groups": {g: {"candidates": keys, "resolved": self.group_resolution()[g]} for g, keys in self.groups.items()},
            "passed": self.passed,
        }


def verify_table1(
    min_n: int = 2,
    max_n: int = 8,
    max_rank: Optional[int] = None,
    data: Optional[DataBundle] = None,
    workers: int = 1,
) -> Table1Report:
    """Verify every row; parametric families run over min_n..max_n from each row's own minimum."""
    bundle = data or default_data()
    instances = row_instances(bundle.table1, min_n, max_n, max_rank)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            reports = list(pool.map(lambda i: verify_instance(i, bundle), instances))
    else:
        reports = [verify_instance(i, bundle) for i in instances]
    reports.sort(key=lambda r: (r.row_id, r.n if r.n is not None else -1))
    groups: dict[str, list[str]] = {}
    for r in reports:
        if r.group != "-":
            groups.setdefault(r.group, []).append(r.key)
    return Table1Report(reports, groups)
