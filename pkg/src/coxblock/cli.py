"""Command-line interface: ``coxblock <command> [options]``.

Exit codes: 0 success, 1 a verification or admissibility check failed,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import blockarith, brauer
from .data import DataError, load_data, resolve_data_dir
from .nilpotent import labels as labelmod
from .nilpotent.diagrams import orbit_dimension_unchecked
from .nilpotent.levi import lemma32_check
from .nilpotent.table1 import verify_table1
from .nilpotent.tables import all_diagrams, diagram_label, lookup_orbit
from .rootsystem import (
    CartanType,
    CartanTypeError,
    build_root_system,
    char_poly,
    coxeter_element,
    coxeter_number,
    phi_orbits,
    torus_order,
    twisted_char_poly,
    twisted_coxeter_order,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
JSON_SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _cartan(text: str) -> CartanType:
    try:
        return CartanType.parse(text)
    except CartanTypeError as exc:
        raise UsageError(f"{exc}; try names like A3, B4, 2A5, 3D4, E8, 2G2") from None


def _int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def _emit(payload: dict, fmt: str, text_lines: Sequence[str], out) -> None:
    if fmt == "json":
        payload = {"schema_version": JSON_SCHEMA_VERSION, **payload}
        out.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _mark(ok: bool) -> str:
    return "pass" if ok else "FAIL"


# --- commands ------------------------------------------------------------------


def cmd_verify_table1(args, data, out) -> int:
    report = verify_table1(args.min_n, args.max_n, args.max_rank, data)
    lines = []
    for r in report.rows:
        j = r.to_json()
        flags = " ".join(f"{k}={_mark(j[k])}" for k in ("cond_i", "cond_ii", "cond_iii", "uI_in_u2", "dim_identity"))
        where = f" I={list(r.subset)}" if r.subset is not None else ""
        lines.append(f"{_mark(r.passed):4}  {r.key:24} {flags}{where}")
        for p in r.problems:
            lines.append(f"      - {p}")
    for g, resolved in report.group_resolution().items():
        lines.append(f"group {g}: {'resolved by ' + resolved if resolved else 'NOT resolved (need exactly one passing reading)'}")
    lines.append(f"overall: {_mark(report.passed)} ({len(report.rows)} instances)")
    _emit(report.to_json(), args.format, lines, out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_lemma32(args, data, out) -> int:
    t = _cartan(args.type)
    rs = build_root_system(t)
    weights = _int_list(args.weights, "--weights")
    subset = _int_list(args.subset, "--subset") if args.subset else ()
    if len(weights) != rs.rank or any(w not in (0, 1, 2) for w in weights):
        raise UsageError(f"--weights needs {rs.rank} values in {{0,1,2}} for {t}")
    if any(not 1 <= i <= rs.rank for i in subset):
        raise UsageError(f"--subset entries must be simple-root labels 1..{rs.rank}")
    report = lemma32_check(rs, weights, subset, data)
    j = report.to_json()
    lines = [f"{t}  d={','.join(map(str, weights))}  I={list(subset)}  Levi orbit {report.levi_label}"]
    for k in ("cond_i", "cond_ii", "cond_iii", "uI_in_u2", "dim_identity"):
        flag = _mark(j[k])
        if not j[k]:
            flag += "   <-- fails"
        lines.append(f"  {k:13} {flag}")
    for w in report.witnesses:
        lines.append(f"  chain for J-component {list(w.component)}: path {list(w.path)} beta {w.beta}")
    for c in report.failed_components:
        lines.append(f"  no admissible chain for J-component {list(c)}")
    lines.append(f"  dim ambient {report.dim_ambient} = dim Levi {report.dim_levi} + 2*{report.u_I}? {_mark(report.dim_identity)}")
    lines.append(f"overall: {_mark(report.passed)}")
    _emit({"type": str(t), "weights": list(weights), "subset": list(subset), **j}, args.format, lines, out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_orbits(args, data, out) -> int:
    t = _cartan(args.type).untwisted
    rs = build_root_system(t)
    if args.name:
        if t.family in "ABCD":
            label = labelmod.parse_label(args.name)
            try:
                weights = labelmod.diagram_from_label(t, label)
            except labelmod.LabelError as exc:
                raise UsageError(str(exc)) from None
        else:
            try:
                weights = lookup_orbit(t, args.name, data).weights
            except KeyError as exc:
                raise UsageError(f"{exc.args[0]}; run 'coxblock orbits --type {t}' for the list") from None
            label = args.name
        rows = [(str(label), weights)]
    elif args.weights:
        weights = _int_list(args.weights, "--weights")
        try:
            label = diagram_label(t, weights, data)
        except labelmod.DiagramError as exc:
            _emit({"type": str(t), "weights": list(weights), "valid": False, "error": str(exc)}, args.format, [str(exc)], out)
            return EXIT_FAIL
        rows = [(str(label), weights)]
    else:
        rows = [(str(l), w) for l, w in all_diagrams(t, data)]
    entries = [
        {"label": l, "weights": list(w), "dimension": orbit_dimension_unchecked(rs, w)} for l, w in rows
    ]
    lines = [f"{e['label']:20} {','.join(map(str, e['weights'])):18} dim {e['dimension']}" for e in entries]
    _emit({"type": str(t), "orbits": entries}, args.format, lines, out)
    return EXIT_OK


def cmd_coxeter(args, data, out) -> int:
    t = _cartan(args.type)
    rs = build_root_system(t)
    c = coxeter_element(rs)
    ch = coxeter_number(t)
    cp = char_poly(c)
    tcp = twisted_char_poly(rs, c)
    torus = torus_order(rs, c)
    payload = {
        "type": str(t),
        "orbits": [list(o) for o in phi_orbits(rs)],
        "word": list(c.word),
        "h": ch.h,
        "delta": ch.delta,
        "very_twisted": ch.very_twisted,
        "twisted_coxeter_order": twisted_coxeter_order(rs),
        "char_poly": cp.to_json(),
        "twisted_char_poly": tcp.to_json(),
        "torus_order": torus.to_json(),
        "weyl_order": blockarith.weyl_order(t),
        "hypothesis": str(blockarith.theorem_hypotheses(t)),
    }
    h_text = str(ch.h) if ch.h is not None else "n/a (very twisted: use the torus order)"
    lines = [
        f"type            {t}",
        f"phi-orbits      {' '.join('{' + ','.join(map(str, o)) + '}' for o in phi_orbits(rs))}",
        f"Coxeter word    {' '.join(f's{i}' for i in c.word)}",
        f"h               {h_text}",
        f"delta           {ch.delta}",
        f"char poly of c  {cp.format('x')}",
        f"... of sigma*c  {tcp.format('x')}",
        f"|T_c|           {torus}",
        f"|W^F|           {payload['weyl_order']}",
        f"hypothesis      {payload['hypothesis']}",
    ]
    _emit(payload, args.format, lines, out)
    return EXIT_OK


def cmd_primes(args, data, out) -> int:
    t = _cartan(args.type)
    if args.ell is not None:
        report = blockarith.coxeter_case_check(blockarith.CoxeterCaseParams(t, args.q, args.ell))
        j = report.to_json()
        lines = [f"{t}, q={args.q}, ell={args.ell}: {'admissible' if report.admissible else 'not admissible'}"]
        lines += [f"  governing value {report.polynomial} -> {report.polynomial_value}"]
        lines += [f"  - {r}" for r in report.reasons]
        _emit(j, args.format, lines, out)
        return EXIT_OK if report.admissible else EXIT_FAIL
    primes = blockarith.admissible_primes(t, args.q, args.bound)
    lines = [f"{t}, q={args.q}: admissible ell <= {args.bound}: {', '.join(map(str, primes)) or 'none'}"]
    _emit({"type": str(t), "q": args.q, "bound": args.bound, "primes": primes}, args.format, lines, out)
    return EXIT_OK


def cmd_tree(args, data, out) -> int:
    t = _cartan(args.type)
    key = str(t)
    if key not in data.series:
        raise UsageError(f"no series data for {key}; bundled: {', '.join(sorted(data.series))} (add series files via --data-dir)")
    params = blockarith.CoxeterCaseParams(t, args.q, args.ell)
    report = blockarith.coxeter_case_check(params)
    if not report.admissible:
        sys.stderr.write(f"({args.q}, {args.ell}) is not a Coxeter case for {key}: {'; '.join(report.reasons)}\n")
        return EXIT_FAIL
    series = brauer.series_from_data(key, data)
    try:
        bound = brauer.bind_roots_of_unity([s.zeta for s in series], args.q, args.ell, t.radicand)
    except brauer.BindingError as exc:
        sys.stderr.write(f"root-of-unity binding failed: {exc}\n")
        return EXIT_FAIL
    m_exc = blockarith.exceptional_multiplicity(params)
    fixture = data.fixtures.get(key)
    if fixture is not None and (fixture.q, fixture.ell) == (args.q, args.ell) and fixture.m_exc != m_exc:
        sys.stderr.write(f"data gives m_exc = {fixture.m_exc} but (q, ell) gives {m_exc}\n")
        return EXIT_FAIL
    tree = brauer.build_hlm_tree(series, m_exc, key)
    neighbours = {r.node: r.neighbours for r in data.planar.get(key, [])}
    if neighbours:
        tree = brauer.attach_planar_order(tree, brauer.orders_from_neighbours(tree, neighbours))
    if args.emit:
        out.write(brauer.serialize_tree(tree, args.emit))
        return EXIT_OK
    lines = [f"{key}: {len(tree.nodes)} nodes, {len(tree.edges)} edges, exceptional multiplicity {m_exc}"]
    for s in series:
        lines.append(f"  series {s.name:10} zeta={s.zeta} -> {bound[s.zeta]}: {' - '.join(c.name for c in s.characters)}")
    payload = brauer.to_json_dict(tree)
    payload["roots_of_unity"] = {s.name: bound[s.zeta] for s in series}
    _emit(payload, args.format, lines, out)
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="report format (default text)")
    common.add_argument("--data-dir", help="directory overriding bundled data files (also COXBLOCK_DATA)")

    parser = argparse.ArgumentParser(prog="coxblock", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-table1", parents=[common], help="re-verify every induced-orbit row")
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-rank", type=int, default=None, help="skip instances of larger ambient rank")
    p.set_defaults(func=cmd_verify_table1)

    p = sub.add_parser("lemma32", parents=[common], help="check the induction criterion for one (d, I)")
    p.add_argument("--type", required=True)
    p.add_argument("--weights", required=True, help="comma-separated weights, Bourbaki order")
    p.add_argument("--subset", default="", help="comma-separated simple-root labels of I")
    p.set_defaults(func=cmd_lemma32)

    p = sub.add_parser("orbits", parents=[common], help="list nilpotent orbits or look one up")
    p.add_argument("--type", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--name", help="label to look up, e.g. D4(a1) or [1];[3]")
    g.add_argument("--weights", help="diagram to identify")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("coxeter", parents=[common], help="Coxeter element, h, delta, polynomials")
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("primes", parents=[common], help="admissible primes ell for a given q")
    p.add_argument("--type", required=True)
    p.add_argument("--q", type=int, required=True, help="q, or Q = q^2 for 2B2, 2G2, 2F4")
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--ell", type=int, default=None, help="check one prime in detail")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("tree", parents=[common], help="build the HLM Brauer tree for (type, q, ell)")
    p.add_argument("--type", required=True)
    p.add_argument("--q", type=int, required=True, help="q, or Q = q^2 for 2B2, 2G2, 2F4")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--emit", choices=("dot", "json"), default=None)
    p.set_defaults(func=cmd_tree)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        data = load_data(resolve_data_dir(args.data_dir))
        return args.func(args, data, out)
    except UsageError as exc:
        sys.stderr.write(f"coxblock {args.command}: {exc}\n")
        return EXIT_USAGE
    except DataError as exc:
        sys.stderr.write(f"coxblock: data error: {exc}\n  hint: check --data-dir / COXBLOCK_DATA and refresh SHA256SUMS\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
