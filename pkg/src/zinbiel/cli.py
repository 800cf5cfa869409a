"""Command-line interface.

Exit codes: 0 success, 1 a property or table comparison failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog, report
from .algebra import check_zinbiel
from .battery import REQUIRED, annihilator_report, battery_passed, property_battery
from .derivations import derivation_space, inner_derivation_space, symbolic_ad
from .fileformat import AlgebraFormatError, emit_algebra, format_rational, parse_algebra, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _q(x) -> str:
    return format_rational(Fraction(x))


def _vec(v) -> list:
    return [_q(x) for x in v]


def _mat(m) -> list:
    return [_vec(r) for r in m]


def _mat_lines(m, indent="  ") -> list:
    return [indent + "  ".join(r) for r in _mat(m)]


def _jsonable(x):
    if isinstance(x, Fraction):
        return _q(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _dump(doc) -> str:
    return json.dumps(_jsonable(doc), indent=2, sort_keys=True) + "\n"


def _read_algebra(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_algebra(text)
    except AlgebraFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("ZINBIEL_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"ZINBIEL_SEED must be an integer, got {env!r}") from None


def cmd_check(args, out) -> int:
    a = _read_algebra(args.file)
    viol = check_zinbiel(a)
    if args.json:
        out.write(_dump({"algebra": a.name, "zinbiel": not viol,
                         "violations": [{"triple": list(v.triple), "residual": _vec(v.residual)}
                                        for v in viol]}))
    elif not viol:
        out.write(f"{a.name}: Zinbiel identity holds on all {a.dim ** 3} basis triples\n")
    else:
        out.write(f"{a.name}: {len(viol)} violation(s) of the Zinbiel identity\n")
        for v in viol:
            i, j, k = v.triple
            out.write(f"  (e_{i}, e_{j}, e_{k}): residual {' '.join(_vec(v.residual))}\n")
    return EXIT_OK if not viol else EXIT_FAIL


def cmd_inner(args, out) -> int:
    a = _read_algebra(args.file)
    sym = symbolic_ad(a)
    inn = inner_derivation_space(a)
    if args.json:
        out.write(_dump({"algebra": a.name, "symbolic": sym.rows(),
                         "basis": [_mat(m) for m in inn.basis], "dim": inn.dim}))
        return EXIT_OK
    lines = [f"{a.name}: ad_w for w = " + " + ".join(f"a_{t} e_{t}" for t in range(1, a.dim + 1))]
    lines += ["  " + r for r in sym.render().splitlines()]
    lines.append("Inn basis:")
    for k, m in enumerate(inn.basis, 1):
        lines.append(f" D_{k} =")
        lines += _mat_lines(m, "    ")
    lines.append(f"dim Inn = {inn.dim}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_der(args, out) -> int:
    a = _read_algebra(args.file)
    der = derivation_space(a)
    if args.json:
        out.write(_dump({"algebra": a.name, "basis": [_mat(m) for m in der.basis], "dim": der.dim}))
        return EXIT_OK
    lines = [f"{a.name}: Der basis"]
    for k, m in enumerate(der.basis, 1):
        lines.append(f" d_{k} =")
        lines += _mat_lines(m, "    ")
    lines.append(f"dim Der = {der.dim}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_ann(args, out) -> int:
    a = _read_algebra(args.file)
    rep = annihilator_report(a)
    if args.json:
        out.write(_dump({"algebra": a.name, **{
            side: {"basis": [_vec(b) for b in r["subspace"].basis], "dim": r["subspace"].dim,
                   "ideal": r["ideal"],
                   "witness": None if r["witness"] is None else
                   {"product": r["witness"][0], "value": _vec(r["witness"][1])}}
            for side, r in rep.items()}}))
        return EXIT_OK
    for side in ("left", "right"):
        r = rep[side]
        s = r["subspace"]
        out.write(f"Ann_{side[0].upper()}: dim {s.dim}\n")
        for b in s.basis:
            out.write("  (" + ", ".join(_vec(b)) + ")\n")
        if r["ideal"]:
            out.write("  two-sided ideal: yes\n")
        else:
            out.write(f"  two-sided ideal: no ({r['witness'][0]} = "
                      f"({', '.join(_vec(r['witness'][1]))}) not in the subspace)\n")
    return EXIT_OK


def cmd_props(args, out) -> int:
    a = _read_algebra(args.file)
    res = property_battery(a, seed=_seed(args), trials=args.trials)
    ok = battery_passed(res)
    if args.json:
        out.write(_dump({"algebra": a.name, "passed": ok, "results": res}))
    else:
        out.write(f"{a.name}\n")
        for key, val in res.items():
            tag = ("PASS" if val else "FAIL") if key in REQUIRED else "info"
            out.write(f"  [{tag}] {key}: {_jsonable(val)}\n")
    return EXIT_OK if ok else EXIT_FAIL


def _parse_param(text: str):
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise InputError(f"--param expects NAME=VALUE, got {text!r}")
    try:
        return name, parse_rational(value)
    except AlgebraFormatError:
        raise InputError(f"--param {name}: malformed rational {value!r}") from None


def cmd_catalog(args, out) -> int:
    if args.catalog_cmd == "list":
        ids = catalog.list_entries()
        if args.json:
            out.write(_dump([{"id": i, "dim": catalog.get_entry(i).dim,
                              "params": list(catalog.get_entry(i).params),
                              "constraints": list(catalog.get_entry(i).param_constraints),
                              "table_status": catalog.get_entry(i).table_status} for i in ids]))
        else:
            for i in ids:
                e = catalog.get_entry(i)
                extra = f"  params: {', '.join(e.params)}" if e.params else ""
                if e.param_constraints:
                    extra += f" ({', '.join(e.param_constraints)})"
                flag = "  [flagged]" if e.table_status == "flagged" else ""
                out.write(f"{i}  dim {e.dim}{extra}{flag}\n")
        return EXIT_OK
    if args.catalog_cmd == "show":
        bindings = dict(_parse_param(p) for p in args.param)
        try:
            a = catalog.instantiate(args.id, bindings)
        except catalog.CatalogError as exc:
            raise InputError(str(exc)) from None
        out.write(emit_algebra(a))
        return EXIT_OK
    fmt = "json" if args.json else args.format
    rows = report.build_rows()
    out.write(report.generate_report(fmt, rows))
    return EXIT_FAIL if any(r.is_failure for r in rows) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized checks (default: $ZINBIEL_SEED or 0)")

    p = argparse.ArgumentParser(prog="zinbiel", parents=[common],
                                description="Exact inner derivations of Zinbiel algebras.")
    sub = p.add_subparsers(dest="cmd", required=True)

    for name, fn, text in (("check", cmd_check, "verify the Zinbiel identity"),
                           ("inner", cmd_inner, "symbolic ad_w, Inn basis and dimension"),
                           ("der", cmd_der, "derivation algebra basis and dimension"),
                           ("ann", cmd_ann, "annihilators and ideal checks"),
                           ("props", cmd_props, "full property battery")):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("file", help="algebra document, or - for stdin")
        sp.set_defaults(func=fn)
        if name == "props":
            sp.add_argument("--trials", type=int, default=25, help="random linearity trials")

    cat = sub.add_parser("catalog", parents=[common], help="built-in classification")
    csub = cat.add_subparsers(dest="catalog_cmd", required=True)
    csub.add_parser("list", parents=[common])
    show = csub.add_parser("show", parents=[common], help="emit an algebra document")
    show.add_argument("id")
    show.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    rep = csub.add_parser("report", parents=[common], help="recompute the reference tables")
    rep.add_argument("--format", choices=sorted(report.RENDERERS), default="table")
    cat.set_defaults(func=cmd_catalog)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.json = getattr(args, "json", False)
    try:
        if getattr(args, "trials", 1) < 1:
            raise InputError("--trials must be at least 1")
        return args.func(args, out)
    except InputError as exc:
        print(f"zinbiel: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
