"""Command-line interface: ``gqkit construct | verify | symmetry | sieve``.

Exit codes: 0 success, 1 validation failure, 2 I/O or parse failure,
3 sieve discrepancies.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .constructions import DEFAULT_SIZE_CAP, FAMILIES, classical_gq, regular_hyperoval, t2_star
from .documents import (
    ClaimedOrderError,
    DocumentError,
    FORMAT_VERSION,
    GeometryDocument,
    GroupDocument,
    dumps,
    load_geometry,
    load_group,
    write_json,
)
from .forms import ResourceCapError
from .geometry import GQAxiomError, incidence_graph, verify_gq
from .perm import DEFAULT_SEED
from .sieve import order_equation, parameter_feasible, pbounds_check, replicate_table, table_ids
from .symmetry import (
    CollineationError,
    CollineationGroup,
    antiflags,
    flags,
    induced_collineations,
    local_arc_orbits,
    pair_orbit,
)

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_DISCREPANCY = 0, 1, 2, 3


class CLIError(Exception):
    def __init__(self, code: int, message: str, detail=None):
        super().__init__(message)
        self.code = code
        self.detail = detail


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit(args, obj, text):
    _out(dumps(obj) if args.json else text)


# -- construct -----------------------------------------------------------------


def cmd_construct(args) -> int:
    cap = args.cap if args.cap is not None else DEFAULT_SIZE_CAP
    try:
        if args.t2star:
            Q = t2_star(regular_hyperoval(args.q))
            name = f"T2*(O), q={args.q}"
        else:
            Q = classical_gq(args.family, args.q, size_cap=cap)
            name = f"{args.family}({args.q})"
    except ResourceCapError as exc:
        raise CLIError(EXIT_INVALID, f"resource cap: {exc}") from None
    except GQAxiomError as exc:
        raise CLIError(EXIT_INVALID, str(exc), {"code": exc.code, "witness": exc.witness}) from None
    except ValueError as exc:
        raise CLIError(EXIT_INVALID, str(exc)) from None
    doc = GeometryDocument.from_structure(Q)
    if args.output:
        _write(args.output, doc.to_json())
    if args.group_output:
        G = induced_collineations(Q)
        _write(args.group_output, GroupDocument.from_group(G).to_json())
    s, t = Q.order
    summary = {"format_version": FORMAT_VERSION, "geometry": name, "order": [s, t],
               "points": Q.num_points, "lines": Q.num_lines}
    _emit(args, summary, f"{name}: order ({s},{t}), {Q.num_points} points, {Q.num_lines} lines")
    return EXIT_OK


def _write(path, obj):
    try:
        write_json(path, obj)
    except OSError as exc:
        raise CLIError(EXIT_IO, f"cannot write {path}: {exc.strerror or exc}") from None


# -- verify --------------------------------------------------------------------


def _load_geometry(path):
    doc = load_geometry(path)
    try:
        return doc, doc.structure()
    except ValueError as exc:
        raise DocumentError(f"{path}: {exc}") from None


def cmd_verify(args) -> int:
    doc, inc = _load_geometry(args.path)
    try:
        Q = verify_gq(inc, require_thick=not args.allow_thin)
    except GQAxiomError as exc:
        raise CLIError(EXIT_INVALID, f"axiom violation {exc}", {"code": exc.code, "witness": exc.witness}) from None
    s, t = Q.order
    P, L = Q.num_points, Q.num_lines
    checks = [
        {"name": "points", "expected": (s + 1) * (s * t + 1), "actual": P},
        {"name": "lines", "expected": (t + 1) * (s * t + 1), "actual": L},
    ]
    if doc.order is not None and tuple(doc.order) != (s, t):
        raise CLIError(EXIT_INVALID, f"document claims order {tuple(doc.order)}, verified order is ({s},{t})")
    report = {"format_version": FORMAT_VERSION, "ok": True, "order": [s, t], "points": P, "lines": L,
              "checks": checks}
    text = [f"({s},{t}), OK"]
    text += [f"  {c['name']}: {c['actual']} = {c['expected']}" for c in checks]
    _emit(args, report, "\n".join(text))
    return EXIT_OK


# -- symmetry ------------------------------------------------------------------


def _parse_test(text):
    if text in ("flag", "antiflag"):
        return text, None
    if text.startswith("local-arc="):
        try:
            s = int(text.split("=", 1)[1])
        except ValueError:
            s = -1
        if 1 <= s <= 4:
            return "local-arc", s
    raise argparse.ArgumentTypeError(f"test must be flag, antiflag or local-arc=S with 1 <= S <= 4, got {text!r}")


def cmd_symmetry(args) -> int:
    kind, s = args.test
    _, inc = _load_geometry(args.geometry)
    gdoc = load_group(args.group)
    P, L = inc.num_points, inc.num_lines
    if gdoc.degree != P + L:
        raise CLIError(EXIT_INVALID, f"group degree {gdoc.degree} does not match {P} points + {L} lines")
    try:
        G = CollineationGroup(inc, gdoc.generators, seed=args.seed)
    except CollineationError as exc:
        raise CLIError(EXIT_INVALID, f"not a collineation group: {exc}") from None
    if gdoc.order is not None and G.order() != gdoc.order:
        raise CLIError(EXIT_INVALID, f"claimed order {gdoc.order}, computed {G.order()}")
    report = {"format_version": FORMAT_VERSION, "test": args.test_text, "group_order": G.order()}
    if kind in ("flag", "antiflag"):
        pairs = flags(inc) if kind == "flag" else antiflags(inc)
        orbit = len(pair_orbit(G, inc, pairs[0])) if pairs else 0
        ok = orbit == len(pairs)
        report.update(result=ok, orbit=orbit, total=len(pairs))
        text = f"{kind}-transitive: {str(ok).lower()} (orbit {orbit}/{len(pairs)})"
    else:
        try:
            rows = local_arc_orbits(G, incidence_graph(inc), s)
        except ValueError as exc:
            raise CLIError(EXIT_INVALID, str(exc)) from None
        ok = all(o == n for _, o, n in rows)
        report.update(result=ok, s=s, vertex_orbits=[{"vertex": v, "orbit": o, "arcs": n} for v, o, n in rows])
        parts = [f"{'point' if v < P else 'line'} {v if v < P else v - P}: {o}/{n}" for v, o, n in rows]
        text = f"locally {s}-arc-transitive: {str(ok).lower()} ({'; '.join(parts)})"
    _emit(args, report, text)
    return EXIT_OK


# -- sieve ---------------------------------------------------------------------


def _superscript_square(root):
    return f"{root}²"


def cmd_sieve(args) -> int:
    if args.table:
        try:
            rep = replicate_table(args.table)
        except KeyError as exc:
            raise CLIError(EXIT_INVALID, exc.args[0]) from None
        obj = {"format_version": FORMAT_VERSION, **rep.as_dict()}
        _emit(args, obj, rep.render())
        return rep.exit_code
    if args.order is not None:
        if args.t is None:
            raise CLIError(EXIT_INVALID, "--order needs --t")
        if args.order < 1 or args.t < 1:
            raise CLIError(EXIT_INVALID, "N and t must be positive")
        sol = order_equation(args.order, args.t)
        bounds = pbounds_check(args.order, args.t)
        if sol.root is None:
            text = f"Δ={sol.delta} not a square, no GQ"
        elif sol.s is None:
            text = f"Δ={sol.delta}={_superscript_square(sol.root)}, s non-integral, no GQ"
        else:
            text = f"Δ={sol.delta}={_superscript_square(sol.root)}, s={sol.s}"
        text += "\npoint bounds (t+1)^2 < N < (t+1)^3: " + ("hold" if bounds.ok else "fail")
        obj = {"format_version": FORMAT_VERSION, "N": sol.N, "t": sol.t, "delta": sol.delta,
               "square_root": sol.root, "s": sol.s, "bounds": bounds.as_dict()}
        _emit(args, obj, text)
        return EXIT_OK
    s, t = args.pair
    v = parameter_feasible(s, t)
    lines = [f"order ({s},{t}): {'feasible' if v.ok else 'infeasible'}"]
    for c in v.checks:
        w = f" {c.witness}" if c.witness else ""
        lines.append(f"  {c.name}: {'pass' if c.outcome else 'FAIL'}{w}")
    _emit(args, {"format_version": FORMAT_VERSION, "s": s, "t": t, **v.as_dict()}, "\n".join(lines))
    return EXIT_OK


def _pair(text):
    try:
        s, t = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected s,t, got {text!r}") from None
    if s < 1 or t < 1:
        raise argparse.ArgumentTypeError("s and t must be positive")
    return s, t


def _u64(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


# -- entry point -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CLIError(EXIT_IO, message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_u64, default=DEFAULT_SEED, help="seed for the group engine")
    common.add_argument("--cap", type=int, default=None, help="resource cap override (incidences)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="gqkit", description="Generalized quadrangles: construction, verification, symmetry and "
                                          "parameter sieving.", parents=[common])
    p.add_argument("--version", action="version", version=f"gqkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="build a quadrangle and write it as JSON")
    which = c.add_mutually_exclusive_group(required=True)
    which.add_argument("--family", choices=sorted(FAMILIES))
    which.add_argument("--t2star", action="store_true", help="T2*(O) for the regular hyperoval")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--output", "-o", help="geometry document path")
    c.add_argument("--group-output", help="also write the collineation group document")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check the quadrangle axioms for a geometry document")
    v.add_argument("path")
    v.add_argument("--allow-thin", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("symmetry", parents=[common], help="transitivity tests for a collineation group")
    s.add_argument("geometry")
    s.add_argument("group")
    s.add_argument("--test", dest="test_text", required=True, help="flag, antiflag or local-arc=S")
    s.set_defaults(func=cmd_symmetry)

    sv = sub.add_parser("sieve", parents=[common], help="parameter feasibility and table recomputation")
    sel = sv.add_mutually_exclusive_group(required=True)
    sel.add_argument("--table", help=f"one of {', '.join(table_ids())} (optionally prefixed tbl:)")
    sel.add_argument("--order", type=int, help="point count N for the order equation")
    sel.add_argument("--pair", type=_pair, help="order s,t to test")
    sv.add_argument("--t", type=int, help="t for --order")
    sv.set_defaults(func=cmd_sieve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "symmetry":
            try:
                args.test = _parse_test(args.test_text)
            except argparse.ArgumentTypeError as exc:
                raise CLIError(EXIT_IO, str(exc)) from None
        return args.func(args)
    except CLIError as exc:
        _report_error(exc.code, str(exc), exc.detail)
        return exc.code
    except (DocumentError, ClaimedOrderError) as exc:
        code = EXIT_INVALID if isinstance(exc, ClaimedOrderError) else EXIT_IO
        _report_error(code, str(exc))
        return code


def _report_error(code, message, detail=None):
    sys.stderr.write(f"error: {message}\n")
    if detail is not None:
        sys.stderr.write(dumps({"error": message, "exit_code": code, **detail}))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
