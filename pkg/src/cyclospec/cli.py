"""Command line front end.

Exit codes: 0 success, 1 verification failure or table mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import sequences, spectra
from .cayley import (
    MAX_ISOMORPHISM_VERTICES,
    GroupParseError,
    cayley_graph,
    cycle_graph,
    format_group,
    isomorphic_small,
    laplacian_of,
    parse_group,
)
from .oracle import charpoly_exact
from .polyalg import IntPoly, compose

SCHEMA = "cyclospec/1"
FORMATS = ("plain", "markdown", "csv", "json")


class UsageError(Exception):
    pass


def poly_json(p, var="a"):
    return {"var": var, "coeffs": [str(c) for c in p.coeffs]}


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=False)


def _num(v):
    v = round(float(v), 12)
    return 0.0 if v == 0 else v


def _csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _markdown(header, rows):
    lines = ["| " + " | ".join(map(str, header)) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(map(str, r)) + " |" for r in rows]
    return "\n".join(lines)


# -- tables ---------------------------------------------------------------


def cmd_tables(args, out, err):
    try:
        rows = sequences.coefficient_table(args.which, args.max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    width = args.max + 1
    columns = ["1", "a"] + [f"a^{i}" for i in range(2, width)]
    if args.format == "plain":
        text = sequences.format_table(rows)
    elif args.format == "markdown":
        text = _markdown(["", *columns], [[label, *coeffs] for label, coeffs in rows])
    elif args.format == "csv":
        text = _csv([["row", *columns]] + [[label, *coeffs] for label, coeffs in rows])
    else:
        text = _dump({
            "schema": SCHEMA,
            "table": args.which,
            "columns": columns,
            "rows": [{"label": label, "coeffs": [str(c) for c in coeffs]} for label, coeffs in rows],
        })
    print(text, file=out)
    if args.check:
        bad = sequences.table_mismatches(args.which, rows)
        for n, got, expected in bad:
            print(f"mismatch {args.which}_{n}: got {got}, expected {expected}", file=err)
        if bad:
            return 1
        print(f"{args.which} table matches the reference rows", file=err)
    return 0


# -- charpoly -------------------------------------------------------------


def _rec_poly(n, var):
    p = sequences.A(n)
    if var == "a":
        return p
    q = compose(p, IntPoly((2, -1)))
    return -q if n % 2 else q


def _det_poly(n, var):
    cp = charpoly_exact(laplacian_of(cycle_graph(n)))
    return cp.in_a if var == "a" else cp.in_lambda


def cmd_charpoly(args, out, err):
    n = args.n
    if n < 1:
        raise UsageError(f"charpoly needs n >= 1, got {n}")
    methods = ["rec", "det"] if args.method == "both" else [args.method]
    polys = {m: (_rec_poly if m == "rec" else _det_poly)(n, args.var) for m in methods}
    agree = None
    status = 0
    if args.method == "both":
        agree = polys["rec"] == polys["det"]
        if not agree:
            if n <= 2:
                print(f"warning: A_{n} is a formal member of the sequence and is not "
                      f"the characteristic polynomial of the Z_{n} Laplacian", file=err)
            else:
                print(f"error: recurrence and determinant disagree for n={n}", file=err)
                status = 1
    label = "lambda" if args.var == "lambda" else "a"
    if args.format == "json":
        print(_dump({
            "schema": SCHEMA, "n": n, "var": label, "method": args.method,
            "polynomials": {m: poly_json(p, label) for m, p in polys.items()},
            "agree": agree,
        }), file=out)
    elif args.format == "csv":
        rows = [["method", "degree", "coeffs_ascending"]]
        rows += [[m, p.degree, " ".join(map(str, p.coeffs))] for m, p in polys.items()]
        print(_csv(rows), file=out)
    elif args.format == "markdown":
        print(_markdown(["method", "polynomial"], [[m, f"`{p.format(label)}`"] for m, p in polys.items()]), file=out)
    else:
        for m, p in polys.items():
            print(f"{m}: {p.format(label)}", file=out)
    return status


# -- spectrum -------------------------------------------------------------


def _parse(text):
    try:
        return parse_group(text)
    except (GroupParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def spectrum_records(group, gens):
    """Exact rotation records for plain cycles, numeric records otherwise."""
    if len(group.orders) == 1 and set(gens) == set(group.default_generators()):
        return spectra.spectrum_records(group.orders[0]), True
    s = spectra.group_spectrum(group, gens)
    return [{"rotation": None, "lambda": _num(v), "multiplicity": m} for v, m in s.entries], False


def cmd_spectrum(args, out, err):
    group, gens = _parse(args.group)
    records, exact = spectrum_records(group, gens)
    for r in records:
        r["lambda"] = _num(r["lambda"])
    name = format_group(group, gens)
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "group": name, "exact": exact, "spectrum": records}), file=out)
    elif args.format == "csv":
        rows = [["rotation", "lambda", "multiplicity"]]
        rows += [[r["rotation"] or "", repr(r["lambda"]), r["multiplicity"]] for r in records]
        print(_csv(rows), file=out)
    elif args.format == "markdown":
        print(_markdown(["lambda", "multiplicity", "rotation"],
                        [[f"{r['lambda']:.12g}", r["multiplicity"], r["rotation"] or "-"] for r in records]), file=out)
    else:
        print(f"spectrum of {name} ({'exact rotations' if exact else 'numeric'}):", file=out)
        for r in records:
            rot = f"  rotation {r['rotation']}" if r["rotation"] else ""
            print(f"  {r['lambda']:.12g}  x{r['multiplicity']}{rot}", file=out)
    return 0


# -- verify ---------------------------------------------------------------


def _grid(*ranges):
    out = [()]
    for r in ranges:
        out = [t + (v,) for t in out for v in r]
    return out


# id -> (checker, {option: (default, minimum)}, tuple builder)
VERIFIERS = {
    "doubling": (sequences.check_doubling, {"n": (50, 1)},
                 lambda o: _grid(range(1, o["n"] + 1))),
    "divisibility": (sequences.check_divisibility, {"n": (20, 1), "k": (10, 1)},
                     lambda o: _grid(range(1, o["n"] + 1), range(1, o["k"] + 1))),
    "composition": (sequences.check_composition, {"k": (12, 1), "n": (12, 1)},
                    lambda o: _grid(range(1, o["k"] + 1), range(1, o["n"] + 1))),
    "addition": (sequences.check_addition, {"n": (40, 2)},
                 lambda o: [(n, p) for n in range(2, o["n"] + 1) for p in range(1, n)]),
    "shifted-addition": (sequences.check_shifted_addition, {"k": (6, 1), "n": (12, 2)},
                         lambda o: [(k, n, p) for k in range(1, o["k"] + 1) for n in range(2, o["n"] + 1)
                                    for p in range(1, n) if k * n - p >= 1]),
    "L-product": (sequences.check_L_product, {"n": (60, 1)},
                  lambda o: [(n, k) for n in range(1, o["n"] + 1) for k in range(1, n + 1)]),
    "L-square": (sequences.check_L_square, {"n": (60, 2)},
                 lambda o: _grid(range(2, o["n"] + 1))),
    "three-term": (sequences.check_three_term, {"n": (200, 1)},
                   lambda o: _grid(range(1, o["n"] + 1))),
    "gcd": (spectra.check_gcd_theorem, {"n": (40, 3), "m": (40, 3)},
            lambda o: _grid(range(3, o["n"] + 1), range(3, o["m"] + 1))),
    "interval": (spectra.check_interval, {"n": (256, 1)},
                 lambda o: _grid(range(1, o["n"] + 1))),
    "lambda24": (spectra.check_lambda2_lambda4, {"n": (200, 2)},
                 lambda o: _grid(range(2, o["n"] + 1))),
    "subgroup": (spectra.check_subgroup_closure, {"n": (24, 3), "k": (8, 1)},
                 lambda o: _grid(range(3, o["n"] + 1), range(1, o["k"] + 1))),
    "spectral-map": (spectra.check_spectral_map_closure, {"n": (32, 3), "m": (16, 1)},
                     lambda o: _grid(range(3, o["n"] + 1), range(1, o["m"] + 1))),
    "iff": (spectra.check_iff_corollary, {"n": (16, 3), "k": (8, 1)},
            lambda o: _grid(range(3, o["n"] + 1), range(1, o["k"] + 1))),
    "complement-example": (spectra.check_complement_example, {}, lambda o: [()]),
}


def run_verification(identity, **bounds):
    """Run the sweep for ``identity``; unspecified bounds take their defaults."""
    if identity not in VERIFIERS:
        raise UsageError(f"unknown identity {identity!r}; choose from {', '.join(VERIFIERS)}")
    check, options, build = VERIFIERS[identity]
    resolved = {}
    for name, (default, minimum) in options.items():
        value = bounds.get(name)
        value = default if value is None else value
        if value < minimum:
            raise UsageError(f"{identity}: --{name} must be >= {minimum}, got {value}")
        resolved[name] = value
    return sequences.sweep(identity, check, build(resolved))


def _json_value(v):
    if isinstance(v, IntPoly):
        return poly_json(v)
    if isinstance(v, tuple):
        return [_json_value(x) for x in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, float):
        return _num(v)
    return str(v)


def report_json(report):
    ce = report.counterexample
    return {
        "schema": SCHEMA,
        "identity": report.identity_id,
        "passed": report.passed,
        "cases": len(report.parameters),
        "parameters": [list(p) for p in report.parameters],
        "counterexample": None if ce is None else {
            "parameters": list(ce.parameters), "lhs": _json_value(ce.lhs), "rhs": _json_value(ce.rhs),
        },
        "notes": list(report.notes),
    }


def cmd_verify(args, out, err):
    report = run_verification(args.identity, n=args.n, k=args.k, m=args.m)
    ce = report.counterexample
    verdict = "PASSED" if report.passed else "FAILED"
    if args.format == "json":
        print(_dump(report_json(report)), file=out)
    elif args.format == "csv":
        rows = [["identity", "passed", "cases", "counterexample"],
                [report.identity_id, report.passed, len(report.parameters), "" if ce is None else ce.parameters]]
        print(_csv(rows), file=out)
    elif args.format == "markdown":
        print(_markdown(["identity", "verdict", "cases"],
                        [[report.identity_id, verdict, len(report.parameters)]]), file=out)
    else:
        if args.verbose:
            for p in report.parameters:
                print(f"  {report.identity_id}{p}", file=out)
        print(f"{report.identity_id}: {verdict} ({len(report.parameters)} cases)", file=out)
        for note in report.notes:
            print(f"  note: {note}", file=out)
    if ce is not None:
        print(f"counterexample at {ce.parameters}:\n  lhs = {ce.lhs}\n  rhs = {ce.rhs}", file=err)
        return 1
    return 0


# -- compare --------------------------------------------------------------


def cmd_compare(args, out, err):
    g1, g2 = _parse(args.group1), _parse(args.group2)
    if g1[0].size != g2[0].size:
        raise UsageError(f"group orders differ: {g1[0].size} vs {g2[0].size}")
    result = spectra.compare_group_spectra(g1, g2)
    graph1, graph2 = cayley_graph(*g1), cayley_graph(*g2)
    iso = None
    if graph1.vertex_count <= MAX_ISOMORPHISM_VERTICES:
        iso = isomorphic_small(graph1, graph2)
    names = [format_group(*g1), format_group(*g2)]
    witness = None if result.witness is None else _num(result.witness)
    if args.format == "json":
        print(_dump({
            "schema": SCHEMA,
            "groups": names,
            "spectra_equal": result.equal,
            "witness": witness,
            "witnesses": [_num(w) for w in result.witnesses],
            "isomorphic": iso,
            "spectra": [[{"lambda": _num(v), "multiplicity": m} for v, m in s.entries]
                        for s in (result.spectrum1, result.spectrum2)],
        }), file=out)
    elif args.format == "csv":
        print(_csv([["group1", "group2", "spectra_equal", "witness", "isomorphic"],
                    [*names, result.equal, "" if witness is None else repr(witness),
                     "" if iso is None else iso]]), file=out)
    elif args.format == "markdown":
        print(_markdown(["group1", "group2", "spectra", "witness", "isomorphic"],
                        [[*names, "equal" if result.equal else "differ",
                          "-" if witness is None else f"{witness:.12g}",
                          "n/a" if iso is None else iso]]), file=out)
    else:
        verdict = "equal" if result.equal else f"differ (witness {witness:.12g})"
        print(f"{names[0]} vs {names[1]}: spectra {verdict}", file=out)
        iso_text = "not checked (too large)" if iso is None else ("isomorphic" if iso else "not isomorphic")
        print(f"graphs: {iso_text}", file=out)
    return 0


# -- entry point ----------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cyclospec",
        description="Characteristic polynomials and Laplacian spectra of cyclic-group Cayley graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("tables", help="coefficient tables of L_n or A_n")
    p.add_argument("which", choices=["L", "A"])
    p.add_argument("--max", type=int, default=None, help="largest index (default 9 for L, 11 for A)")
    p.add_argument("--check", action="store_true", help="compare against the reference rows")
    add_format(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("charpoly", help="characteristic polynomial of the Z_n Laplacian")
    p.add_argument("n", type=int)
    p.add_argument("--var", choices=["a", "lambda"], default="a")
    p.add_argument("--method", choices=["rec", "det", "both"], default="rec")
    add_format(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("spectrum", help="Laplacian spectrum of a Cayley graph, e.g. Z6 or Z2xZ3")
    p.add_argument("group")
    add_format(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run an identity or theorem sweep")
    p.add_argument("identity", help=", ".join(VERIFIERS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--verbose", action="store_true", help="list every parameter tuple")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="compare spectra (and small graphs) of two groups")
    p.add_argument("group1")
    p.add_argument("group2")
    add_format(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "tables" and args.max is None:
        args.max = 9 if args.which == "L" else 11
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
