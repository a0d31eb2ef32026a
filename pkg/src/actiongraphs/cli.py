"""Command-line front end.

Exit codes: 0 success or feasible, 1 infeasible, contradiction or failed
check, 2 usage or size errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .axioms import check_axioms, gate
from .builders import GraphFamily, build_classic, build_fuss, build_super
from .errors import ActionGraphError, SizeLimitExceeded
from .graph import DEFAULT_SIZE_LIMIT, expand, to_dot
from .inference import InferenceReport, certify_infeasible, infer_rules
from .ntables import compute_ntable, verify_conjectures
from .sequences import SequenceSpec, catalan_triangle, sequence_values

_NAMED = {
    "catalan": "catalan",
    "fuss": "fuss",
    "row": "triangle_row",
    "triangle-row": "triangle_row",
    "column": "triangle_column",
    "triangle-column": "triangle_column",
    "diagonal": "triangle_diagonal",
    "triangle-diagonal": "triangle_diagonal",
    "internal-triangles": "internal_triangles",
    "super": "super_catalan_row",
    "super-catalan-row": "super_catalan_row",
}


class UsageError(Exception):
    pass


def parse_sequence(text: str) -> SequenceSpec:
    """Named family (``fuss:2``, ``row:4``, ``internal-triangles`` ...),
    an inline comma list, or a file with one integer per line."""
    text = text.strip()
    if text.startswith("@") or (not text[:1].isdigit() and Path(text).is_file()):
        path = Path(text.lstrip("@"))
        try:
            lines = path.read_text(encoding="utf-8").split()
        except OSError as exc:
            raise UsageError(f"cannot read sequence file {path}: {exc}") from exc
        return _explicit(lines, str(path))
    if text[:1].isdigit() or text.startswith("-"):
        return _explicit(text.replace(" ", "").split(","), text)
    name, _, param = text.partition(":")
    kind = _NAMED.get(name.lower().replace("_", "-"))
    if kind is None:
        kind = name if name in _NAMED.values() else None
    if kind is None:
        raise UsageError(f"unknown sequence {text!r}")
    try:
        return SequenceSpec(kind, int(param) if param else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _explicit(items: Sequence[str], source: str) -> SequenceSpec:
    try:
        values = [int(item) for item in items if item]
        return SequenceSpec.explicit(values)
    except ValueError as exc:
        raise UsageError(f"bad sequence {source!r}: {exc}") from exc


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(row[i]) for row in rows if i < len(row)) for i in range(max(map(len, rows)))]
    return "\n".join(
        "  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows
    )


def _family(kind: str, n: int, k: int | None) -> tuple[GraphFamily, SequenceSpec]:
    if kind == "classic":
        return build_classic(n), SequenceSpec("catalan")
    if kind == "fuss":
        if k is None:
            raise UsageError("fuss needs --k")
        return build_fuss(n, k), SequenceSpec("fuss", k)
    return build_super(n), SequenceSpec("super_catalan_row", 0)


def cmd_seq(args: argparse.Namespace) -> int:
    spec = parse_sequence(args.family)
    print(" ".join(str(v) for v in sequence_values(spec, args.count)))
    return 0


def cmd_triangle(args: argparse.Namespace) -> int:
    n_rows = args.rows
    if args.ab:
        rows = [["a\\b"] + [str(b) for b in range(n_rows)]]
        for a in range(1, n_rows + 1):
            rows.append([str(a)] + [f"{catalan_triangle(a - 1, b)}/{a - b}" for b in range(a)])
    else:
        rows = [["n\\k"] + [str(k) for k in range(n_rows)]]
        for n in range(n_rows):
            rows.append([str(n)] + [str(catalan_triangle(n, k)) for k in range(n + 1)])
    print(_table(rows))
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    fam, _ = _family(args.kind, args.n, args.k)
    if args.format == "json":
        print(json.dumps(fam.to_json(expanded=args.expand, limit=args.size_limit), indent=1))
    elif args.format == "dot":
        g = fam.graphs[-1]
        print(to_dot(expand(g, args.size_limit) if args.expand else g), end="")
    else:
        rows = [["step", "new", "nodes", "vertices"]]
        for n, (g, new) in enumerate(zip(fam.graphs, fam.new_counts())):
            rows.append([str(n), str(new), str(len(g)), str(g.size)])
        print(_table(rows))
    return 0


def cmd_check_axioms(args: argparse.Namespace) -> int:
    fam, spec = _family(args.kind, args.n, args.k)
    if args.seq:
        spec = parse_sequence(args.seq)
    report = check_axioms(fam, spec, args.method, args.size_limit)
    if args.json:
        print(json.dumps(report.to_json(), indent=1, sort_keys=True))
        return 0 if report.passed else 1
    a1 = report.axiom1
    print(f"axiom 1 ({spec.name}): {a1.status}")
    for step, want, got in a1.rows:
        mark = "" if want == got else "  <-- mismatch"
        print(f"  step {step}: expected {want}, added {got}{mark}")
    for r2, r3 in zip(report.axiom2, report.axiom3):
        extra = ""
        if r2.flagged:
            extra = f" ({len(r2.flagged)} matches with unexpected k)"
        if r2.counterexample is not None:
            extra = f" (vertex {r2.counterexample} matches no earlier graph)"
        print(f"G_{r2.n}: axiom 2 {r2.status}{extra}; axiom 3 {r3.status}")
    print("all axioms pass" if report.passed else "axiom check failed")
    return 0 if report.passed else 1


def cmd_gate(args: argparse.Namespace) -> int:
    spec = parse_sequence(args.seq)
    report = gate(spec, 3)
    if args.json:
        print(json.dumps(report.to_json(), indent=1, sort_keys=True))
    else:
        print(f"{spec.name}: {report.describe()}")
    return 0 if report.feasible else 1


def _render_inference(report: InferenceReport) -> str:
    lines = ["sequence: " + ",".join(map(str, report.sequence))]
    rows = [["step", "forced", "available", "new rule"]]
    for t in report.trace:
        rule = "-" if t.new_rule is None else f"r({t.new_rule[0]}) = {t.new_rule[1]}"
        rows.append([str(t.step), str(t.forced), str(t.available), rule])
    lines.append(_table(rows))
    if report.outcome == "contradiction":
        last = report.trace[-1]
        parts = " + ".join(str(c.added) for c in last.contributions) or "0"
        lines.append(f"forced at step {last.step}: {parts}")
        for c in last.contributions:
            lines.append(
                f"  length {c.length} from label {c.source_label}: "
                f"{c.paths} paths x {c.rule} = {c.added}"
            )
    lines.append(report.describe())
    return "\n".join(lines)


def cmd_infer(args: argparse.Namespace) -> int:
    spec = parse_sequence(args.seq)
    n_max = args.n_max
    if n_max is None:
        n_max = len(spec.values) - 1 if spec.kind == "explicit" else 10
    if args.certify:
        result = certify_infeasible(spec, n_max, args.integral)
    else:
        result = infer_rules(spec, n_max, args.integral)
    if args.json:
        print(json.dumps(result.to_json(), indent=1, sort_keys=True))
    elif isinstance(result, InferenceReport):
        print(_render_inference(result))
    else:
        print(f"{spec.name}: {result.describe()}")
    ok = result.consistent if isinstance(result, InferenceReport) else result.feasible
    return 0 if ok else 1


def cmd_ntable(args: argparse.Namespace) -> int:
    table = compute_ntable(build_super(args.n), args.n)
    if args.csv:
        print(table.to_csv(), end="")
    elif args.json:
        print(json.dumps(table.to_json()))
    else:
        rows = [[f"n={table.n}"] + [f"v={v}" for v in range(table.n + 1)]]
        rows += [[f"l={length}"] + [str(x) for x in row] for length, row in enumerate(table.entries)]
        print(_table(rows))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_conjectures(args.n_max)
    if args.json:
        print(json.dumps(report.to_json(), indent=1, sort_keys=True))
    else:
        for s in report.steps:
            status = "ok" if s.table_recurrence and s.next_super else "FAIL"
            print(
                f"{s.n}-table -> {s.n + 1}-table: recurrence {'ok' if s.table_recurrence else 'FAIL'}, "
                f"next super {s.predicted_super} vs S(0,{s.n + 1}) = {s.actual_super} [{status}]"
            )
            if s.discrepancy:
                n1, length, v, predicted, actual = s.discrepancy
                print(f"  first discrepancy: n={n1} l={length} v={v} predicted {predicted}, actual {actual}")
        print(f"note: {report.note}")
        print("all transitions verified" if report.passed else "verification FAILED")
    return 0 if report.passed else 1


def cmd_export(args: argparse.Namespace) -> int:
    fam, _ = _family(args.kind, args.n, args.k)
    if args.format == "json":
        text = json.dumps(fam.to_json(expanded=args.expand, limit=args.size_limit), indent=1)
    elif args.format == "dot":
        g = fam.graphs[-1]
        text = to_dot(expand(g, args.size_limit) if args.expand else g)
    else:
        if args.kind != "super":
            raise UsageError("csv export is only defined for the super family n-table")
        text = compute_ntable(fam, args.n).to_csv()
    Path(args.output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    print(f"wrote {args.output}", file=sys.stderr)
    return 0


def _nat(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = _nat(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="actiongraphs",
        description="Action graphs for Catalan-type sequences.",
    )
    parser.add_argument(
        "--size-limit",
        type=_positive,
        default=DEFAULT_SIZE_LIMIT,
        help="maximum number of vertices of an expanded graph",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print terms of a sequence")
    p.add_argument("family", help="e.g. catalan, fuss:2, row:4, column:1, diagonal:2, "
                   "internal-triangles, super:0, or 1,4,14,48")
    p.add_argument("--count", type=_positive, default=10)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("triangle", help="print Catalan's triangle or the (a,b) fraction table")
    p.add_argument("--rows", type=_positive, default=9)
    p.add_argument("--ab", action="store_true", help="print cat(a,b) as C(a-1,b)/(a-b)")
    p.set_defaults(func=cmd_triangle)

    def family_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("kind", choices=["classic", "fuss", "super"])
        p.add_argument("--k", type=_positive, default=None, help="Fuss-Catalan parameter")
        p.add_argument("--n", type=_nat, required=True, help="last step to build")

    p = sub.add_parser("build", help="build a graph family")
    family_args(p)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--expand", action="store_true", help="emit expanded graphs")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check-axioms", help="check axioms 1-3 on a built family")
    family_args(p)
    p.add_argument("--seq", help="sequence for axiom 1 (default: the family's own)")
    p.add_argument("--method", choices=["expanded", "condensed"], default="expanded")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_axioms)

    p = sub.add_parser("gate", help="necessary-condition gate for a sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("infer", help="infer path-length rules for a sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--n-max", type=_nat, default=None)
    p.add_argument("--integral", action="store_true", help="require integer rules")
    p.add_argument("--certify", action="store_true", help="run the gate first")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("ntable", help="print the n-table of the super Catalan graph G_n")
    p.add_argument("--n", type=_nat, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ntable)

    p = sub.add_parser("verify", help="check the n-table recurrences up to n-max")
    p.add_argument("--n-max", type=_nat, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a family or n-table to a file")
    family_args(p)
    p.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    p.add_argument("--expand", action="store_true")
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SizeLimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ActionGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
