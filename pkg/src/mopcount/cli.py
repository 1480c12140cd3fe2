"""Command-line workbench: enumerate, count, construct, decompose, verify, scan.

Reports go to stdout as a table; --csv / --jsonl write delimited files and
render a companion .png figure next to them (suppress with --no-fig).
Verification and scan commands exit 0 only when every record passes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import experiments
from .constructions import EarPlacement, eared_fan, fan, p5_extremal, p6_extremal
from .crossing import count_crossing, decompose_count
from .enumeration import (
    CanonicalCode,
    canonical_code,
    enumerate_classes,
    enumerate_labeled,
    triangulation_from_code,
)
from .graphs import (
    SimpleGraph,
    count_p4_via_degrees,
    count_paths,
    count_paths_through,
    format_graph_text,
    parse_graph_text,
)
from .report import ExperimentRecord, all_passed, records_table, write_csv, write_jsonl
from .triangulations import (
    Triangulation,
    format_triangulation_text,
    parse_triangulation_text,
    recognize_mop_labeled,
    to_graph,
)


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph_file(path: str) -> tuple[SimpleGraph, Triangulation | None]:
    """Read either repo text format.

    A ';' on the first line marks the triangulation format; otherwise the
    graph format (vertex count, then 0-based edge pairs) is assumed.
    """
    text = Path(path).read_text()
    first = text.strip().splitlines()[0] if text.strip() else ""
    if ";" in first:
        t = parse_triangulation_text(text)
        return to_graph(t), t
    return parse_graph_text(text), None


def _emit_records(records: list[ExperimentRecord], args) -> int:
    print(records_table(records))
    wrote = []
    if getattr(args, "csv", None):
        wrote.append(write_csv(records, args.csv))
    if getattr(args, "jsonl", None):
        wrote.append(write_jsonl(records, args.jsonl))
    if wrote and not getattr(args, "no_fig", False):
        from .figures import figure_path_for, render_records_figure

        fig = render_records_figure(records, figure_path_for(wrote[0]))
        wrote.append(fig)
    for p in wrote:
        print(f"wrote {p}")
    ok = all_passed(records)
    print(f"{sum(r.passed for r in records)}/{len(records)} records pass")
    return 0 if ok else 1


# -- subcommands ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    lines = []
    if args.classes:
        for t in enumerate_classes(args.n):
            lines.append(f"{canonical_code(t).hex()}\t{format_triangulation_text(t)}")
    else:
        for t in enumerate_labeled(args.n):
            lines.append(format_triangulation_text(t))
    _write_or_print("\n".join(lines) + "\n", args.out)
    if args.out:
        print(f"wrote {len(lines)} triangulations to {args.out}")
    return 0


def cmd_count(args) -> int:
    g, _ = _load_graph_file(args.graph)
    if args.formula:
        if args.k not in (None, 4):
            raise ValueError("--formula computes the 4-vertex path count")
        print(count_p4_via_degrees(g))
        return 0
    if args.k is None:
        raise ValueError("--k is required unless --formula is given")
    if args.through is not None:
        print(count_paths_through(g, args.through, args.k))
    else:
        print(count_paths(g, args.k))
    return 0


def cmd_extremal(args) -> int:
    value, witnesses = experiments.f_op(args.n, args.k)
    print(f"f_op({args.n}, P{args.k}) = {value}")
    for hex_code in witnesses:
        t = triangulation_from_code(CanonicalCode.from_hex(hex_code))
        print(f"  witness {hex_code}  {format_triangulation_text(t)}")
    return 0


def cmd_construct(args) -> int:
    family = args.family
    if family == "fan":
        t = fan(args.n)
    elif family == "p5":
        t = p5_extremal(args.n)
    elif family == "p6":
        t = p6_extremal(args.n)
    elif family == "eared-fan":
        if args.ears:
            ears = EarPlacement.of(int(p) for p in args.ears.split(","))
        else:
            ears = EarPlacement.spread(args.n)
        t = eared_fan(args.n, ears)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown family {family}")
    text = (
        format_graph_text(to_graph(t))
        if args.as_graph
        else format_triangulation_text(t) + "\n"
    )
    _write_or_print(text, args.out)
    return 0


def cmd_decompose(args) -> int:
    g, t = _load_graph_file(args.graph)
    a, b = (int(x) for x in args.chord.split(","))
    if t is None:
        t, cycle = recognize_mop_labeled(g)
        label = {v: i + 1 for i, v in enumerate(cycle)}
        chord = (label[a], label[b])
        note = f"graph vertices {a},{b} sit at polygon labels {chord[0]},{chord[1]}"
    else:
        chord = (a, b)
        note = "chord given in polygon labels"
    side1, side2, crossing, total = decompose_count(t, chord, args.k)
    payload = {
        "chord": sorted(chord),
        "k": args.k,
        "side1": side1,
        "side2": side2,
        "crossing": crossing,
        "total": total,
        "note": note,
    }
    if args.k == 5:
        payload["crossing_by_type"] = count_crossing(t, chord).as_dict()
    print(json.dumps(payload, indent=2))
    return 0


def cmd_verify(args) -> int:
    lo, hi = args.n_min, args.n_max
    if args.suite == "p3":
        records = experiments.verify_p3_suite(range(lo or 3, (hi or 12) + 1))
    elif args.suite == "p4":
        records = experiments.verify_p4_suite(range(lo or 7, (hi or 10) + 1))
    elif args.suite == "per-vertex":
        records = experiments.per_vertex_bound_check(range(lo or 9, (hi or 10) + 1))
    else:  # crossing
        records = experiments.crossing_suite(range(lo or 4, (hi or 9) + 1))
    return _emit_records(records, args)


def cmd_scan(args) -> int:
    n_list = [int(x) for x in args.n_list.split(",")]
    records = experiments.asymptotic_scan(args.family, args.k, n_list)
    return _emit_records(records, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mopcount",
        description="Counting workbench for short paths in maximal outerplanar graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream polygon triangulations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classes", action="store_true", help="one representative per"
                   " isomorphism class, prefixed with its canonical code hex")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count paths in a graph file")
    p.add_argument("--graph", required=True, help="graph text file (or"
                   " triangulation text; detected by the ';')")
    p.add_argument("--k", type=int, help="path size in vertices")
    p.add_argument("--through", type=int, help="count only paths containing"
                   " this 0-based vertex")
    p.add_argument("--formula", action="store_true",
                   help="4-vertex path count from the degree formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("extremal", help="exhaustive maximum over all"
                       " n-vertex maximal outerplanar graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("construct", help="build a named family member")
    p.add_argument("family", choices=["fan", "p5", "eared-fan", "p6"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ears", help="comma-separated gap indices (eared-fan)")
    p.add_argument("--as-graph", action="store_true",
                   help="emit graph text format instead of triangulation text")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", help="split a path count across a chord")
    p.add_argument("--graph", required=True)
    p.add_argument("--chord", required=True, metavar="A,B",
                   help="0-based graph vertices (graph file) or 1-based"
                   " polygon labels (triangulation file)")
    p.add_argument("--k", type=int, default=5)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=["p3", "p4", "per-vertex", "crossing"])
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--csv", help="write CSV report (renders a .png next to it)")
    p.add_argument("--jsonl", help="write JSONL report")
    p.add_argument("--no-fig", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="exact counts on a construction family")
    p.add_argument("--family", required=True,
                   choices=["fan", "p5", "eared-fan", "p6"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-list", required=True, metavar="N1,N2,...")
    p.add_argument("--csv", help="write CSV report (renders a .png next to it)")
    p.add_argument("--jsonl", help="write JSONL report")
    p.add_argument("--no-fig", action="store_true")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
