"""Command line front end: analyze, stratify, cohomology, resolutions.

Pipeline stages talk JSON so each stage can also be fed hand-written data,
e.g. a ConifoldData file with externally computed base cohomology.  All
output is deterministic: the same inputs give byte-identical bytes.

Exit codes: 0 success, 1 input or validation error, 2 incomplete or
inconclusive result.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .cohomology import ConifoldData, cohomology_report, cohomology_report_text
from .cyclo import CyclotomicField
from .errors import GsvError, GsvInputError, IncompleteResultError
from .poly import parse_polynomial, parse_scalar
from .resolutions import build_transition_graph, enumerate_small_resolutions, naive_resolution_count
from .singular import (AnsatzRoots, FloatHomotopy, Kind, SingularityClass, SingularRay,
                       TransversalityReport, UserList, verify_transversal)
from .strata import build_ground_state_variety, strata_report


@dataclass
class SessionConfig:
    """Defaults shared by every subcommand; argparse reads from one instance."""

    root_of_unity_order: int = 5
    candidate_source: str = "ansatz"
    mode: str = "refined"
    output_format: str = "text"
    jobs: int = 1

    def __post_init__(self):
        if self.root_of_unity_order < 1:
            raise GsvInputError("root-of-unity order must be >= 1")


DEFAULTS = SessionConfig()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(args, text: str, json_obj) -> None:
    payload = _json_text(json_obj) if args.format == "json" else text + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _read_polynomial_argument(arg: str) -> str:
    path = Path(arg)
    if path.exists():
        return path.read_text(encoding="utf-8").strip()
    return arg


def _build_source(args, field: CyclotomicField):
    if args.source == "ansatz":
        return AnsatzRoots()
    if args.source == "float":
        return FloatHomotopy()
    if args.source == "user":
        if not args.candidates:
            raise GsvInputError("--source user requires --candidates FILE")
        rows = json.loads(Path(args.candidates).read_text(encoding="utf-8"))
        points = tuple(tuple(parse_scalar(c, field) for c in row) for row in rows)
        return UserList(points, exhaustive=args.exhaustive)
    raise GsvInputError(f"unknown candidate source {args.source!r}")


def cmd_analyze(args) -> int:
    field = CyclotomicField(args.zeta_order)
    text = _read_polynomial_argument(args.polynomial)
    g = parse_polynomial(text, field)
    source = _build_source(args, field)
    report = verify_transversal(g, source, jobs=args.jobs)
    _emit(args, report.summary_text(), report.to_json_dict())
    if report.rays and not report.isolated:
        sys.stderr.write("error: NonIsolated: some singular rays are not nodes\n")
        return 1
    if not report.complete:
        sys.stderr.write("warning: incomplete search, transversality not certified\n")
        return 2
    return 0


def _report_from_json(obj, field: CyclotomicField) -> TransversalityReport:
    rays = []
    for entry in obj.get("rays", []):
        coords = tuple(parse_scalar(c, field) for c in entry["coords"])
        cls = SingularityClass(Kind(entry["class"]), entry.get("corank"))
        rays.append(SingularRay(coords, cls))
    return TransversalityReport(
        transversal=obj["transversal"],
        rays=tuple(rays),
        isolated=bool(obj["isolated"]),
        source=str(obj.get("source", "file")),
        complete=bool(obj["complete"]),
    )


def cmd_stratify(args) -> int:
    field = CyclotomicField(args.zeta_order)
    obj = json.loads(Path(args.report).read_text(encoding="utf-8"))
    report = _report_from_json(obj, field)
    variety = build_ground_state_variety(report, args.sheet)
    _emit(args, strata_report(variety), variety.to_json_dict())
    return 0


def _load_conifold(path: str) -> ConifoldData:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    return ConifoldData.from_json_dict(obj)


def cmd_cohomology(args) -> int:
    data = _load_conifold(args.data)
    report = cohomology_report(data, mode=args.mode)
    _emit(args, cohomology_report_text(report), report)
    return 0


def cmd_resolutions(args) -> int:
    data = _load_conifold(args.data)
    graph = build_transition_graph(data)
    if args.dot:
        Path(args.dot).write_text(graph.to_dot(), encoding="utf-8")
    if args.format == "dot":
        if getattr(args, "output", None):
            Path(args.output).write_text(graph.to_dot(), encoding="utf-8")
        else:
            sys.stdout.write(graph.to_dot())
        return 0
    choices = enumerate_small_resolutions(data)
    text_lines = [
        f"4-cycle classes: {data.n_classes}, nodes: {data.n}",
        f"compatible small resolutions: {len(choices)}",
        f"naive per-node count: {naive_resolution_count(data)}",
        f"graph: {len(graph.vertices)} vertices, {len(graph.edges)} edges",
    ]
    labels = [e.label for e in graph.edges]
    for kind in ("defo", "exoflop", "flop"):
        text_lines.append(f"  {kind} edges: {labels.count(kind)}")
    _emit(args, "\n".join(text_lines), graph.to_json_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsvkit",
        description="ground-state variety toolkit: stratification, exocurve "
                    "cohomology, and small-resolution transition graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default=DEFAULTS.output_format)
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--zeta-order", dest="zeta_order", type=int,
                       default=DEFAULTS.root_of_unity_order,
                       help="order of the declared root of unity (default %(default)s)")

    p = sub.add_parser("analyze", help="transversality and singular-ray report")
    p.add_argument("polynomial", help="polynomial file or inline expression")
    p.add_argument("--source", choices=("ansatz", "user", "float"),
                   default=DEFAULTS.candidate_source)
    p.add_argument("--candidates", help="JSON candidate list for --source user")
    p.add_argument("--exhaustive", action="store_true",
                   help="treat the user candidate list as exhaustive")
    p.add_argument("--jobs", type=int, default=DEFAULTS.jobs)
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("stratify", help="build one sheet of the ground state variety")
    p.add_argument("report", help="analyze report in JSON form")
    p.add_argument("--sheet", choices=("pos", "neg"), required=True)
    common(p)
    p.set_defaults(func=cmd_stratify)

    p = sub.add_parser("cohomology", help="Mayer-Vietoris tables and Kahler check")
    p.add_argument("data", help="ConifoldData JSON file")
    p.add_argument("--mode", choices=("raw", "refined"), default=DEFAULTS.mode)
    common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("resolutions", help="small resolutions and transition graph")
    p.add_argument("data", help="ConifoldData JSON file")
    p.add_argument("--dot", help="also write the graph in DOT format here")
    common(p, formats=("text", "json", "dot"))
    p.set_defaults(func=cmd_resolutions)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IncompleteResultError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except GsvError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
