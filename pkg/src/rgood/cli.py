"""Command-line front end.

Exit codes: 0 for any computed answer (Unknown included), 2 for parse or
validation errors, 3 for an unsupported ring, 4 for an internal contradiction.
Errors are reported as one JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from rgood import words
from rgood.abelian import h1_invariants
from rgood.engine import (
    BestvinaBrady,
    CircleWedge,
    EilenbergMacLane,
    EvenArtin,
    Known,
    Raag,
    Surface,
    SurveyTable,
    classify,
    parse_assumption,
    surface_family,
    survey,
)
from rgood.errors import ContradictionError, ParseError, RGoodError, UnsupportedRingError, ValidationError
from rgood.families import SurfaceDescriptor, parse_artin_graph, parse_graph, simply_connected_status
from rgood.presentations import (
    DEFAULT_BUDGET,
    deficiency,
    format_presentation,
    largeness_hint,
    parse_presentation,
    tietze_simplify,
)
from rgood.rings import parse_ring, render_ring
from rgood.verdicts import Verdict
from rgood.verylarge import find_f2_surjection

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RING = 3
EXIT_CONTRADICTION = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


@dataclass
class CliResult:
    code: int
    output: str
    error: str = ""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _fact(value) -> str:
    return value if isinstance(value, str) else json.dumps(value, ensure_ascii=False)


# -- renderers ----------------------------------------------------------------


def render_verdict_text(space: str, ring: str, v: Verdict) -> str:
    lines = [f"space: {space}", f"ring: {ring}", f"status: {v.status.value}", "trace:"]
    for i, rec in enumerate(v.trace, 1):
        lines.append(f"  {i}. [{rec.rule}] {rec.citation}")
        for key, value in rec.facts.items():
            lines.append(f"       {key}: {_fact(value)}")
    return "\n".join(lines) + "\n"


def render_survey_markdown(table: SurveyTable) -> str:
    header = ["space", *table.ring_labels]
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    for label, verdicts in table.rows:
        lines.append("| " + " | ".join([label, *(v.status.value for v in verdicts)]) + " |")
    return "\n".join(lines) + "\n"


def render_survey_text(table: SurveyTable) -> str:
    header = ["space", *table.ring_labels]
    body = [[label, *(v.status.value for v in verdicts)] for label, verdicts in table.rows]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join(fmt.format(*row).rstrip() for row in [header, *body]) + "\n"


def render_survey_json(table: SurveyTable) -> str:
    return _dumps([v.to_json(space, ring) for space, ring, v in table.cells()])


# -- subcommands --------------------------------------------------------------


def _space_from_args(args) -> object:
    kind = args.kind
    if kind == "surface":
        orientable = not args.non_orientable
        return Surface(SurfaceDescriptor(orientable, args.genus))
    if kind == "presentation":
        return EilenbergMacLane(parse_presentation(_read(args.file)), name=f"K(G,1) for {args.file}")
    if kind == "raag":
        return Raag(parse_graph(_read(args.file)), name=f"RAAG K(A,1) for {args.file}")
    if kind == "artin":
        return EvenArtin(parse_artin_graph(_read(args.file)), name=f"Artin K(A,1) for {args.file}")
    if kind == "bestvina-brady":
        return BestvinaBrady(parse_graph(_read(args.file)), name=f"Bestvina-Brady K(H,1) for {args.file}")
    if kind == "wedge":
        if args.circles < 2:
            raise ValidationError("a wedge of circles needs at least 2 circles")
        return CircleWedge(args.circles)
    if kind == "known":
        return Known(args.tag)
    raise AssertionError(kind)


def _assumptions(args) -> list:
    try:
        return [parse_assumption(a) for a in args.assume or ()]
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _cmd_classify(args) -> str:
    ring = parse_ring(args.ring)
    space = _space_from_args(args)
    verdict = classify(space, ring, _assumptions(args))
    ring_label = render_ring(ring)
    if args.format == "json":
        return _dumps(verdict.to_json(space.label, ring_label))
    if args.format == "md":
        return render_survey_markdown(SurveyTable((ring,), ((space.label, (verdict,)),)))
    return render_verdict_text(space.label, ring_label, verdict)


def _cmd_survey(args) -> str:
    rings = [parse_ring(r) for r in args.rings.split(",") if r.strip()] if args.rings else []
    if not rings:
        raise ValidationError("--rings needs at least one ring")
    spaces: list = []
    if args.surfaces is not None:
        spaces.extend(surface_family(args.surfaces))
    if args.spaces:
        spaces.extend(Known(t) for t in args.spaces.split(",") if t.strip())
    if not spaces:
        raise ValidationError("survey needs --surfaces and/or --spaces")
    table = survey(spaces, rings, _assumptions(args))
    if args.format == "json":
        return render_survey_json(table)
    if args.format == "md":
        return render_survey_markdown(table)
    return render_survey_text(table)


def _cmd_very_large(args) -> str:
    p = parse_presentation(_read(args.file))
    w = find_f2_surjection(p, try_tietze_first=not args.no_tietze)
    if w is None:
        payload = {"status": "unknown", "witness": None}
    else:
        keep = frozenset(w.kept_pair)
        payload = {
            "status": "yes",
            "witness": list(w.kept_pair),
            "presentation": format_presentation(w.presentation),
            "projections": [
                {"relator": words.format_word(r), "projection": words.format_word(words.project(r, keep))}
                for r in w.presentation.relators
            ],
        }
    if args.format == "json":
        return _dumps(payload)
    if w is None:
        return "status: unknown\nno generator pair passes the projection test\n"
    lines = [
        "status: yes",
        f"witness: {', '.join(w.kept_pair)}",
        f"presentation: {payload['presentation']}",
        "projections:",
    ]
    lines += [f"  {item['relator']} -> {item['projection']}" for item in payload["projections"]]
    return "\n".join(lines) + "\n"


def _cmd_homology(args) -> str:
    p = parse_presentation(_read(args.file))
    inv = h1_invariants(p)
    hint = largeness_hint(p)
    payload = {
        "h1": str(inv),
        "free_rank": inv.free_rank,
        "torsion": list(inv.torsion_divisors),
        "presentation_deficiency": deficiency(p),
        "largeness_hint": {"status": hint.status.value, "reason": hint.reason.value},
    }
    if args.format == "json":
        return _dumps(payload)
    return (
        f"H1: {inv}\n"
        f"free rank: {inv.free_rank}\n"
        f"torsion: {', '.join(map(str, inv.torsion_divisors)) or 'none'}\n"
        f"deficiency of this presentation: {payload['presentation_deficiency']}\n"
        f"largeness hint: {hint.status.value} ({hint.reason.value})\n"
    )


def _cmd_simply_connected(args) -> str:
    status = simply_connected_status(parse_graph(_read(args.file)))
    if args.format == "json":
        return _dumps({"simply_connected": status.value})
    return status.value.capitalize() + "\n"


def _cmd_presentation(args) -> str:
    p = parse_presentation(_read(args.file))
    if args.budget is not None and args.budget < 1:
        raise ValidationError("--budget must be positive")
    if args.simplify:
        p = tietze_simplify(p, args.budget or DEFAULT_BUDGET)
    if args.format == "json":
        return _dumps(
            {"generators": list(p.generators), "relators": [words.format_word(r) for r in p.relators]}
        )
    return format_presentation(p) + "\n"


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "md", "json"), default="text")

    ring_opts = _Parser(add_help=False, parents=[fmt])
    ring_opts.add_argument("--ring", required=True, help="Z, Q, Z/p or Z[1/p,...]")
    ring_opts.add_argument("--assume", action="append", metavar="FLAG",
                           help="assert a hypothesis (nilpotent-space, G5, ...); repeatable")

    parser = _Parser(prog="rgood", description="Classify spaces as R-good, R-bad or unknown.")
    sub = parser.add_subparsers(dest="command", required=True)

    cls = sub.add_parser("classify", help="classify one space")
    kinds = cls.add_subparsers(dest="kind", required=True)
    surf = kinds.add_parser("surface", parents=[ring_opts])
    surf.add_argument("--genus", type=int, required=True)
    orient = surf.add_mutually_exclusive_group()
    orient.add_argument("--orientable", action="store_true")
    orient.add_argument("--non-orientable", action="store_true")
    for name in ("presentation", "raag", "artin", "bestvina-brady"):
        k = kinds.add_parser(name, parents=[ring_opts])
        k.add_argument("file")
    wedge = kinds.add_parser("wedge", parents=[ring_opts])
    wedge.add_argument("--circles", type=int, required=True)
    kn = kinds.add_parser("known", parents=[ring_opts])
    kn.add_argument("tag", help="sphere, torus, rp2, klein, z*z2, wedge-N")
    cls.set_defaults(func=_cmd_classify)

    sv = sub.add_parser("survey", parents=[fmt], help="classify a family against several rings")
    sv.add_argument("--surfaces", type=int, metavar="MAXGENUS")
    sv.add_argument("--spaces", help="comma-separated known-space tags")
    sv.add_argument("--rings", required=True)
    sv.add_argument("--assume", action="append", metavar="FLAG")
    sv.set_defaults(func=_cmd_survey)

    vl = sub.add_parser("very-large", parents=[fmt], help="search for a surjection onto F2")
    vl.add_argument("file")
    vl.add_argument("--no-tietze", action="store_true")
    vl.set_defaults(func=_cmd_very_large)

    hom = sub.add_parser("homology", parents=[fmt], help="H1 invariants and deficiency")
    hom.add_argument("file")
    hom.set_defaults(func=_cmd_homology)

    sc = sub.add_parser("simply-connected", parents=[fmt], help="flag complex of a graph file")
    sc.add_argument("file")
    sc.set_defaults(func=_cmd_simply_connected)

    pr = sub.add_parser("presentation", parents=[fmt], help="print or simplify a presentation")
    pr.add_argument("file")
    pr.add_argument("--simplify", action="store_true")
    pr.add_argument("--budget", type=int)
    pr.set_defaults(func=_cmd_presentation)
    return parser


def _error(code: int, kind: str, message: str) -> CliResult:
    return CliResult(code, "", json.dumps({"error": kind, "message": message}) + "\n")


def execute(argv: Sequence[str]) -> CliResult:
    try:
        args = build_parser().parse_args(list(argv))
    except _UsageError as exc:
        return _error(EXIT_INPUT, "usage", str(exc))
    try:
        return CliResult(EXIT_OK, args.func(args))
    except UnsupportedRingError as exc:
        return _error(EXIT_RING, exc.kind, str(exc))
    except ContradictionError as exc:
        return _error(EXIT_CONTRADICTION, exc.kind, str(exc))
    except (ParseError, ValidationError, RGoodError) as exc:
        return _error(EXIT_INPUT, exc.kind, str(exc))


def main(argv: Sequence[str] | None = None) -> int:
    result = execute(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.output)
    sys.stderr.write(result.error)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
