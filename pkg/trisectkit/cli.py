import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import config
from .diagram import ClosedTrisectionDiagram, RelativeTrisectionDiagram, TrisectionDiagram, validate
from .document import DiagramDocument, read_document, write_diagram
from .errors import AlreadyClosedError, DiagramInvalidError
from .invariants import OUTCOME_DISTINGUISHED, distinguish, distinguish_closed, invariant_report
from .moves import cap_off, handleslide, transvection
from .params import BOUNDARY_OPTIONS, FilteredType, enumerate_types, openbook_boundary_filter
from .render import render_invariants, render_types_table, render_validation, render_verdict
from .services.paper_demo import STATUS_REPRODUCED, DemoOptions, run_paper_demo, summary_json
from .surface import H1Class, parse_class

LOGGER = logging.getLogger(__name__)

FAMILY_FLAGS = {"a": "alpha", "b": "beta", "g": "gamma", "alpha": "alpha", "beta": "beta", "gamma": "gamma"}
SIGN_FLAGS = {"+": 1, "-": -1}
NOT_FILTERED = "not filtered"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read(path: str) -> DiagramDocument:
    return read_document(Path(path))


def _write(path: str, diagram: TrisectionDiagram, document: DiagramDocument) -> None:
    write_diagram(Path(path), diagram, document.metadata)
    print(f"wrote {path}")


def _parse_twist_class(text: str, diagram: TrisectionDiagram) -> H1Class:
    if any(ch.isalpha() for ch in text):
        return parse_class(text, diagram.surface)
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"--class expects comma-separated integers or an expression like a1+b2, got {text!r}") from exc
    return H1Class(coords)


def cmd_validate(args: argparse.Namespace) -> int:
    report = validate(_read(args.file).diagram)
    print(render_validation(report))
    return config.EXIT_OK if report.ok else config.EXIT_FAILURE


def cmd_cap(args: argparse.Namespace) -> int:
    document = _read(args.file)
    diagram = document.diagram
    if not isinstance(diagram, RelativeTrisectionDiagram):
        raise AlreadyClosedError("already closed: cap expects a relative diagram")
    capped = cap_off(diagram)
    print(render_validation(validate(capped)))
    _write(args.output, capped, document)
    return config.EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    diagram = _read(args.file).diagram
    if isinstance(diagram, RelativeTrisectionDiagram):
        print("relative diagram: reporting invariants of the capped diagram")
        diagram = cap_off(diagram)
    print(render_invariants(invariant_report(diagram)))
    return config.EXIT_OK


def cmd_slide(args: argparse.Namespace) -> int:
    document = _read(args.file)
    slid = handleslide(
        document.diagram,
        FAMILY_FLAGS[args.family],
        args.curve - 1,
        args.over - 1,
        SIGN_FLAGS[args.sign],
    )
    _write(args.output, slid, document)
    return config.EXIT_OK


def cmd_twist(args: argparse.Namespace) -> int:
    document = _read(args.file)
    c = _parse_twist_class(args.twist_class, document.diagram)
    _write(args.output, transvection(document.diagram, c, args.power), document)
    return config.EXIT_OK


def cmd_distinguish(args: argparse.Namespace) -> int:
    first, second = _read(args.first).diagram, _read(args.second).diagram
    if isinstance(first, RelativeTrisectionDiagram) and isinstance(second, RelativeTrisectionDiagram):
        verdict = distinguish(first, second)
    elif isinstance(first, ClosedTrisectionDiagram) and isinstance(second, ClosedTrisectionDiagram):
        verdict = distinguish_closed(first, second)
    else:
        raise ValueError("distinguish needs two relative or two closed diagrams")
    print(render_verdict(verdict))
    return config.EXIT_OK if verdict.outcome == OUTCOME_DISTINGUISHED else config.EXIT_INCONCLUSIVE


def cmd_params(args: argparse.Namespace) -> int:
    if args.gmax < 0:
        raise ValueError(f"--gmax must be non-negative, got {args.gmax}")
    types = enumerate_types(args.chi, args.gmax)
    if args.boundary:
        rows = openbook_boundary_filter(types, args.boundary)
    else:
        rows = [FilteredType(t, NOT_FILTERED) for t in types]
    print(render_types_table(rows))
    if not rows:
        print(f"note: minimal genus >= {args.gmax + 1}")
    return config.EXIT_OK


def cmd_paper_demo(args: argparse.Namespace) -> int:
    summary = run_paper_demo(DemoOptions(include_reports=not args.brief))
    sys.stdout.write(summary_json(summary))
    return config.EXIT_OK if summary["status"] == STATUS_REPRODUCED else config.EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trisectkit", description="Homological toolkit for (relative) trisection diagrams")
    parser.add_argument("--verbose", action="store_true", help="log debug output to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check the homological conditions of a diagram")
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("cap", help="cap off a relative diagram with p = 0")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=cmd_cap)

    p = sub.add_parser("invariants", help="homology, intersection form and Euler characteristic")
    p.add_argument("file")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("slide", help="handleslide one curve over another in the same family")
    p.add_argument("file")
    p.add_argument("--family", required=True, choices=sorted(FAMILY_FLAGS))
    p.add_argument("--curve", required=True, type=int, help="1-based index of the curve that moves")
    p.add_argument("--over", required=True, type=int, help="1-based index of the curve slid over")
    p.add_argument("--sign", default="+", choices=sorted(SIGN_FLAGS))
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=cmd_slide)

    p = sub.add_parser("twist", help="apply a Dehn twist (transvection) to every curve")
    p.add_argument("file")
    p.add_argument("--class", dest="twist_class", required=True, help="comma-separated coordinates or an expression")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=cmd_twist)

    p = sub.add_parser("distinguish", help="compare the invariants of two diagrams")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_distinguish)

    p = sub.add_parser("params", help="enumerate admissible relative trisection types")
    p.add_argument("--chi", required=True, type=int)
    p.add_argument("--gmax", required=True, type=int)
    p.add_argument("--boundary", choices=BOUNDARY_OPTIONS)
    p.set_defaults(handler=cmd_params)

    p = sub.add_parser("paper-demo", help="reproduce the S2 x D2 distinguishing computation")
    p.add_argument("--brief", action="store_true", help="omit the full invariant reports")
    p.set_defaults(handler=cmd_paper_demo)
    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, format=config.LOG_FORMAT, stream=sys.stderr, force=True)


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return config.EXIT_USAGE
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    _configure_logging(args.verbose)

    try:
        return args.handler(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return config.EXIT_IO
    except DiagramInvalidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(render_validation(exc.report), file=sys.stderr)
        return config.EXIT_FAILURE
    except (ValueError, RuntimeError) as exc:
        LOGGER.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return config.EXIT_FAILURE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
