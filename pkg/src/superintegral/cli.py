"""Command-line front end.

Exit status: 0 when everything checks out, 1 on a mismatch or undocumented
erratum, 2 on usage, descriptor or construction errors.
"""

from __future__ import annotations

import argparse
import sys

from . import reports
from .closed_forms import ClosedFormError, TheoremId, dispatch_listing
from .descriptors import DescriptorError, parse
from .graphs import commuting_graph
from .groups import GroupAxiomError, build_group
from .verification import (
    HypothesisError,
    check_applications,
    check_group_lists,
    classify,
    errata_report,
    verify_range,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[str, tuple[int, ...]]:
    """``m=3..12``, ``k=3`` or ``p=2,3,5``."""
    sym, sep, spec = text.partition("=")
    if not sep or not sym.strip():
        raise argparse.ArgumentTypeError(f"expected <sym>=<lo>..<hi>, got {text!r}")
    try:
        if ".." in spec:
            lo, hi = (int(x) for x in spec.split(".."))
            values = tuple(range(lo, hi + 1))
        else:
            values = tuple(int(x) for x in spec.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {spec!r} in {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty range in {text!r}")
    return sym.strip(), values


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superintegral", description="Spectra of commuting graphs of finite groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, long=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
        if long:
            p.add_argument("--long", action="store_true", help="include the slow instances (PSL(2,8) and friends)")

    p = sub.add_parser("analyze", help="classify one group")
    p.add_argument("descriptor")
    p.add_argument("--verify", action="store_true", help="cross-check multiplicities by exact rank")
    common(p)

    p = sub.add_parser("verify", help="closed forms against the oracle")
    p.add_argument("theorem", help="theorem id or 'all'")
    p.add_argument("--range", dest="ranges", action="append", type=parse_range, default=[], metavar="SYM=LO..HI")
    common(p, long=True)

    p = sub.add_parser("census", help="application checks over a corpus")
    p.add_argument("descriptors", nargs="*", help="corpus override (default: built-in corpus)")
    common(p, long=True)

    p = sub.add_parser("errata", help="verbatim-vs-derived disagreements")
    common(p)

    p = sub.add_parser("theorems", help="list the encoded closed forms")
    common(p)

    p = sub.add_parser("graph", help="export the commuting graph")
    p.add_argument("descriptor")
    p.add_argument("--form", choices=("edges", "adjacency"), default="edges")
    p.add_argument("--out", metavar="PATH")
    return ap


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(args, obj_json, text_fn) -> str:
    return reports.dumps(obj_json()) if args.format == "json" else text_fn()


def _theorem_ids(name: str) -> list[TheoremId]:
    if name == "all":
        return [t for t in TheoremId if t is not TheoremId.CliqueUnion]
    try:
        return [TheoremId(name)]
    except ValueError:
        known = ", ".join(t.value for t in TheoremId)
        raise UsageError(f"unknown theorem {name!r}; known: all, {known}") from None


def cmd_analyze(args) -> int:
    desc = parse(args.descriptor)
    g = build_group(desc)
    if g.is_abelian():
        raise UsageError(f"{desc} is abelian; the commuting graph is empty")
    rep = classify(g, desc, verify=args.verify)
    _emit(args, _render(args, lambda: reports.analysis_json(rep), lambda: reports.analysis_text(rep)))
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = _theorem_ids(args.theorem)
    ranges = dict(args.ranges)
    if ranges and len(ids) > 1:
        raise UsageError("--range needs a single theorem id")
    if args.theorem != "all" and ids[0] is TheoremId.CliqueUnion:
        raise UsageError("CliqueUnion has no group instances; it is exercised through every other result")
    sweeps = [verify_range(t, ranges, long=args.long) for t in ids]
    _emit(args, _render(args, lambda: reports.sweeps_json(sweeps), lambda: reports.sweeps_text(sweeps)))
    return EXIT_OK if all(s.ok for s in sweeps) else EXIT_MISMATCH


def cmd_census(args) -> int:
    corpus = args.descriptors or None
    if corpus:
        for d in corpus:
            parse(d)
    rep = check_applications(corpus, long=args.long)
    lists = check_group_lists() if corpus is None else None
    ok = rep.ok and (lists is None or lists.ok)
    _emit(args, _render(args, lambda: reports.census_json(rep, lists), lambda: reports.census_text(rep, lists)))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_errata(args) -> int:
    rep = errata_report()
    _emit(args, _render(args, lambda: reports.errata_json(rep), lambda: reports.errata_text(rep)))
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_theorems(args) -> int:
    listing = dispatch_listing()

    def text():
        return "".join(
            f"{t['theorem']:<20} [{', '.join(t['symbols'])}] {t['constraints']}\n{'':<20} {t['clique_structure']}\n"
            for t in listing
        )

    _emit(args, _render(args, lambda: listing, text))
    return EXIT_OK


def cmd_graph(args) -> int:
    g = build_group(parse(args.descriptor))
    graph = commuting_graph(g)
    _emit(args, graph.to_edge_list() if args.form == "edges" else graph.to_adjacency_list())
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "census": cmd_census,
    "errata": cmd_errata,
    "theorems": cmd_theorems,
    "graph": cmd_graph,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DescriptorError) as exc:
        sys.stderr.write(parser.format_usage())
        print(f"superintegral {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HypothesisError, ClosedFormError, GroupAxiomError, ValueError) as exc:
        print(f"superintegral {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"superintegral {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
