"""Command-line front end.

Every decision procedure is exposed as a subcommand whose verdict is the
exit code: 0 for a true verdict (or plain success), 1 for a false
verdict, 2 for usage or parse errors, 3 for a violated theorem
hypothesis.  ``--json`` switches the output to machine-readable form and
``--quiet`` suppresses stdout entirely, leaving the exit code as the sole
verdict channel.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .branching import (
    HypothesisError,
    euler_poincare,
    ext_branch_recursive,
    ext_branch_segment_type,
    hom_branch_arthur,
    same_group_ext_segment_type,
)
from .core import ArthurParameter, csupp_param
from .dsl import (
    ParseError,
    format_param,
    format_segment_rep,
    format_support,
    format_term,
    parse_param,
    parse_rep,
    parse_segment,
)
from .relevance import (
    GGP_FAMILIES,
    STRONG_FAMILIES,
    Matching,
    enumerate_strong_matchings,
    find_matching,
)
from .segments import (
    OPPOSITE,
    STANDARD,
    SegmentRep,
    az_dual_param,
    csupp_segment,
    jacquet,
    speh_minus,
)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3


def _emit(args: argparse.Namespace, lines: list[str], payload: dict) -> None:
    if args.quiet:
        return
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _matching_lines(matching: Matching, indent: str = "  ") -> list[str]:
    lines = []
    for p in matching.pairs:
        lines.append(f"{indent}{p.family.value}: {format_term(p.left)} -> {format_term(p.right)}")
    if matching.dropped_left:
        dropped = ", ".join(format_term(s) for s in matching.dropped_left)
        lines.append(f"{indent}dropped left: {dropped}")
    if matching.dropped_right:
        dropped = ", ".join(format_term(s) for s in matching.dropped_right)
        lines.append(f"{indent}dropped right: {dropped}")
    return lines


def _matching_json(matching: Optional[Matching]) -> Optional[dict]:
    return matching.to_json_dict() if matching is not None else None


def _cmd_parse(args: argparse.Namespace) -> int:
    value = parse_rep(args.expr)
    if isinstance(value, SegmentRep):
        canonical = format_segment_rep(value)
        dim = value.degree
    else:
        canonical = format_param(value)
        dim = value.dim
    _emit(args, [canonical, f"dim {dim}"], {"canonical": canonical, "dim": dim})
    return EXIT_TRUE


def _cmd_dual(args: argparse.Namespace) -> int:
    value = parse_rep(args.expr)
    if isinstance(value, SegmentRep):
        dual = SegmentRep("Q" if value.kind == "Z" else "Z", value.segment)
        canonical = format_segment_rep(dual)
        dim = dual.degree
    else:
        dual_param = az_dual_param(value)
        canonical = format_param(dual_param)
        dim = dual_param.dim
    _emit(args, [canonical, f"dim {dim}"], {"canonical": canonical, "dim": dim})
    return EXIT_TRUE


def _cmd_minus(args: argparse.Namespace) -> int:
    param = parse_param(args.expr)
    kept = []
    dropped = []
    for term in param:
        reduced = speh_minus(term)
        if reduced is None:
            dropped.append(term)
        else:
            kept.append(reduced)
    result = ArthurParameter(tuple(kept))
    canonical = format_param(result)
    lines = [canonical, f"dim {result.dim}"]
    if dropped:
        lines.append("dropped: " + ", ".join(format_term(s) for s in sorted(dropped, key=lambda s: s.sort_key)))
    payload = {
        "canonical": canonical,
        "dim": result.dim,
        "dropped": [format_term(s) for s in sorted(dropped, key=lambda s: s.sort_key)],
    }
    _emit(args, lines, payload)
    return EXIT_TRUE


def _cmd_csupp(args: argparse.Namespace) -> int:
    value = parse_rep(args.expr)
    if isinstance(value, SegmentRep):
        support = csupp_segment(value.segment)
    else:
        support = csupp_param(value)
    text = format_support(support)
    _emit(args, [text], {"support": text, "count": len(support)})
    return EXIT_TRUE


def _cmd_jacquet(args: argparse.Namespace) -> int:
    segment = parse_segment(args.segment)
    side = STANDARD if args.side == "std" else OPPOSITE
    result = jacquet(args.kind, side, segment, args.split)
    if result.is_zero:
        _emit(args, ["0"], {"zero": True})
    else:
        omega1, omega2 = result.factors
        text = f"{format_segment_rep(omega1)} (x) {format_segment_rep(omega2)}"
        _emit(
            args,
            [text],
            {"zero": False, "factors": [format_segment_rep(omega1), format_segment_rep(omega2)]},
        )
    return EXIT_TRUE


def _verdict_exit(verdict: bool) -> int:
    return EXIT_TRUE if verdict else EXIT_FALSE


def _cmd_relevant(args: argparse.Namespace) -> int:
    a1, a2 = parse_param(args.expr1), parse_param(args.expr2)
    matching = find_matching(a1, a2, GGP_FAMILIES)
    verdict = matching is not None
    lines = ["relevant" if verdict else "not relevant"]
    if matching is not None:
        lines.extend(_matching_lines(matching))
    _emit(args, lines, {"verdict": verdict, "certificate": _matching_json(matching)})
    return _verdict_exit(verdict)


def _cmd_strong(args: argparse.Namespace) -> int:
    a1, a2 = parse_param(args.expr1), parse_param(args.expr2)
    matching = find_matching(a1, a2, STRONG_FAMILIES)
    verdict = matching is not None
    lines = ["strong ext relevant" if verdict else "not strong ext relevant"]
    if matching is not None:
        lines.extend(_matching_lines(matching))
    _emit(args, lines, {"verdict": verdict, "certificate": _matching_json(matching)})
    return _verdict_exit(verdict)


def _cmd_matchings(args: argparse.Namespace) -> int:
    a1, a2 = parse_param(args.expr1), parse_param(args.expr2)
    matchings = enumerate_strong_matchings(a1, a2)
    lines = [f"{len(matchings)} matching(s)"]
    for index, matching in enumerate(matchings, start=1):
        lines.append(f"matching {index}:")
        lines.extend(_matching_lines(matching))
    payload = {"count": len(matchings), "matchings": [m.to_json_dict() for m in matchings]}
    _emit(args, lines, payload)
    return _verdict_exit(bool(matchings))


def _cmd_hom(args: argparse.Namespace) -> int:
    a1, a2 = parse_param(args.expr1), parse_param(args.expr2)
    verdict = hom_branch_arthur(a1, a2)
    lines = ["Hom != 0" if verdict.nonvanishing else "Hom = 0"]
    if verdict.certificate is not None:
        lines.extend(_matching_lines(verdict.certificate))
    _emit(
        args,
        lines,
        {"verdict": verdict.nonvanishing, "certificate": _matching_json(verdict.certificate)},
    )
    return _verdict_exit(verdict.nonvanishing)


def _cmd_ext(args: argparse.Namespace) -> int:
    a1, a2 = parse_param(args.expr1), parse_param(args.expr2)
    certificate = None
    if args.decider == "matcher":
        verdict = ext_branch_segment_type(a1, a2)
        nonvanishing = verdict.nonvanishing
        certificate = verdict.certificate
    elif args.decider == "recursive":
        nonvanishing = ext_branch_recursive(a1, a2)
    else:
        verdict = ext_branch_segment_type(a1, a2)
        recursive = ext_branch_recursive(a1, a2)
        if verdict.nonvanishing != recursive:
            raise RuntimeError(
                f"deciders disagree on ({args.expr1!r}, {args.expr2!r}): "
                f"matcher={verdict.nonvanishing} recursive={recursive}"
            )
        nonvanishing = verdict.nonvanishing
        certificate = verdict.certificate
    lines = ["Ext != 0" if nonvanishing else "Ext = 0"]
    if certificate is not None:
        lines.extend(_matching_lines(certificate))
    _emit(
        args,
        lines,
        {
            "verdict": nonvanishing,
            "decider": args.decider,
            "certificate": _matching_json(certificate),
        },
    )
    return _verdict_exit(nonvanishing)


def _cmd_samegroup(args: argparse.Namespace) -> int:
    a1, a2 = parse_param(args.expr1), parse_param(args.expr2)
    verdict = same_group_ext_segment_type(a1, a2)
    _emit(args, ["Ext != 0" if verdict else "Ext = 0"], {"verdict": verdict})
    return _verdict_exit(verdict)


def _cmd_ep(args: argparse.Namespace) -> int:
    a1, a2 = parse_param(args.expr1), parse_param(args.expr2)
    value = euler_poincare(a1, a2)
    _emit(args, [str(value)], {"value": value})
    return _verdict_exit(value != 0)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--quiet", action="store_true", help="exit code only, no stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spehcalc",
        description="Hom/Ext branching calculator for Arthur-type representations of p-adic GL(n)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, exprs: Sequence[str]) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        for expr in exprs:
            p.add_argument(expr)
        _add_common_flags(p)
        p.set_defaults(func=func)
        return p

    add("parse", _cmd_parse, "echo the canonical form and dimension", ["expr"])
    add("dual", _cmd_dual, "Aubert-Zelevinsky dual", ["expr"])
    add("minus", _cmd_minus, "termwise Arthur step down, reporting drops", ["expr"])
    add("csupp", _cmd_csupp, "cuspidal support multiset", ["expr"])

    p = sub.add_parser("jacquet", help="Jacquet module of a segment representation")
    p.add_argument("kind", choices=["Z", "Q"])
    p.add_argument("side", choices=["std", "opp"])
    p.add_argument("segment")
    p.add_argument("split", type=int)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_jacquet)

    add("relevant", _cmd_relevant, "relevance of a parameter pair", ["expr1", "expr2"])
    add("strong", _cmd_strong, "strong Ext relevance of a parameter pair", ["expr1", "expr2"])
    add("matchings", _cmd_matchings, "enumerate all strong matchings", ["expr1", "expr2"])
    add("hom", _cmd_hom, "Hom branching verdict for a (n, n-1) pair", ["expr1", "expr2"])

    p = add("ext", _cmd_ext, "Ext branching verdict for a segment-type (n, n-1) pair", ["expr1", "expr2"])
    p.add_argument("--decider", choices=["matcher", "recursive", "both"], default="both")

    add("samegroup", _cmd_samegroup, "same-group Ext verdict for segment-type products", ["expr1", "expr2"])
    add("ep", _cmd_ep, "Euler-Poincare pairing value", ["expr1", "expr2"])
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ValueError as exc:  # bad argument values, e.g. split out of range
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
