"""Command line front end.

Exit codes: 0 success, 1 spec or parse error, 2 validation failure,
3 verification falsified.
"""

import argparse
import json
import sys

from .congruences import ValidationError, catalog, spec_to_json
from .groups import FiniteGroup, GroupError
from .oracle import falsify_perfectness
from .perfectness import DEFAULT_NMAX, NotPerfect, class_witnesses, classify
from .specfile import SpecFileError, load_group_spec, parse_congruence, parse_element

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_FALSIFIED = 0, 1, 2, 3


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser():
    p = argparse.ArgumentParser(
        prog="bisimple",
        description="Congruences on Bruck-Reilly extensions and their perfectness.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list congruences up to k <= kmax")
    c.add_argument("groupfile")
    c.add_argument("--kmax", type=_nonneg, default=3)
    c.add_argument("--json", action="store_true")

    c = sub.add_parser("classify", help="decide whether a congruence is perfect")
    c.add_argument("groupfile")
    c.add_argument("congruence")
    c.add_argument("--nmax", type=_positive, default=DEFAULT_NMAX)
    c.add_argument("--json", action="store_true")

    c = sub.add_parser("verify", help="search for set-product gaps by brute force")
    c.add_argument("groupfile")
    c.add_argument("congruence")
    c.add_argument("--window", type=_nonneg, default=4)
    c.add_argument("--bound", type=_nonneg, default=None, help="default 2*window + k")
    c.add_argument("--json", action="store_true")

    c = sub.add_parser("witness", help="class members of the form (0,h,q) and (m,g,0)")
    c.add_argument("groupfile")
    c.add_argument("congruence")
    c.add_argument("element")
    return p


def _cmd_catalog(args, out):
    gs = load_group_spec(args.groupfile)
    G = gs.group
    pool = None if isinstance(G, FiniteGroup) else list(gs.subgroups.values())
    if pool is not None and not pool:
        raise SpecFileError("catalog over a free abelian group needs named subgroups", path=gs.path)
    specs = catalog(gs.context, args.kmax, pool, gs.names())
    print(f"# catalog truncated at k <= {args.kmax}", file=sys.stderr)
    for note in specs.notes:
        print(f"# {note}", file=sys.stderr)
    if args.json:
        json.dump([spec_to_json(s) for s in specs], out, indent=2)
        out.write("\n")
        return EXIT_OK
    width = max((len(s.label) for s in specs), default=0)
    for s in specs:
        print(f"{s.label:<{width}}  N={s.N!r}  {classify(s).summary(G)}", file=out)
    return EXIT_OK


def _cmd_classify(args, out):
    gs = load_group_spec(args.groupfile)
    spec = parse_congruence(gs, args.congruence)
    verdict = classify(spec, args.nmax)
    if args.json:
        json.dump(verdict.to_json(), out)
        out.write("\n")
    else:
        print(verdict.summary(gs.group), file=out)
    return EXIT_OK


def _cmd_verify(args, out):
    gs = load_group_spec(args.groupfile)
    S = gs.context
    spec = parse_congruence(gs, args.congruence)
    bound = args.bound if args.bound is not None else 2 * args.window + (spec.k or 0)
    report = falsify_perfectness(spec, args.window, bound, norm_bound=bound)
    if args.json:
        data = report.to_json(S) if report else {
            "pair": None, "window": args.window, "bound": bound,
            "status": "covered", "uncovered": [],
        }
        json.dump(data, out)
        out.write("\n")
    elif report is None:
        print(f"covered: no gap for any pair with indices <= {args.window} (bound {bound})", file=out)
    else:
        x, y = report.pair
        scope = "exact" if report.exact else f"within bound {bound}"
        print(f"pair      {S.format(x)} {S.format(y)}", file=out)
        print(f"window    {report.window}", file=out)
        print(f"bound     {bound}", file=out)
        print(f"covered   {report.covered}", file=out)
        print(f"uncovered {' '.join(S.format(w) for w in report.uncovered)}", file=out)
        print(f"status    {report.status} ({scope})", file=out)
    return EXIT_OK if report is None else EXIT_FALSIFIED


def _cmd_witness(args, out):
    gs = load_group_spec(args.groupfile)
    S = gs.context
    spec = parse_congruence(gs, args.congruence)
    x = parse_element(S, args.element)
    try:
        left, right = class_witnesses(spec, x)
    except NotPerfect as err:
        print(f"error: not-perfect: {err}", file=sys.stderr)
        return EXIT_INVALID
    print(f"left  {S.format(left)}", file=out)
    print(f"right {S.format(right)}", file=out)
    return EXIT_OK


COMMANDS = {
    "catalog": _cmd_catalog,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "witness": _cmd_witness,
}


def run(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except ValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except (SpecFileError, GroupError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
