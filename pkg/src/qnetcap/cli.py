"""Command-line entry point.

Exit codes: 0 success, 1 usage, 2 parse/validation, 3 solver capacity
exceeded, 4 oracle mismatch.
"""

import argparse
import sys
from dataclasses import replace

from .cuts import TOL, bound, brute_force_bound
from .document import DocumentError, check_document
from .errors import CapacityError, ConstraintError, QNetCapError, StructuralError
from .network import MAX_FREE_POINTS
from .regions import ScenarioKind, build_region, rate_families
from .report import dumps_report, plot_data

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CAPACITY, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    try:
        text = _read(args.document)
    except OSError as exc:
        raise UsageError(f"cannot read {args.document}: {exc.strerror}") from None
    net, scenarios, problems = check_document(text)
    if problems:
        raise DocumentError(problems)
    return net, scenarios


def _select(args, scenarios):
    if args.scenario:
        by_name = {s.name: s for s in scenarios}
        missing = [n for n in args.scenario if n not in by_name]
        if missing:
            raise UsageError(f"no scenario named {', '.join(missing)} (have: {', '.join(by_name)})")
        chosen = [by_name[n] for n in args.scenario]
    else:
        chosen = list(scenarios)
    if not chosen:
        raise UsageError("document defines no scenarios")
    routing = getattr(args, "routing", None)
    if routing:
        kind = ScenarioKind.UNICAST_SINGLE_PATH if routing == "single" else ScenarioKind.UNICAST_MULTIPATH
        for s in chosen:
            if not s.kind.unicast:
                raise UsageError(f"--routing applies to unicast scenarios only; {s.name} is {s.kind.value}")
        chosen = [replace(s, kind=kind) for s in chosen]
    return chosen


def _regions(args, lower):
    net, scenarios = _load(args)
    chosen = _select(args, scenarios)
    reports = [
        build_region(
            net, s, tol=args.tolerance, jobs=args.jobs, pairwise=args.pairwise,
            prune=args.prune, lower=lower,
        )
        for s in chosen
    ]
    text = dumps_report(reports, net, args.tolerance)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot_data:
        with open(args.plot_data, "w", encoding="utf-8", newline="") as fh:
            fh.write(plot_data(reports, net, args.delimiter))
    if args.figure:
        from .plotting import render_region

        for path, rep in zip(_figure_paths(args.figure, reports), reports):
            render_region(rep, path)
    return EXIT_OK


def _figure_paths(template, reports):
    if len(reports) == 1:
        return [template]
    if "{name}" not in template:
        stem, dot, ext = template.rpartition(".")
        template = f"{stem}-{{name}}.{ext}" if dot else f"{template}-{{name}}"
    return [template.format(name=r.scenario.name) for r in reports]


def cmd_region(args):
    return _regions(args, lower=False)


def cmd_flow(args):
    return _regions(args, lower=True)


def cmd_bound(args):
    net, scenarios = _load(args)
    if not args.scenario or len(args.scenario) != 1:
        raise UsageError("bound needs exactly one --scenario")
    (sc,) = _select(args, scenarios)
    report_labels, family = rate_families(sc, args.pairwise)
    try:
        subset = tuple(sorted({int(x) - 1 for x in args.subset.split(",")}))
    except ValueError:
        raise UsageError(f"bad --subset {args.subset!r}; use e.g. 1,2") from None
    if not subset or subset[0] < 0 or subset[-1] >= len(report_labels):
        raise UsageError(f"--subset indices must lie in 1..{len(report_labels)}")
    sc.check(net)
    cv = bound(net, family(subset), sc.kind.functional, args.tolerance)
    label = "+".join(report_labels[i] for i in subset)
    side_a = ",".join(cv.witness.sorted_a(net))
    print(f"{sc.name}: {label} <= {float(f'{cv.value:.12g}')!r}  [{cv.functional.value}; A={{{side_a}}}]")
    return EXIT_OK


def cmd_validate(args):
    try:
        text = _read(args.document)
    except OSError as exc:
        raise UsageError(f"cannot read {args.document}: {exc.strerror}") from None
    net, scenarios, problems = check_document(text)
    if problems:
        for p in problems:
            print(f"{args.document}: {p}", file=sys.stderr)
        return EXIT_INVALID
    print(f"ok: {len(net.points)} points, {len(net.edges)} edges, {len(scenarios)} scenarios")
    return EXIT_OK


def cmd_oracle(args):
    net, scenarios = _load(args)
    chosen = _select(args, scenarios)
    total = mismatches = 0
    for sc in chosen:
        rep = build_region(net, sc, tol=args.tolerance, jobs=args.jobs, pairwise=args.pairwise)
        for c in rep.constraints:
            ref = brute_force_bound(net, c.cut_constraint, rep.functional, args.tolerance, args.max_enum)
            total += 1
            if abs(ref.value - c.bound) > args.tolerance:
                mismatches += 1
                label = "+".join(rep.rate_labels[i] for i in c.subset)
                print(f"MISMATCH {sc.name} {label}: solver {c.bound!r} vs brute force {ref.value!r}")
    print(f"{mismatches} mismatches over {total} constraints")
    return EXIT_MISMATCH if mismatches else EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("document", help="network document (JSON), or - for stdin")
    common.add_argument("--tolerance", type=float, default=TOL, help="comparison tolerance (default %(default)g)")
    common.add_argument(
        "--max-enum", type=int, default=MAX_FREE_POINTS,
        help="brute-force limit on free points (default %(default)d)",
    )
    common.add_argument("--jobs", type=int, default=1, help="worker threads per scenario")
    common.add_argument(
        "--pairwise", action="store_true",
        help="multiple multicast: bound per sender-receiver pair rates instead of per-sender rates",
    )

    scen = argparse.ArgumentParser(add_help=False)
    scen.add_argument("--scenario", action="append", help="scenario name (repeatable; default all)")
    scen.add_argument(
        "--routing", choices=("single", "multi"),
        help="override the routing of unicast scenarios",
    )

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", help="write the report here instead of stdout")
    out.add_argument("--prune", action="store_true", help="drop inequalities implied by the others")
    out.add_argument("--plot-data", metavar="FILE", help="also write per-constraint rows as delimited text")
    out.add_argument("--delimiter", default="\t", help="plot-data delimiter (default: tab)")
    out.add_argument(
        "--figure", metavar="FILE",
        help="also render each region to FILE (png/pdf/svg; {name} expands to the scenario name)",
    )

    p = _Parser(prog="qnetcap", description="Capacity-region bounds for quantum networks.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    b = sub.add_parser("bound", parents=[common, scen], help="one inequality for a scenario and subset")
    b.add_argument("--subset", required=True, help="comma-separated 1-based rate indices, e.g. 1,2")
    b.set_defaults(func=cmd_bound)
    r = sub.add_parser("region", parents=[common, scen, out], help="full outer region report")
    r.set_defaults(func=cmd_region)
    f = sub.add_parser("flow", parents=[common, scen, out], help="region report plus flow lower bounds")
    f.set_defaults(func=cmd_flow)
    v = sub.add_parser("validate", parents=[common], help="check a network document")
    v.set_defaults(func=cmd_validate)
    o = sub.add_parser("oracle", parents=[common, scen], help="cross-check solvers against brute force")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.tolerance <= 0 or args.jobs < 1 or args.max_enum < 0:
        print("qnetcap: --tolerance must be > 0, --jobs >= 1, --max-enum >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qnetcap: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as exc:
        for p in exc.problems:
            print(f"{args.document}: {p}", file=sys.stderr)
        return EXIT_INVALID
    except CapacityError as exc:
        print(f"qnetcap: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (StructuralError, ConstraintError) as exc:
        print(f"qnetcap: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except QNetCapError as exc:
        print(f"qnetcap: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
