"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 malformed input,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .errors import AlgebraError, BudgetExceeded, InstanceParseError
from .families import family
from .instance import load_instance, parse_rows
from .solver import DEFAULT_BUDGET, solve
from .verify import identity_checks, instance_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

CHECK_ORDER = (
    "equation",
    "symmetry",
    "F_antisymmetry",
    "sine_addition",
    "membership",
    "invariance",
    "decomposition",
    "diagonal",
)


def _row(values):
    return " ".join(map(str, values))


def _load(path):
    try:
        return load_instance(path)
    except OSError as exc:
        raise InstanceParseError(0, f"cannot read {path}: {exc.strerror}") from None


def cmd_solve(args, out):
    inst = _load(args.instance)
    result = solve(inst, args.budget, seeded=args.seeded, workers=args.workers)
    print(f"solutions: {len(result.solutions)}", file=out)
    if not args.quiet:
        for f in result.solutions:
            print(_row(f), file=out)
    return EXIT_OK


def cmd_family(args, out):
    inst = _load(args.instance)
    members = family(inst, args.extension)
    print(f"family: {len(members)}", file=out)
    if not args.quiet:
        for f in members:
            print(_row(f), file=out)
    return EXIT_OK


def _format_checks(checks):
    words = []
    for name in CHECK_ORDER:
        if name not in checks:
            continue
        value = checks[name]
        if value is None:
            words.append(f"{name}=n/a")
        elif value:
            words.append(f"{name}=ok")
        elif name == "equation":
            words.append(f"equation=FAIL{checks['violation']}".replace(" ", ""))
        else:
            words.append(f"{name}=FAIL")
    return " ".join(words)


def cmd_verify(args, out):
    inst = _load(args.instance)
    try:
        text = Path(args.solutions).read_text()
    except OSError as exc:
        raise InstanceParseError(0, f"cannot read {args.solutions}: {exc.strerror}") from None
    rows = parse_rows(text, inst.cells)
    failed = 0
    for k, f in enumerate(rows, 1):
        checks = identity_checks(inst, f, args.extension)
        ok = all(v is not False for k2, v in checks.items() if k2 != "violation")
        failed += not ok
        if not args.quiet or not ok:
            status = "pass" if ok else "FAIL"
            print(f"row {k}: {status} {_format_checks(checks)}", file=out)
    print(f"checked: {len(rows)} failed: {failed}", file=out)
    return EXIT_FAIL if failed else EXIT_OK


REPORT_HEADER = (
    f"{'instance':<36} {'equation':<9} {'|S|':>3} {'carrier':<8} "
    f"{'brute':>5} {'family':>6} {'common':>6} {'relation':<15} {'ext':>3} checks"
)


def cmd_report(args, out):
    directory = Path(args.directory)
    if not directory.is_dir():
        raise InstanceParseError(0, f"{directory} is not a directory")
    paths = sorted(directory.glob("*.inst"), key=lambda p: p.name)
    status = EXIT_OK
    if not args.quiet:
        print(REPORT_HEADER, file=out)
    counts = {"equal": 0, "other": 0, "skipped": 0, "invalid": 0}
    for path in paths:
        name = path.stem
        try:
            inst = load_instance(path)
        except InstanceParseError as exc:
            counts["invalid"] += 1
            status = EXIT_INPUT
            if not args.quiet:
                print(f"{name:<36} invalid ({exc})", file=out)
            continue
        rep = instance_report(inst, args.budget, args.seeded, args.extension, args.workers)
        carrier = inst.carrier.name.replace(" ", "")
        prefix = f"{name:<36} {inst.kind:<9} {inst.S.size:>3} {carrier:<8}"
        if rep.skipped:
            counts["skipped"] += 1
            if not args.quiet:
                print(f"{prefix} skipped (budget {args.budget} exceeded)", file=out)
            continue
        counts["equal" if rep.relation == "equal" else "other"] += 1
        ext = "-" if rep.extension_used is None else str(rep.extension_used)
        checks = "ok" if rep.failures == 0 else f"{rep.failures}-failed"
        if rep.failures and status == EXIT_OK:
            status = EXIT_FAIL
        if not args.quiet:
            print(
                f"{prefix} {rep.brute_force:>5} {rep.family:>6} {rep.common:>6} "
                f"{rep.relation:<15} {ext:>3} {checks}",
                file=out,
            )
    print(
        f"instances: {len(paths)} equal: {counts['equal']} other: {counts['other']} "
        f"skipped: {counts['skipped']} invalid: {counts['invalid']}",
        file=out,
    )
    return status


def build_parser():
    parser = argparse.ArgumentParser(
        prog="involeq",
        description="Solve and verify functional equations with involutions on finite semigroups.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, search=False):
        p.add_argument("--quiet", action="store_true", help="print summaries only")
        p.add_argument("--extension", action="store_true",
                       help="allow d'Alembert witnesses over the quadratic extension field")
        if search:
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
            p.add_argument("--seeded", action="store_true",
                           help="merge cells forced equal before searching")
            p.add_argument("--workers", type=int, default=1, help="search processes")

    p = sub.add_parser("solve", help="list every solution of an instance")
    p.add_argument("instance")
    common(p, search=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("family", help="list the closed-form family of an instance")
    p.add_argument("instance")
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="check solution rows against an instance")
    p.add_argument("instance")
    p.add_argument("solutions")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="completeness report over a directory of instances")
    p.add_argument("directory")
    common(p, search=True)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except InstanceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AlgebraError as exc:
        # e.g. solution values outside the carrier
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
