"""
Command line front end.

Exit codes: 0 success, 1 failed verification or undecodable digits,
2 usage or domain error. Data goes to stdout, diagnostics to stderr.
"""
import argparse
import sys
from typing import List, Optional

from . import VERSION
from .Congruence import bezout_table_formula, crt_solve, extended_gcd_pow, verify_link
from .Errors import DomainError, InvalidExpansion, InvariantViolation, UnsupportedCase, UsageError
from .FixedPoints import EXTENDED_CHECK_BOUND, generate_j2_sequence, generate_sequence
from .FracBase import BASE_3_2, Expansion, decode, encode, format_base
from .Input import Input
from .Josephus import Methods, SurvivorQuery, is_fixed_point, survivor
from .Logger import Logger, Types
from .Table import OutputFormat, Table
from . import Verify

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

INTEGER = Input.Parse.converter(Input.Parse.Types.INTEGER)
NATURAL = Input.Parse.converter(Input.Parse.Types.NATURAL)
POSITIVE = Input.Parse.converter(Input.Parse.Types.POSITIVE)
BASE = Input.Parse.converter(Input.Parse.Types.BASE)


class ArgumentParser(argparse.ArgumentParser):
    """
    argparse parser that raises UsageError instead of exiting, so main() can
    map every failure to an exit code in one place.
    """

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def emit(table: Table, fmt: str):
    sys.stdout.write(table.render(fmt))


def cmd_survivor(args) -> int:
    query = SurvivorQuery(args.n, args.k)
    print(survivor(query, args.method))
    return EXIT_OK


def cmd_fixed_points(args) -> int:
    records = generate_j2_sequence(args.count) if args.j2 else generate_sequence(args.count)
    header = ["ell", "n", "m_bar"] + (["expansion"] if args.expansion else [])
    # json rows and J_2 rows name their base so from_row can rebuild them
    if args.expansion and (args.j2 or args.format == OutputFormat.JSON):
        header.append("base")
    table = Table(header, [[row[key] for key in header] for row in (record.as_row() for record in records)])
    emit(table, args.format)

    if args.verify_bound is None:
        return EXIT_OK
    if args.verify_bound > EXTENDED_CHECK_BOUND:
        raise DomainError(f"--verify-bound is limited to {EXTENDED_CHECK_BOUND}")
    k = 2 if args.j2 else 3
    checked = [record for record in records if record.n <= args.verify_bound]
    failures = [record for record in checked if not is_fixed_point(record.n, k)]
    for record in failures:
        Logger.error(f"l={record.ell}: J_{k}({record.n}) != {record.n}", "VERIFY")
    if failures:
        return EXIT_FAILED
    Logger.success(f"{len(checked)}/{len(checked)} values <= {args.verify_bound} are fixed points of J_{k}", "VERIFY")
    return EXIT_OK


def cmd_encode(args) -> int:
    expansion = encode(args.n, args.base)
    if args.format == OutputFormat.TEXT:
        print(expansion)
    else:
        emit(Table(["n", "base", "digits"], [[str(args.n), format_base(args.base), str(expansion)]]), args.format)
    return EXIT_OK


def cmd_decode(args) -> int:
    value = decode(Expansion.parse(args.digits, args.base))
    if args.format == OutputFormat.TEXT:
        print(value)
    else:
        emit(Table(["digits", "base", "n"], [[args.digits, format_base(args.base), str(value)]]), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite in ("crt", "all") and args.ell_max < 3:
        raise UsageError("--ell-max must be >= 3 for the crt suite")
    results = Verify.run(args.suite, args.ell_max)
    if args.format == OutputFormat.TEXT:
        for result in results:
            line = f"{'PASS' if result.ok else 'FAIL'} {result.suite}/{result.check} {result.passed}/{result.total}"
            if result.skipped:
                line += f" ({result.skipped} skipped)"
            print(line)
    else:
        emit(Table.from_dicts([result.as_row() for result in results]), args.format)
    return EXIT_OK if all(result.ok for result in results) else EXIT_FAILED


def cmd_link(args) -> int:
    records = generate_sequence(args.ell + 2)
    report = verify_link(args.ell, records)
    if args.format == OutputFormat.TEXT:
        if not report.applicable:
            print(f"l={report.ell} p={report.p} q={report.q} skipped (p*q = 0)")
        else:
            link = report.link
            print(f"l={report.ell} n={report.n} p={report.p} q={report.q} a1={link.a1} a2={link.a2} "
                  f"x={link.bezout.x} y={link.bezout.y} z={link.raw_z} = {link.z} (mod {link.modulus})")
            for name, outcome in report.checks.items():
                print(f"  {'PASS' if outcome else 'FAIL'} {name}")
            print(f"  quotient {report.quotient}")
    else:
        emit(Table.from_dicts([report.as_json()]), args.format)
    return EXIT_FAILED if report.applicable and not report.passed else EXIT_OK


def cmd_crt(args) -> int:
    link = crt_solve(args.p, args.q)
    emit(Table(["p", "q", "a1", "a2", "x", "y", "raw_z", "z", "modulus"],
               [[link.p, link.q, str(link.a1), str(link.a2), str(link.bezout.x), str(link.bezout.y),
                 str(link.raw_z), str(link.z), str(link.modulus)]]), args.format)
    return EXIT_OK


def cmd_bezout(args) -> int:
    pair = bezout_table_formula(args.p, args.q) if args.table else extended_gcd_pow(args.p, args.q)
    emit(Table(["p", "q", "x", "y"], [[pair.p, pair.q, str(pair.x), str(pair.y)]]), args.format)
    return EXIT_OK


def build_parser() -> ArgumentParser:
    """
    Build the argument parser with one subcommand per operation.

    Returns:
    - ArgumentParser: The configured parser.
    """
    parser = ArgumentParser(prog="josephus-fixed", description="Fixed points of the Josephus function and base 3/2 expansions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Print debug diagnostics on stderr.")
    verbosity.add_argument("--quiet", action="store_true", help="Only print errors on stderr.")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def add_format(sub, default=OutputFormat.TEXT):
        sub.add_argument("--format", choices=OutputFormat.ALL, default=default, help=f"Output format (default: {default}).")

    sub = commands.add_parser("survivor", help="Survivor seat J_k(n).")
    sub.add_argument("--n", type=INTEGER, required=True, help="Number of people.")
    sub.add_argument("--k", type=INTEGER, default=3, help="Elimination step (default: 3).")
    sub.add_argument("--method", choices=Methods.ALL, default=Methods.RECURRENCE, help="Computation to use (default: recurrence).")
    sub.set_defaults(handler=cmd_survivor)

    sub = commands.add_parser("fixed-points", help="Table of fixed points of J_3 (or J_2 with --j2).")
    sub.add_argument("--count", type=POSITIVE, default=20, help="Number of rows (default: 20).")
    sub.add_argument("--expansion", action=argparse.BooleanOptionalAction, default=True, help="Include the expansion column.")
    sub.add_argument("--verify-bound", type=NATURAL, default=None, help="Check J_k(n) = n for every n up to this bound.")
    sub.add_argument("--j2", action="store_true", help="Fixed points 2^l - 1 of J_2 with binary expansions.")
    add_format(sub, OutputFormat.CSV)
    sub.set_defaults(handler=cmd_fixed_points)

    sub = commands.add_parser("encode", help="Canonical expansion of n in base a/b.")
    sub.add_argument("n", type=NATURAL, help="Non-negative integer.")
    sub.add_argument("--base", type=BASE, default=BASE_3_2, help="Base a/b (default: 3/2).")
    add_format(sub)
    sub.set_defaults(handler=cmd_encode)

    sub = commands.add_parser("decode", help="Value of a canonical digit string in base a/b.")
    sub.add_argument("digits", help="Digits, most significant first (comma separated when a > 10).")
    sub.add_argument("--base", type=BASE, default=BASE_3_2, help="Base a/b (default: 3/2).")
    add_format(sub)
    sub.set_defaults(handler=cmd_decode)

    sub = commands.add_parser("verify", help="Reproduce the reference tables and properties.")
    sub.add_argument("--suite", choices=["tables", "theorem", "crt", "all"], default="all", help="Suite to run (default: all).")
    sub.add_argument("--ell-max", type=POSITIVE, default=Verify.DEFAULT_ELL_MAX, help=f"Largest index checked (default: {Verify.DEFAULT_ELL_MAX}).")
    add_format(sub)
    sub.set_defaults(handler=cmd_verify)

    sub = commands.add_parser("link", help="Congruence check of n^(l+1) for one l.")
    sub.add_argument("--ell", type=POSITIVE, required=True, help="Index l.")
    add_format(sub)
    sub.set_defaults(handler=cmd_link)

    sub = commands.add_parser("crt", help="Solve the congruence pair for given p and q.")
    sub.add_argument("--p", type=POSITIVE, required=True)
    sub.add_argument("--q", type=POSITIVE, required=True)
    add_format(sub)
    sub.set_defaults(handler=cmd_crt)

    sub = commands.add_parser("bezout", help="Bezout pair for 3^p and 2^q.")
    sub.add_argument("--p", type=POSITIVE, required=True)
    sub.add_argument("--q", type=POSITIVE, required=True)
    sub.add_argument("--table", action="store_true", help="Use the closed-form case table (q <= 5).")
    add_format(sub)
    sub.set_defaults(handler=cmd_bezout)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv and run the selected command.

    Args:
    - argv (List[str], optional): Arguments without the program name (default: sys.argv[1:]).

    Returns:
    - int: The exit code.
    """
    previous_level = Logger.level
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            Logger.setLevel(Types.DEBUG)
        elif args.quiet:
            Logger.setLevel(Types.ERROR)
        return args.handler(args)
    except InvalidExpansion as error:
        Logger.error(f"invalid expansion {error.digits!r} at position {error.position}: {error}", "DECODE")
        return EXIT_FAILED
    except InvariantViolation as error:
        Logger.error(str(error), "INVARIANT")
        return EXIT_FAILED
    except (UsageError, DomainError, UnsupportedCase) as error:
        Logger.error(str(error), "USAGE")
        return EXIT_USAGE
    finally:
        Logger.level = previous_level


def run():
    sys.exit(main())
