"""Command-line front end.

    python main.py h 10^12 --json
    python main.py hj-table 50
    python main.py pif 2657 --weight identity
    python main.py verify --suite gaps --limit 10^5

Every subcommand writes its result to stdout and nothing else; notes and
errors go to stderr. The exit status is 0 on success, 2 on a usage error
and ``HPrimesError.exit_code`` (or 6 for a failed verification) otherwise.
"""

import argparse
import json
import re
import sys
from contextlib import contextmanager
from typing import Iterator, List, Optional, Sequence

from config import HConfig, PifConfig, SieveConfig
from src.core import Core
from src.errors import HPrimesError, ResourceError, VERIFICATION_FAILED_EXIT
from src.logger import ErrorEvent, logger
from src.models import FactoredH, Weight
from src.verify import SUITES

_POWER = re.compile(r"^(\d+)\s*(?:\^|\*\*)\s*(\d+)$")
_SCIENTIFIC = re.compile(r"^(\d+)[eE](\d+)$")


def parse_int(text: str) -> int:
    """An integer written plainly, as ``10^12``, ``10**12`` or ``1e12``."""
    text = text.strip().replace("_", "")
    sign = -1 if text.startswith("-") else 1
    body = text.lstrip("+-")
    if body.isdigit():
        return sign * int(body)
    match = _POWER.match(body)
    if match:
        return sign * int(match.group(1)) ** int(match.group(2))
    match = _SCIENTIFIC.match(body)
    if match:
        return sign * int(match.group(1)) * 10 ** int(match.group(2))
    raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    tuning = common.add_argument_group("tuning")
    tuning.add_argument("--y-factor", type=_positive_float, default=None,
                        help=f"y = factor * x^(1/3) in the prime-sum engine (default {PifConfig.Y_FACTOR})")
    tuning.add_argument("--block-size", type=parse_int, default=None,
                        help=f"sieve segment width (default {SieveConfig.BLOCK_SIZE})")
    tuning.add_argument("--memory-budget", type=parse_int, default=None,
                        help=f"bytes one sieve allocation may use (default {SieveConfig.MEMORY_BUDGET_BYTES})")
    tuning.add_argument("--expansion-budget", type=parse_int, default=None,
                        help=f"largest base prime --expand will multiply out (default {HConfig.EXPANSION_BUDGET})")
    tuning.add_argument("--small-n-threshold", type=parse_int, default=None,
                        help=f"n up to this value is read from the DP table (default {HConfig.SMALL_N_THRESHOLD})")
    tuning.add_argument("--delta-cap", type=parse_int, default=None,
                        help=f"largest shift tried by the accelerated G search (default {HConfig.DELTA_CAP})")
    tuning.add_argument("--threads", type=parse_int, default=None,
                        help=f"worker threads for independent inputs (default {HConfig.THREADS})")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="hprimes",
        description="Greatest product of distinct primes with sum at most n, and the tools behind it.",
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    cmd = commands.add_parser("h", parents=[common], help="h(n) in primorial-base form")
    cmd.add_argument("n", type=parse_int, nargs="+")
    cmd.add_argument("--expand", action="store_true", help="also multiply out the integer")
    cmd.add_argument("--log10", action="store_true", help="also report log10 h(n)")
    cmd.add_argument("--json", action="store_true", help="one JSON record per line")

    cmd = commands.add_parser("h-powers", parents=[common], help="h(10^a) for a = 1..A")
    cmd.add_argument("a", type=parse_int)
    cmd.add_argument("--expand", action="store_true")
    cmd.add_argument("--log10", action="store_true")
    cmd.add_argument("--json", action="store_true")

    cmd = commands.add_parser("hj-table", parents=[common], help="h_j(n) for 2 <= n <= NMAX")
    cmd.add_argument("nmax", type=parse_int)
    cmd.add_argument("--tsv", action="store_true", help="tab-separated instead of aligned columns")

    cmd = commands.add_parser("pif", parents=[common], help="sum of f(p) over primes p <= x")
    cmd.add_argument("x", type=parse_int)
    cmd.add_argument("--weight", choices=["unit", "identity"], default="identity")

    cmd = commands.add_parser("pi", parents=[common], help="number of primes <= x")
    cmd.add_argument("x", type=parse_int)

    cmd = commands.add_parser("g", parents=[common], help="G(p_k, m) as a fraction of primes")
    cmd.add_argument("p_k", type=parse_int)
    cmd.add_argument("m", type=parse_int)
    cmd.add_argument("--json", action="store_true")

    cmd = commands.add_parser("locate-k", parents=[common], help="p_k, sigma_k and p_{k+1} for n")
    cmd.add_argument("n", type=parse_int)
    cmd.add_argument("--json", action="store_true")

    cmd = commands.add_parser("verify", parents=[common], help="run property suites")
    cmd.add_argument("--suite", action="append", choices=sorted(SUITES), default=None,
                     help="suite to run; repeat for several (default: all)")
    cmd.add_argument("--limit", type=parse_int, default=None, help="domain bound for the selected suites")
    cmd.add_argument("--json", action="store_true")

    return parser


@contextmanager
def overrides(args: argparse.Namespace) -> Iterator[None]:
    """Apply tuning flags to the config classes, restoring them afterwards."""
    wanted = [
        (PifConfig, "Y_FACTOR", args.y_factor),
        (SieveConfig, "BLOCK_SIZE", args.block_size),
        (SieveConfig, "MEMORY_BUDGET_BYTES", args.memory_budget),
        (HConfig, "EXPANSION_BUDGET", args.expansion_budget),
        (HConfig, "SMALL_N_THRESHOLD", args.small_n_threshold),
        (HConfig, "DELTA_CAP", args.delta_cap),
        (HConfig, "THREADS", args.threads),
    ]
    saved = []
    try:
        for owner, name, value in wanted:
            if value is not None:
                saved.append((owner, name, getattr(owner, name)))
                setattr(owner, name, value)
        yield
    finally:
        for owner, name, value in reversed(saved):
            setattr(owner, name, value)


def describe(value: FactoredH) -> str:
    """Single-line text form of h(n)."""
    parts = [
        f"n={value.n}",
        f"base_prime={value.base_prime}",
        f"base_index={'' if value.base_index is None else value.base_index}",
        f"sigma_base={value.sigma_base}",
        f"numerator={','.join(map(str, value.numerator))}",
        f"denominator={','.join(map(str, value.denominator))}",
        f"ell={value.ell}",
    ]
    if value.delta is not None:
        parts += [f"delta={value.delta}", f"inner_evaluations={value.inner_evaluations}"]
    return " ".join(parts)


def _h_lines(core: Core, values: Sequence[FactoredH], args: argparse.Namespace) -> List[str]:
    lines = []
    for value in values:
        record = core.h_record(value, with_log10=args.log10)
        if args.expand:
            try:
                record["expanded"] = core.h_record(value, with_expansion=True)["expanded"]
            except ResourceError as e:
                print(f"note: h({value.n}) not expanded: {e}", file=sys.stderr)
        if args.json:
            lines.append(json.dumps(record))
        elif args.expand and "expanded" in record:
            lines.append(record["expanded"])
        else:
            line = describe(value)
            if "log10" in record:
                line += f" log10={record['log10']:.6f}"
            lines.append(line)
    return lines


def _run_command(core: Core, args: argparse.Namespace) -> int:
    command = args.command
    if command == "h":
        lines = _h_lines(core, core.h_many(args.n), args)
    elif command == "h-powers":
        if args.a < 1:
            raise argparse.ArgumentTypeError(f"h-powers needs A >= 1, got {args.a}")
        lines = _h_lines(core, core.h_many(10**a for a in range(1, args.a + 1)), args)
    elif command == "hj-table":
        lines = [core.hj_table(args.nmax).format_table(separator="\t" if args.tsv else None)]
    elif command == "pif":
        lines = [str(core.pif(args.x, Weight.from_name(args.weight)))]
    elif command == "pi":
        lines = [str(core.pif(args.x, Weight.from_name("unit")))]
    elif command == "g":
        fraction = core.g(args.p_k, args.m)
        if args.json:
            lines = [json.dumps(fraction.to_dict())]
        else:
            lines = [
                f"{fraction} s={fraction.s} ell={fraction.ell} method={fraction.method}"
                f" delta={'' if fraction.delta is None else fraction.delta}"
                f" inner_evaluations={'' if fraction.inner_evaluations is None else fraction.inner_evaluations}"
            ]
    elif command == "locate-k":
        location = core.locate_k(args.n)
        record = location.to_dict()
        record["n_prime"] = location.n_prime
        if args.json:
            lines = [json.dumps(record)]
        else:
            lines = [" ".join(f"{key}={'' if val is None else val}" for key, val in record.items())]
    else:
        reports = core.verify(args.suite, args.limit)
        if args.json:
            lines = [json.dumps(report.record()) for report in reports]
        else:
            lines = [report.render() for report in reports]
        for line in lines:
            print(line)
        return 0 if all(report.passed for report in reports) else VERIFICATION_FAILED_EXIT

    for line in lines:
        print(line)
    return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run one subcommand and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        with overrides(args):
            return _run_command(Core(threads=args.threads), args)
    except argparse.ArgumentTypeError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return 2
    except HPrimesError as e:
        logger.log(ErrorEvent(
            error_type=type(e).__name__,
            message=str(e),
            source=f"cli.{args.command}",
            context=" ".join(map(str, argv if argv is not None else sys.argv[1:])),
        ), "errors")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
