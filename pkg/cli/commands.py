"""
Command-line surface: count, turns, verify and paths
"""
import argparse
import logging
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from closedform.formulas import fuss_catalan
from config import (APP_NAME, APP_VERSION, DEFAULT_FORMAT, DEFAULT_METHOD, EXIT_BOUND,
                    EXIT_DISAGREEMENT, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, FORMATS,
                    KINDS, METHODS, VERIFY_K_MAX, VERIFY_MAX_LEVEL, VERIFY_N_MAX,
                    VERIFY_W_ORDER, VERIFY_WORKERS, VERIFY_Z_ORDER)
from errors import KDyckError, MethodDisagreementError, OracleBoundError, ParameterError
from oracle.enumerator import check_work_bound, enumerate_paths
from utils.calculator import TurnCalculator, compare_rows
from utils.file_manager import FileManager
from utils.report_writer import render_count, render_rows
from utils.verifier import Verifier

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description="Exact turn statistics of k-Dyck paths",
    )
    parser.add_argument('--version', action='version', version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument('--verbose', action='store_true', help="log progress to stderr")
    parser.add_argument('--debug', action='store_true', help="log everything to stderr")
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    count = commands.add_parser('count', help="number of k-Dyck paths with N up-steps")
    count.add_argument('--k', type=int, required=True)
    count.add_argument('--n', type=int, required=True)
    count.add_argument('--format', choices=['plain'] + FORMATS, default='plain')
    count.add_argument('--out', metavar='FILE', help="write to FILE instead of stdout")

    turns = commands.add_parser('turns', help="sums and averages of the s-th turn levels")
    turns.add_argument('--k', type=int, required=True)
    turns.add_argument('--n', type=int, required=True)
    turns.add_argument('--s', type=int, help="a single turn index")
    turns.add_argument('--s-from', type=int, help="first turn index (default 1)")
    turns.add_argument('--s-to', type=int, help="last turn index (default N)")
    turns.add_argument('--kind', choices=KINDS + ['all'], default='all')
    turns.add_argument('--method', choices=METHODS, default=DEFAULT_METHOD)
    turns.add_argument('--check-against', choices=METHODS, action='append', default=[],
                       metavar='METHOD', help="recompute with METHOD and fail on any difference")
    turns.add_argument('--format', choices=FORMATS, default=DEFAULT_FORMAT)
    turns.add_argument('--out', metavar='FILE', help="write to FILE instead of stdout")

    verify = commands.add_parser('verify', help="cross-check every method against the others")
    verify.add_argument('--k-max', type=int, default=VERIFY_K_MAX)
    verify.add_argument('--n-max', type=int, default=VERIFY_N_MAX)
    verify.add_argument('--z-order', type=int, default=VERIFY_Z_ORDER)
    verify.add_argument('--w-order', type=int, default=VERIFY_W_ORDER)
    verify.add_argument('--max-level', type=int, default=VERIFY_MAX_LEVEL)
    verify.add_argument('--workers', type=int, default=VERIFY_WORKERS)

    paths = commands.add_parser('paths', help="list k-Dyck paths in lexicographic order")
    paths.add_argument('--k', type=int, required=True)
    paths.add_argument('--n', type=int, required=True)
    paths.add_argument('--prefix', default='', help="only paths starting with these steps")
    paths.add_argument('--out', metavar='FILE', help="write to FILE instead of stdout")
    return parser


def _emit(text: str, out: Optional[str]) -> int:
    if not out:
        sys.stdout.write(text)
        return EXIT_OK
    success, message = FileManager.write_text(out, text)
    if not success:
        print(f"{APP_NAME}: error: {message}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _s_values(args) -> List[int]:
    if args.s is not None:
        if args.s_from is not None or args.s_to is not None:
            raise ParameterError("--s cannot be combined with --s-from/--s-to")
        return [args.s]
    s_from = 1 if args.s_from is None else args.s_from
    s_to = args.n if args.s_to is None else args.s_to
    if s_from > s_to:
        raise ParameterError(f"no turns to report: the range {s_from}..{s_to} is empty")
    return list(range(s_from, s_to + 1))


def cmd_count(args) -> int:
    count = fuss_catalan(args.k, args.n)
    return _emit(render_count(args.k, args.n, count, args.format), args.out)


def cmd_turns(args) -> int:
    kinds = KINDS if args.kind == 'all' else [args.kind]
    s_values = _s_values(args)
    calculator = TurnCalculator()
    rows = calculator.rows(args.method, args.k, args.n, s_values, kinds)
    for other in args.check_against:
        if other == args.method:
            continue
        logger.info("checking %d rows against method %s", len(rows), other)
        compare_rows(rows, calculator.rows(other, args.k, args.n, s_values, kinds), args.method, other)
    return _emit(render_rows(rows, args.format), args.out)


def cmd_verify(args) -> int:
    limits = {
        '--k-max': (args.k_max, 1), '--n-max': (args.n_max, 0), '--z-order': (args.z_order, 1),
        '--w-order': (args.w_order, 0), '--max-level': (args.max_level, 0), '--workers': (args.workers, 1),
    }
    for flag, (value, lowest) in limits.items():
        if value < lowest:
            raise ParameterError(f"{flag} must be >= {lowest}, got {value}")
    verifier = Verifier(args.k_max, args.n_max, args.z_order, args.w_order,
                        args.max_level, args.workers)
    verifier.run_all_checks()
    sys.stdout.write('\n'.join(verifier.report_lines()) + '\n')
    return verifier.exit_code()


def cmd_paths(args) -> int:
    check_work_bound(args.k, args.n)
    lines = [str(path) for path in enumerate_paths(args.k, args.n, args.prefix)]
    return _emit(''.join(f"{line}\n" for line in lines), args.out)


COMMANDS: Dict[str, Callable] = {
    'count': cmd_count,
    'turns': cmd_turns,
    'verify': cmd_verify,
    'paths': cmd_paths,
}


def _fail(error: Exception, code: int) -> int:
    print(f"{APP_NAME}: error: {error}", file=sys.stderr)
    return code


def dispatch(args) -> int:
    """Run a parsed command and map errors to exit codes"""
    try:
        return COMMANDS[args.command](args)
    except ParameterError as e:
        return _fail(e, EXIT_USAGE)
    except OracleBoundError as e:
        return _fail(e, EXIT_BOUND)
    except MethodDisagreementError as e:
        logger.error("methods disagree: %s", e)
        return _fail(e, EXIT_DISAGREEMENT)
    except KDyckError as e:
        logger.exception("internal consistency check failed")
        return _fail(e, EXIT_VERIFY_FAILED)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse and dispatch without touching logging; argparse exits become return codes"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return dispatch(args)
