"""
k-Dyck turn statistics
Main entry point
"""
import logging
import sys

from cli.commands import build_parser, dispatch
from config import EXIT_USAGE, LOG_FORMAT, LOG_LEVEL, get_log_file


def configure_logging(verbose: bool = False, debug: bool = False) -> None:
    """Log to stderr, and to KDYCK_LOG_FILE when it is set"""
    level = logging.DEBUG if debug else logging.INFO if verbose else LOG_LEVEL
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = get_log_file()
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers)


def main(argv=None) -> int:
    """Main application entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(args.verbose, args.debug)
    logging.getLogger(__name__).debug("running command %s", args.command)
    return dispatch(args)


if __name__ == '__main__':
    sys.exit(main())
