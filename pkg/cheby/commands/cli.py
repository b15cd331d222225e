"""Command-line surface: python run.py <command> [options]."""
import argparse
import logging

from config import Config
from cheby import create_engine
from cheby.commands import EXIT_INVALID_CONFIG, EXIT_NUMERICAL_FAILURE
from cheby.commands.studies import run_example1, run_search, run_witnesses
from cheby.commands.verify import run_table, run_verify
from cheby.errors import ChebyError, DomainError
from cheby.models.interval import Interval
from cheby.models.run import COMMANDS, FORMATS, RunConfig
from cheby.utils import parse_exponent
from cheby.utils.funcspace import NAMED_FUNCTIONS
from cheby.utils.report_writer import write_error, write_report

logger = logging.getLogger(__name__)

HANDLERS = {
    'verify': run_verify,
    'table': run_table,
    'example1': run_example1,
    'search': run_search,
    'witnesses': run_witnesses,
}

HELP = {
    'verify': 'check every bound on a seeded corpus of function pairs',
    'table': 'all bounds at all exponents for one named pair',
    'example1': 'ramp counterexample over an epsilon grid',
    'search': 'random-restart search for the best constant C(p, q)',
    'witnesses': 'ratios of the known equality cases',
}


class CommandLineParser(argparse.ArgumentParser):
    """Raises DomainError instead of exiting, so usage errors get an error record."""

    def error(self, message):
        raise DomainError(message)


def exponent(text):
    return parse_exponent(text)


def _common_options():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--interval', nargs=2, type=float, default=[0.0, 1.0], metavar=('A', 'B'),
                        help='integration interval (default: 0 1)')
    parent.add_argument('--seed', type=int, default=1, help='corpus and search seed (default: %(default)d)')
    parent.add_argument('--corpus', type=int, default=20, metavar='N',
                        help='number of corpus functions (default: %(default)d)')
    parent.add_argument('--p', nargs='+', type=exponent, metavar='P',
                        help="exponents, 'inf' allowed (default: CHEBY_DEFAULT_P)")
    parent.add_argument('--eps', nargs='+', type=float, metavar='EPS', help='epsilon grid for example1')
    parent.add_argument('--iterations', type=int, default=200, metavar='N',
                        help='random restarts per exponent pair (default: %(default)d)')
    parent.add_argument('--pair', nargs=2, choices=NAMED_FUNCTIONS, default=['identity', 'identity'],
                        metavar=('F', 'G'), help=f"named pair for table: {', '.join(NAMED_FUNCTIONS)}")
    parent.add_argument('--pair1', type=float, metavar='P1',
                        help='secondary exponent for PPgamma and Thm7 (default: CHEBY_DEFAULT_PAIR1)')
    group = parent.add_argument_group('Output')
    group.add_argument('--out', metavar='PATH', help='report file, stdout when omitted or -')
    group.add_argument('--format', choices=FORMATS, default='json', help='report format (default: %(default)s)')
    group = parent.add_argument_group('Run')
    group.add_argument('--workers', type=int, metavar='N', help='worker threads (default: CHEBY_WORKERS)')
    group.add_argument('--log-level', dest='log_level', metavar='LEVEL',
                       help='logging level (default: CHEBY_LOG_LEVEL)')
    return parent


def build_parser():
    parser = CommandLineParser(
        prog='cheby',
        description='Evaluate and verify Lp bounds on the Čebyšev functional T(f, g).',
    )
    subparsers = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')
    parent = _common_options()
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[parent], help=HELP[command], description=HELP[command])
    return parser


def _settings(args, config_class=Config):
    """Config subclass carrying the command-line overrides of the log level."""
    if not args.log_level:
        return config_class
    return type('RunSettings', (config_class,), {'LOG_LEVEL': args.log_level.upper()})


def config_from_args(args, engine):
    """Translate parsed arguments into a validated RunConfig.

    Raises:
        DomainError: on any invalid value
    """
    options = {
        'command': args.command,
        'interval': Interval(*args.interval),
        'seed': args.seed,
        'corpus_size': args.corpus,
        'exponents': tuple(args.p) if args.p else tuple(engine.exponents),
        'output_path': args.out,
        'format': args.format,
        'iterations': args.iterations,
        'pair': tuple(args.pair),
        'pair1': engine.pair1 if args.pair1 is None else args.pair1,
        'workers': engine.workers if args.workers is None else max(1, args.workers),
    }
    if args.eps:
        options['epsilons'] = tuple(args.eps)
    return RunConfig(**options)


def _report_error(command, error, path=None):
    """Error record to path, falling back to stderr when path is unwritable."""
    try:
        write_error(command, error, path)
    except OSError:
        write_error(command, error)


def run(config, engine):
    """Execute one command and write its report.

    Returns:
        Exit status: 0 when no applicable inequality is violated, 1 on a
        violation, 2 for invalid configuration, 3 for a numerical failure
    """
    handler = HANDLERS[config.command]
    logger.info(f"Running {config.command} on {config.interval}")
    try:
        rows, status = handler(config, engine)
    except DomainError as e:
        logger.error(f"{config.command}: invalid configuration: {e}")
        _report_error(config.command, e, config.output_path)
        return EXIT_INVALID_CONFIG
    except ChebyError as e:
        logger.error(f"{config.command}: numerical failure: {e}")
        _report_error(config.command, e, config.output_path)
        return EXIT_NUMERICAL_FAILURE

    try:
        write_report(config.command, rows, config.format, config.output_path, config.summary())
    except OSError as e:
        logger.error(f"Cannot write report to {config.output_path}: {e}")
        write_error(config.command, e)
        return EXIT_INVALID_CONFIG
    return status


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except DomainError as e:
        write_error(None, e)
        return EXIT_INVALID_CONFIG

    engine = create_engine(_settings(args))
    try:
        config = config_from_args(args, engine)
    except DomainError as e:
        _report_error(args.command, e, args.out)
        return EXIT_INVALID_CONFIG
    return run(config, engine)
