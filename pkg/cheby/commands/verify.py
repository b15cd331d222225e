"""verify and table commands.

Both return (rows, exit status); the CLI owns the single report writer.
"""
import logging

from cheby.commands import EXIT_NUMERICAL_FAILURE, EXIT_OK, EXIT_VIOLATION
from cheby.models.function import ConjugatePair
from cheby.utils.cheb_bounds import verify
from cheby.utils.funcspace import corpus, make_named
from cheby.utils.report_writer import table_rows, verify_rows
from cheby.utils.sweep_tasks import sample_pairs, verify_corpus

logger = logging.getLogger(__name__)


def run_verify(config, engine):
    """Soundness sweep over a seeded corpus on config.interval."""
    functions = corpus(config.seed, config.corpus_size, config.interval)
    grid = engine.exponent_grid(config.exponents)
    pairs = sample_pairs(len(functions), config.seed)

    outcomes = verify_corpus(
        functions, config.interval, grid,
        tol=engine.tolerance,
        pairs=pairs,
        workers=config.workers,
        pair1=ConjugatePair.from_p(config.pair1),
    )
    rows = verify_rows(outcomes, grid)

    violated = [o for o in outcomes if o.record is not None and not o.record.passed]
    failed = [o for o in outcomes if o.error is not None]
    if violated:
        logger.warning(f"{len(violated)} pairs violate at least one bound")
        return rows, EXIT_VIOLATION
    if failed:
        return rows, EXIT_NUMERICAL_FAILURE
    return rows, EXIT_OK


def run_table(config, engine):
    """Every bound at every exponent for one named pair."""
    f_name, g_name = config.pair
    f = make_named(f_name, config.interval)
    g = make_named(g_name, config.interval)
    record = verify(
        f, g, config.interval, engine.exponent_grid(config.exponents),
        tol=engine.tolerance,
        pair1=ConjugatePair.from_p(config.pair1),
    )
    logger.info(f"Table for ({f.label}, {g.label}): |T| = {record.t_abs:.10g}")
    return table_rows(record), (EXIT_OK if record.passed else EXIT_VIOLATION)
