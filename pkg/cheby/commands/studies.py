"""example1, search and witnesses commands."""
import logging

from cheby.commands import EXIT_OK, EXIT_VIOLATION
from cheby.models.bounds import VIOLATION_TOL
from cheby.models.function import ConjugatePair, RampKind
from cheby.models.study import SearchConfig
from cheby.utils.report_writer import example1_rows, search_rows, witness_rows
from cheby.utils.sharpness import equality_witnesses, example1, search_best_constant

logger = logging.getLogger(__name__)


def run_example1(config, engine):
    # The ramp pair lives on [0, 1]; --interval does not apply
    reports = [
        example1(epsilon, kind, engine.tolerance)
        for epsilon in config.epsilons
        for kind in RampKind
    ]
    return example1_rows(reports), EXIT_OK


def run_search(config, engine):
    """Best-constant search per exponent pair, on [0, 1].

    The ratio is only length-free on the unit interval, so --interval is
    ignored. A best ratio above the proved ceiling counts as a violation.
    """
    search = SearchConfig(seed=config.seed, iterations=config.iterations, workers=config.workers)
    studies = []
    for p in config.exponents:
        studies.append(search_best_constant(ConjugatePair.from_p(p), search, tol=engine.tolerance))

    status = EXIT_OK
    for study in studies:
        if not study.below_ceiling:
            logger.error(f"{study.exponents.label()}: best ratio {study.best_ratio:.10g} above {study.ceiling:.10g}")
            status = EXIT_VIOLATION
    return search_rows(studies, config), status


def run_witnesses(config, engine):
    witnesses = equality_witnesses(engine.tolerance)
    status = EXIT_OK
    for witness in witnesses:
        if witness.ratio > 1.0 + VIOLATION_TOL:
            logger.error(f"{witness.bound_id.value} exceeded by {witness.f.label} / {witness.g.label}: ratio {witness.ratio:.12g}")
            status = EXIT_VIOLATION
    return witness_rows(witnesses), status
