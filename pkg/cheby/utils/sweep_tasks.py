"""Parallel verification sweeps over corpus pairs."""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from cheby.errors import ChebyError
from cheby.models.bounds import VerificationRecord
from cheby.utils.cheb_bounds import verify

logger = logging.getLogger(__name__)

# Corpus x corpus is sampled down to this many pairs
MAX_PAIRS = 100


@dataclass(frozen=True)
class PairOutcome:
    """Result of verifying one (f, g) pair; exactly one of record/error is set."""
    i: int
    j: int
    f_label: str
    g_label: str
    record: Optional[VerificationRecord] = None
    error: Optional[ChebyError] = None

    @property
    def passed(self):
        return self.record is not None and self.record.passed


def sample_pairs(count, seed, max_pairs=MAX_PAIRS):
    """All ordered index pairs of a corpus, sampled down to max_pairs."""
    pairs = [(i, j) for i in range(count) for j in range(count)]
    if len(pairs) <= max_pairs:
        return pairs
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(pairs), size=max_pairs, replace=False)
    return [pairs[k] for k in sorted(chosen.tolist())]


def _verify_pair(functions, i, j, iv, grid, tol, pair1):
    f, g = functions[i], functions[j]
    try:
        record = verify(f, g, iv, grid, tol, pair1)
        return PairOutcome(i, j, f.label, g.label, record=record)
    except ChebyError as e:
        logger.error(f"Verification failed for pair ({i}, {j}) {f.label} / {g.label}: {e}")
        return PairOutcome(i, j, f.label, g.label, error=e)


def verify_corpus(functions, iv, grid, tol=None, pairs=None, workers=1, pair1=None):
    """Verify every listed pair, fanning out to worker threads.

    Failures are logged and recorded, they never abort the sweep. Outcomes
    come back sorted by (i, j) whatever the completion order.
    """
    pairs = pairs if pairs is not None else sample_pairs(len(functions), seed=0)
    logger.info(f"Verifying {len(pairs)} pairs on {iv} with {workers} workers")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = [
            executor.submit(_verify_pair, functions, i, j, iv, grid, tol, pair1)
            for i, j in pairs
        ]
        outcomes = [future.result() for future in futures]
    outcomes.sort(key=lambda outcome: (outcome.i, outcome.j))

    failed = sum(1 for outcome in outcomes if not outcome.passed)
    if failed:
        logger.warning(f"{failed} of {len(outcomes)} pairs failed verification on {iv}")
    else:
        logger.info(f"All {len(outcomes)} pairs passed on {iv}")
    return outcomes
