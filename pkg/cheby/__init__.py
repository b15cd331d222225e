import logging
from dataclasses import dataclass, field
from typing import Tuple

from config import Config
from cheby.models.function import ConjugatePair
from cheby.models.interval import Tolerance

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


@dataclass(frozen=True)
class Engine:
    """Settings shared by every command of one run."""
    tolerance: Tolerance
    exponents: Tuple[float, ...]
    pair1: float
    workers: int
    log_level: str = 'WARNING'
    config: type = field(default=Config, repr=False)

    def exponent_grid(self, exponents=None):
        return [ConjugatePair.from_p(p) for p in (exponents or self.exponents)]


def create_engine(config_class=Config):
    """Build the engine from a Config class and configure logging."""
    level = getattr(logging, str(config_class.LOG_LEVEL).upper(), logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT)

    engine = Engine(
        tolerance=Tolerance.from_config(config_class),
        exponents=tuple(config_class.DEFAULT_EXPONENTS),
        pair1=config_class.DEFAULT_PAIR1,
        workers=max(1, int(config_class.WORKERS)),
        log_level=logging.getLevelName(level),
        config=config_class,
    )
    logger.info(f"Engine ready: {engine.tolerance}, {engine.workers} workers")
    return engine
