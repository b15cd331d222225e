"""Command-line run configuration."""
from dataclasses import dataclass
from typing import Optional, Tuple

from cheby.errors import DomainError
from cheby.models.function import INF
from cheby.models.interval import Interval

COMMANDS = ('verify', 'table', 'example1', 'search', 'witnesses')
FORMATS = ('json', 'csv')


@dataclass(frozen=True)
class RunConfig:
    command: str
    interval: Interval
    seed: int = 1
    corpus_size: int = 20
    exponents: Tuple[float, ...] = (1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0, INF)
    output_path: Optional[str] = None
    format: str = 'json'
    epsilons: Tuple[float, ...] = (0.25, 0.1, 0.05, 0.01)
    iterations: int = 200
    pair: Tuple[str, str] = ('identity', 'identity')
    pair1: float = 2.0
    workers: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"Unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise DomainError(f"Unknown format {self.format!r}")
        if self.corpus_size < 1:
            raise DomainError(f"corpus size must be >= 1, got {self.corpus_size}")
        if self.iterations < 1:
            raise DomainError(f"iterations must be >= 1, got {self.iterations}")
        if not self.exponents:
            raise DomainError("exponent list is empty")
        for p in self.exponents:
            if not (p == 1 or p == INF or p > 1):
                raise DomainError(f"exponents must be > 1, 1 or inf, got {p}")
        if not self.pair1 > 1:
            raise DomainError(f"pair1 exponent must be > 1, got {self.pair1}")
        for eps in self.epsilons:
            if not 0 < eps < 0.5:
                raise DomainError(f"epsilon must lie in (0, 1/2), got {eps}")

    def summary(self):
        """Configuration echoed into every report."""
        return {
            'command': self.command,
            'interval': [self.interval.a, self.interval.b],
            'seed': self.seed,
            'corpus': self.corpus_size,
            'p': list(self.exponents),
            'eps': list(self.epsilons),
            'iterations': self.iterations,
            'pair': list(self.pair),
            'pair1': self.pair1,
        }
