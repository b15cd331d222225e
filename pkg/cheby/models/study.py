"""Sharpness study results."""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from cheby.models.bounds import BoundId
from cheby.models.function import ConjugatePair, FunctionSpec, RampKind

SEARCH_FAMILIES = ('trig', 'ramp', 'poly')


@dataclass(frozen=True)
class SearchConfig:
    """Random-restart search settings.

    Args:
        seed: Master seed, each restart derives its own generator from (seed, index)
        iterations: Number of random restarts
        families: Parametric families drawn for f and g
        refine_top: Best restarts overall handed to the Nelder-Mead refinement
        refine_per_family: Best restarts of each (f, g) family combination also refined
        max_evaluations: Function evaluations allowed per Nelder-Mead run
        anchors: Start from the known near-extremal members as well
        workers: Threads used for the restarts
    """
    seed: int = 0
    iterations: int = 200
    families: Tuple[str, ...] = SEARCH_FAMILIES
    refine_top: int = 3
    refine_per_family: int = 2
    max_evaluations: int = 400
    anchors: bool = True
    workers: int = 1


@dataclass(frozen=True)
class Candidate:
    """One evaluated point of the search space."""
    f_family: str
    g_family: str
    params: Tuple[float, ...]
    ratio: float
    restart: int = -1

    @property
    def families(self):
        return f"{self.f_family}/{self.g_family}"


@dataclass(frozen=True)
class RatioStudy:
    bound_id: BoundId
    exponents: ConjugatePair
    samples: Tuple[Candidate, ...]
    best_ratio: float
    best_params: Tuple[float, ...]
    best_families: str
    ceiling: float

    @property
    def below_ceiling(self):
        return self.best_ratio <= self.ceiling + 1e-6


@dataclass(frozen=True)
class Example1Report:
    epsilon: float
    variant: RampKind
    t_value: float
    t_parts: float
    closed_form: float
    norms: Dict[str, float] = field(default_factory=dict)
    ratio_inf_1: float = 0.0
    ratio_1_inf: float = 0.0


@dataclass(frozen=True)
class Witness:
    bound_id: BoundId
    f: FunctionSpec
    g: FunctionSpec
    exponents: Optional[ConjugatePair]
    t_value: float
    bound_value: float
    ratio: float
    note: str = ''
