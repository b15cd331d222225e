from cheby.models.interval import Interval, Tolerance, QuadResult
from cheby.models.function import (
    INF, ConjugatePair, FunctionSpec, RampKind, RampVariant, TRoute, TValue, conjugate, format_exponent,
)
from cheby.models.bounds import BoundId, BoundEvaluation, NormFactor, SubintervalGeometry, VerificationRecord
from cheby.models.study import Candidate, Example1Report, RatioStudy, SearchConfig, Witness
from cheby.models.run import RunConfig

__all__ = [
    'Interval', 'Tolerance', 'QuadResult',
    'INF', 'ConjugatePair', 'FunctionSpec', 'RampKind', 'RampVariant', 'TRoute', 'TValue', 'conjugate', 'format_exponent',
    'BoundId', 'BoundEvaluation', 'NormFactor', 'SubintervalGeometry', 'VerificationRecord',
    'Candidate', 'Example1Report', 'RatioStudy', 'SearchConfig', 'Witness',
    'RunConfig',
]
