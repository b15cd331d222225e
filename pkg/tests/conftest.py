import pytest

from cheby.models.interval import Interval, Tolerance
from cheby.utils.funcspace import make_identity, make_polynomial, make_ramp, make_trig


@pytest.fixture
def unit():
    return Interval.unit()


@pytest.fixture
def shifted():
    return Interval(-1.0, 3.0)


@pytest.fixture
def tol():
    return Tolerance.default()


@pytest.fixture
def identity(unit):
    return make_identity(unit)


@pytest.fixture
def square(unit):
    return make_polynomial([0.0, 0.0, 1.0], unit, label='x^2')


@pytest.fixture
def cosine(unit):
    return make_trig(1, 0.0, unit)


@pytest.fixture
def ramp(unit):
    return make_ramp(0.1, 0.5, unit)
