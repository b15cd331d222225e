import importlib
import math

import pytest

import config
from cheby import create_engine
from cheby.models.interval import Tolerance


@pytest.fixture
def reload_config(monkeypatch):
    def load(**env):
        for key, value in env.items():
            monkeypatch.setenv(key, value)
        return importlib.reload(config).Config
    yield load
    monkeypatch.undo()
    importlib.reload(config)


def test_defaults(reload_config, monkeypatch):
    for key in ('CHEBY_ABS_TOL', 'CHEBY_REL_TOL', 'CHEBY_MAX_SUBDIV', 'CHEBY_DEFAULT_P', 'CHEBY_LOG_LEVEL'):
        monkeypatch.delenv(key, raising=False)
    settings = reload_config()
    assert Tolerance.from_config(settings) == Tolerance.default()
    assert settings.DEFAULT_EXPONENTS == [1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0, math.inf]
    assert settings.LOG_LEVEL == 'WARNING'
    assert settings.WORKERS >= 1


def test_max_subdivisions_override(reload_config):
    settings = reload_config(CHEBY_MAX_SUBDIV='50')
    assert Tolerance.from_config(settings).max_subdivisions == 50


def test_invalid_max_subdivisions_falls_back(reload_config, capsys):
    settings = reload_config(CHEBY_MAX_SUBDIV='beaucoup')
    assert settings.MAX_SUBDIVISIONS == 2000
    assert 'CHEBY_MAX_SUBDIV' in capsys.readouterr().err


def test_exponent_grid_and_engine(reload_config):
    settings = reload_config(CHEBY_DEFAULT_P='2, inf', CHEBY_WORKERS='3', CHEBY_LOG_LEVEL='info')
    engine = create_engine(settings)
    assert engine.exponents == (2.0, math.inf)
    assert engine.workers == 3
    assert engine.log_level == 'INFO'
    assert [pair.q for pair in engine.exponent_grid()] == [2.0, 1.0]


@pytest.mark.parametrize('name, raw, attribute, default', [
    ('CHEBY_ABS_TOL', 'petit', 'ABS_TOL', 1e-11),
    ('CHEBY_REL_TOL', '-1e-3', 'REL_TOL', 1e-10),
    ('CHEBY_MAX_SUBDIV', '0', 'MAX_SUBDIVISIONS', 2000),
    ('CHEBY_DEFAULT_P', '2,deux', 'DEFAULT_EXPONENTS', [1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0, math.inf]),
    ('CHEBY_DEFAULT_P', ' , ', 'DEFAULT_EXPONENTS', [1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0, math.inf]),
    ('CHEBY_DEFAULT_PAIR1', 'alpha', 'DEFAULT_PAIR1', 2.0),
])
def test_invalid_values_fall_back(reload_config, capsys, name, raw, attribute, default):
    settings = reload_config(**{name: raw})
    assert getattr(settings, attribute) == default
    assert name in capsys.readouterr().err


def test_invalid_workers_fall_back(reload_config, capsys):
    settings = reload_config(CHEBY_WORKERS='plusieurs')
    assert settings.WORKERS >= 1
    assert 'CHEBY_WORKERS' in capsys.readouterr().err
