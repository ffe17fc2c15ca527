import random

import pytest

from arithring import Session, builtin
from arithring.config import RunConfig


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: randomized suites with many cases")


@pytest.fixture
def horizon():
    return 64


@pytest.fixture
def rng():
    """ Seeded so every run draws the same functions """
    return random.Random(20240601)


@pytest.fixture
def one(horizon):
    return builtin("one", horizon=horizon)


@pytest.fixture
def eps(horizon):
    return builtin("eps", horizon=horizon)


@pytest.fixture
def ind_2(horizon):
    return builtin("ind_p", 2, horizon=horizon)


@pytest.fixture
def clean_env(monkeypatch):
    for setting in RunConfig.DEFAULTS:
        monkeypatch.delenv(RunConfig.env_name(setting), raising=False)


@pytest.fixture
def session(clean_env):
    return Session(horizon=64)
