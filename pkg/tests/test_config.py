import os

import mock
import pytest

from arithring.config import RunConfig
from arithring.errors import HorizonTooLarge, InvalidParameter


def test_repr(clean_env):
    assert repr(RunConfig()) == "<RunConfig horizon:1024 output:table>"


def test_defaults(clean_env):
    assert RunConfig().as_dict() == RunConfig.DEFAULTS


def test_env_name():
    assert RunConfig.env_name("degree_cap") == "ARITHRING_DEGREE_CAP"


class TestResolution:
    def test_argument_wins(self, clean_env):
        with mock.patch.dict(os.environ, {"ARITHRING_HORIZON": "32"}):
            assert RunConfig(horizon=16).horizon == 16

    def test_environment(self, clean_env):
        env = {"ARITHRING_HORIZON": " 256 ", "ARITHRING_OUTPUT": "json"}
        with mock.patch.dict(os.environ, env):
            config = RunConfig()
        assert config.horizon == 256
        assert config.output == "json"

    @pytest.mark.parametrize(
        "setting,value",
        [
            ("horizon", "many"),
            ("horizon", "0"),
            ("output", "xml"),
            ("precision", "-3"),
            ("seed", "-1"),
            ("page_size", "0"),
        ],
    )
    def test_invalid_environment(self, clean_env, setting, value):
        with mock.patch.dict(os.environ, {RunConfig.env_name(setting): value}):
            with pytest.raises(InvalidParameter) as excinfo:
                RunConfig()
        assert RunConfig.env_name(setting) in str(excinfo.value)

    def test_invalid_argument(self, clean_env):
        with pytest.raises(InvalidParameter) as excinfo:
            RunConfig(degree_cap=0)
        assert "from argument" in str(excinfo.value)

    def test_horizon_cap(self, clean_env):
        with pytest.raises(HorizonTooLarge):
            RunConfig(horizon=10 ** 7 + 1)


def test_replace(clean_env):
    config = RunConfig(horizon=64, seed=3)
    changed = config.replace(output="csv")
    assert changed.output == "csv"
    assert changed.horizon == 64 and changed.seed == 3
    assert config.output == "table"
