"""
Run settings are held by :any:`RunConfig`. Every setting can be passed
explicitly, and otherwise falls back to an environment variable and then to
its default.

>>> config = RunConfig(horizon=256)

With ``ARITHRING_OUTPUT=json`` set in the environment:

>>> RunConfig().output
'json'

================ ============================ ==========
Setting          Environment                  Default
================ ============================ ==========
``horizon``      ``ARITHRING_HORIZON``        1024
``output``       ``ARITHRING_OUTPUT``         ``table``
``precision``    ``ARITHRING_PRECISION``      12
``degree_cap``   ``ARITHRING_DEGREE_CAP``     3
``monomial_cap`` ``ARITHRING_MONOMIAL_CAP``   500
``seed``         ``ARITHRING_SEED``           0
``page_size``    ``ARITHRING_PAGE_SIZE``      64
================ ============================ ==========

"""  #

import logging
import os

from .arithfun import DEFAULT_HORIZON, MAX_HORIZON
from .errors import HorizonTooLarge, InvalidParameter

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("table", "json", "csv")
ENV_PREFIX = "ARITHRING_"


def _positive(value):
    return value >= 1


def _non_negative(value):
    return value >= 0


class RunConfig(object):

    DEFAULTS = {
        "horizon": DEFAULT_HORIZON,
        "output": "table",
        "precision": 12,
        "degree_cap": 3,
        "monomial_cap": 500,
        "seed": 0,
        "page_size": 64,
    }

    def __init__(
        self,
        horizon=None,
        output=None,
        precision=None,
        degree_cap=None,
        monomial_cap=None,
        seed=None,
        page_size=None,
    ):
        """
        Settings shared by :any:`Session` and the command line.

        Args:
            horizon (``int``): Truncation point, at most ``10**7``.
            output (``str``): One of ``table``, ``json``, ``csv``.
            precision (``int``): Digits for numeric columns.
            degree_cap (``int``): Highest oracle degree.
            monomial_cap (``int``): Most monomials the oracle may build.
            seed (``int``): Seed for randomized demos.
            page_size (``int``): Rows per page of table output.

        Raises:
            InvalidParameter: A setting is malformed or out of range.
        """
        self.horizon = self._resolve("horizon", horizon, int, _positive)
        if self.horizon > MAX_HORIZON:
            raise HorizonTooLarge(
                "horizon {} exceeds the maximum {}".format(self.horizon, MAX_HORIZON)
            )
        self.output = self._resolve("output", output, str, OUTPUT_FORMATS.__contains__)
        self.precision = self._resolve("precision", precision, int, _positive)
        self.degree_cap = self._resolve("degree_cap", degree_cap, int, _positive)
        self.monomial_cap = self._resolve("monomial_cap", monomial_cap, int, _positive)
        self.seed = self._resolve("seed", seed, int, _non_negative)
        self.page_size = self._resolve("page_size", page_size, int, _positive)

    @classmethod
    def env_name(cls, setting):
        return ENV_PREFIX + setting.upper()

    def _resolve(self, setting, value, kind, valid):
        source = "argument"
        if value is None:
            env_name = self.env_name(setting)
            try:
                value = os.environ[env_name]
                source = "environment variable {}".format(env_name)
            except KeyError:
                return self.DEFAULTS[setting]
        try:
            value = kind(value.strip() if isinstance(value, str) else value)
        except (TypeError, ValueError):
            raise InvalidParameter(
                "invalid {} {!r} from {}".format(setting, value, source)
            )
        if not valid(value):
            raise InvalidParameter(
                "{} {!r} from {} is out of range".format(setting, value, source)
            )
        return value

    def replace(self, **changes):
        """ Copy with some settings changed """
        settings = self.as_dict()
        settings.update(changes)
        return RunConfig(**settings)

    def as_dict(self):
        return {setting: getattr(self, setting) for setting in self.DEFAULTS}

    def __repr__(self):
        return "<RunConfig horizon:{} output:{}>".format(self.horizon, self.output)
