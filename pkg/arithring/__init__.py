from .arithfun import ArithFun, conv, conv_inverse, conv_power, linear, order_report, pointwise_mul  # noqa
from .builtins import builtin, builtin_names  # noqa
from .config import RunConfig  # noqa
from .dsl import evaluate, parse, to_text  # noqa
from .errors import ArithRingError  # noqa
from .exactcoeff import Coefficient, coeff_eval_numeric  # noqa
from .independence import (  # noqa
    Certificate,
    FunMatrix,
    certify_jacobian,
    certify_orders,
    dependence_oracle,
    wronskian_li,
)
from .operators import OperatorSpec, apply, compose  # noqa
from .rearick import exp0, log1, power_fg  # noqa
from .session import Session  # noqa
from .__version__ import __version__  # noqa
