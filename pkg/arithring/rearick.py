"""
Exponential and logarithm
*************************

``Exp`` maps the additive group of functions with ``f(1) = 0`` onto the
convolution group of functions with ``f(1) = 1``; ``Log`` is its inverse.
Both series are finite at a horizon ``N`` because ``(f - eps)^k`` vanishes
below ``2^k``, so ``floor(log2 N)`` terms are exact.

>>> from arithring import builtin
>>> kappa = log1(builtin("one", horizon=16))
>>> kappa[8], kappa[6]
(Coefficient('1/3'), Coefficient('0'))
>>> exp0(kappa) == builtin("one", horizon=16)
True

"""  #

from fractions import Fraction
import logging

import mpmath

from .arithfun import ArithFun, conv, linear
from .errors import NotInA0, NotInA1, UnsupportedDepth
from .exactcoeff import coeff_eval_numeric

logger = logging.getLogger(__name__)


def series_depth(horizon):
    """ Number of series terms needed at ``horizon`` """
    return horizon.bit_length() - 1


def exp0(f):
    """
    ``Exp f = sum f^k / k!``.

    Raises:
        NotInA0: ``f(1) != 0``.
    """
    if not f.in_a0():
        raise NotInA0("Exp needs f(1) = 0, got f(1) = {}".format(f[1]))
    result = ArithFun.eps(f.horizon)
    term = result
    for k in range(1, series_depth(f.horizon) + 1):
        term = conv(term, f).scale(Fraction(1, k))
        if term.is_zero():
            break
        result = linear("add", result, term)
    return result


def log1(f):
    """
    ``Log f = sum (-1)^(k+1) (f - eps)^k / k``.

    Raises:
        NotInA1: ``f(1) != 1``.
    """
    if not f.in_a1():
        raise NotInA1("Log needs f(1) = 1, got f(1) = {}".format(f[1]))
    shifted = linear("sub", f, ArithFun.eps(f.horizon))
    result = ArithFun.zero(f.horizon)
    power = ArithFun.eps(f.horizon)
    for k in range(1, series_depth(f.horizon) + 1):
        power = conv(power, shifted)
        if power.is_zero():
            break
        sign = 1 if k % 2 else -1
        result = linear("add", result, power.scale(Fraction(sign, k)))
    return result


def power_fg(f, g):
    """ ``f^g = Exp(g * Log f)`` for ``f(1) = 1`` """
    return exp0(conv(g, log1(f)))


def iterate_exp(f, m):
    """
    ``Exp^m f`` for the exactly representable depths ``m`` in ``{-1, 0, 1}``.

    ``Exp f`` has value 1 at 1, so a second ``Exp`` would leave the exact
    coefficient ring.

    Raises:
        UnsupportedDepth: ``m`` is outside ``{-1, 0, 1}``.
    """
    m = int(m)
    if m == 0:
        return f
    if m == 1:
        return exp0(f)
    if m == -1:
        return log1(f)
    raise UnsupportedDepth(
        "Exp^{} is not exactly representable; supported depths are -1, 0, 1".format(m)
    )


def exp_numeric(f, precision):
    """
    The general exponential ``exp(f(1)) * Exp(f - f(1) eps)`` evaluated
    numerically.

    ``f(1)`` must be rational. Returns a list of mpmath numbers for
    ``n = 1..N``.
    """
    head = f[1].rational_value()
    exact = exp0(linear("sub", f, ArithFun.eps(f.horizon).scale(head)))
    with mpmath.workdps(int(precision) + 10):
        factor = mpmath.exp(mpmath.mpf(head.numerator) / head.denominator)
        values = [factor * coeff_eval_numeric(v, precision).value for v in exact]
    logger.debug("numeric Exp with exp(f(1)) = %s", mpmath.nstr(factor, 8))
    return values
