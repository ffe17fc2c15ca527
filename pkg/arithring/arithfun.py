"""
Truncated arithmetic functions
******************************

An :any:`ArithFun` stores the exact values ``f(1), ..., f(N)`` of an
arithmetic function. ``N`` is the horizon; nothing is known past it, so every
"zero" answer means zero up to the horizon.

>>> from arithring import builtin
>>> one = builtin("one", horizon=12)
>>> (one * one)[6]
Coefficient('4')
>>> conv_inverse(one).values[:6]
(Coefficient('1'), Coefficient('-1'), Coefficient('-1'), Coefficient('0'), Coefficient('-1'), Coefficient('1'))

Python operators follow the ring: ``+`` and ``-`` are pointwise, ``*`` is
Dirichlet convolution (or scaling by a coefficient) and ``**`` is a
convolution power.

>>> e2 = builtin("e", 2, horizon=12)
>>> order_report(e2 ** 3).order
8

"""  #

from dataclasses import dataclass, field
from fractions import Fraction
import logging
import numbers

from .errors import (
    HorizonExhausted,
    HorizonTooLarge,
    InvalidParameter,
    NotInvertible,
    ZeroToThePowerZero,
)
from .exactcoeff import ONE, ZERO, Coefficient, accumulate_product
from .numtheory import prime_divisors

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 1024
MAX_HORIZON = 10 ** 7


def check_horizon(horizon):
    """ Validates a horizon and returns it as ``int`` """
    if isinstance(horizon, bool) or not isinstance(horizon, numbers.Integral):
        raise InvalidParameter("horizon must be an integer, got {!r}".format(horizon))
    horizon = int(horizon)
    if horizon < 1:
        raise InvalidParameter("horizon must be at least 1, got {}".format(horizon))
    if horizon > MAX_HORIZON:
        raise HorizonTooLarge(
            "horizon {} exceeds the cap of {}".format(horizon, MAX_HORIZON)
        )
    return horizon


def _rational_list(values, horizon):
    """ Values as ints and Fractions, or ``None`` if a log symbol occurs """
    numbers_ = []
    for value in values[:horizon]:
        number = value.as_number()
        if number is None:
            return None
        numbers_.append(number)
    return numbers_


class ArithFun(object):
    """
    Exact values of an arithmetic function on ``1..N``.

    Args:
        values (``iterable``): ``f(1), ..., f(N)``. Items may be
            :any:`Coefficient`, ``int``, ``Fraction`` or coefficient strings.

    Usage:

    >>> f = ArithFun([0, 1, 1, 1])
    >>> f.horizon
    4
    >>> f[2]
    Coefficient('1')
    """

    __slots__ = ("_values",)

    def __init__(self, values):
        values = tuple(Coefficient.coerce(v) for v in values)
        if not values:
            raise InvalidParameter("an arithmetic function needs at least f(1)")
        check_horizon(len(values))
        self._values = values

    @classmethod
    def _wrap(cls, values):
        self = cls.__new__(cls)
        self._values = tuple(values)
        return self

    @classmethod
    def from_callable(cls, function, horizon):
        """ Tabulates ``function(n)`` for ``n`` in ``1..horizon`` """
        horizon = check_horizon(horizon)
        return cls(function(n) for n in range(1, horizon + 1))

    @classmethod
    def zero(cls, horizon=DEFAULT_HORIZON):
        return cls._wrap([ZERO] * check_horizon(horizon))

    @classmethod
    def eps(cls, horizon=DEFAULT_HORIZON):
        """ The convolution identity, 1 at ``n = 1`` and 0 elsewhere """
        return cls._wrap([ONE] + [ZERO] * (check_horizon(horizon) - 1))

    @classmethod
    def indicator(cls, indices, horizon=DEFAULT_HORIZON):
        horizon = check_horizon(horizon)
        values = [ZERO] * horizon
        for n in indices:
            if 1 <= n <= horizon:
                values[n - 1] = ONE
        return cls._wrap(values)

    @classmethod
    def from_json(cls, document):
        """ Inverse of :any:`ArithFun.to_json` """
        try:
            horizon = check_horizon(document["horizon"])
            values = document["values"]
        except (KeyError, TypeError):
            raise InvalidParameter("function document needs 'horizon' and 'values'")
        if len(values) != horizon:
            raise InvalidParameter(
                "horizon {} does not match {} values".format(horizon, len(values))
            )
        return cls(values)

    @property
    def horizon(self):
        return len(self._values)

    @property
    def values(self):
        return self._values

    def __getitem__(self, n):
        if not isinstance(n, numbers.Integral) or n < 1:
            raise InvalidParameter("arithmetic functions are indexed from 1, got {!r}".format(n))
        if n > len(self._values):
            raise HorizonExhausted(
                "index {} is beyond horizon {}".format(n, len(self._values))
            )
        return self._values[n - 1]

    def __iter__(self):
        return iter(self._values)

    def value_at(self, x):
        """
        ``f(x)`` for any rational ``x``; 0 unless ``x`` is a natural number.
        """
        x = Fraction(x)
        if x.denominator != 1 or x < 1:
            return ZERO
        return self[int(x)]

    def truncate(self, horizon):
        horizon = check_horizon(horizon)
        if horizon > self.horizon:
            raise HorizonExhausted(
                "cannot extend horizon {} to {}".format(self.horizon, horizon)
            )
        return ArithFun._wrap(self._values[:horizon])

    def support(self):
        return tuple(n for n, v in enumerate(self._values, 1) if v)

    def is_zero(self):
        return not any(self._values)

    def in_a0(self):
        return self._values[0].is_zero()

    def in_a1(self):
        return self._values[0] == ONE

    def is_unit(self):
        return not self._values[0].is_zero()

    def scale(self, c):
        c = Coefficient.coerce(c)
        return ArithFun._wrap(v * c for v in self._values)

    def pointwise(self, other):
        return pointwise_mul(self, other)

    def inverse(self):
        return conv_inverse(self)

    def __add__(self, other):
        if not isinstance(other, ArithFun):
            return NotImplemented
        return linear("add", self, other)

    def __sub__(self, other):
        if not isinstance(other, ArithFun):
            return NotImplemented
        return linear("sub", self, other)

    def __neg__(self):
        return ArithFun._wrap(-v for v in self._values)

    def __mul__(self, other):
        if isinstance(other, ArithFun):
            return conv(self, other)
        try:
            return self.scale(other)
        except InvalidParameter:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except InvalidParameter:
            return NotImplemented

    def __pow__(self, k):
        return conv_power(self, k)

    def __eq__(self, other):
        """ Agreement on ``1..min(N1, N2)`` """
        if not isinstance(other, ArithFun):
            return NotImplemented
        n = min(self.horizon, other.horizon)
        return self._values[:n] == other._values[:n]

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def to_json(self):
        return {"horizon": self.horizon, "values": [str(v) for v in self._values]}

    def to_csv_rows(self):
        return [(n, str(v)) for n, v in enumerate(self._values, 1)]

    def __repr__(self):
        shown = ", ".join(str(v) for v in self._values[:8])
        more = ", ..." if self.horizon > 8 else ""
        return "<ArithFun horizon={} [{}{}]>".format(self.horizon, shown, more)


def conv(f, g):
    """
    Dirichlet convolution ``(f*g)(n) = sum_{d|n} f(d) g(n/d)``.

    The output horizon is ``min(N_f, N_g)``. Zero values of ``f`` are skipped,
    so the cost is at most ``sum_{d<=N} N/d`` coefficient products.

    Args:
        f (:any:`ArithFun`): Left factor.
        g (:any:`ArithFun`): Right factor.

    Returns:
        product (:any:`ArithFun`)
    """
    horizon = min(f.horizon, g.horizon)
    fq = _rational_list(f.values, horizon)
    gq = _rational_list(g.values, horizon) if fq is not None else None
    if gq is not None:
        out = [0] * (horizon + 1)
        for d in range(1, horizon + 1):
            a = fq[d - 1]
            if not a:
                continue
            for m in range(1, horizon // d + 1):
                b = gq[m - 1]
                if b:
                    out[d * m] += a * b
        values = [Coefficient.rational(v) if v else ZERO for v in out[1:]]
    else:
        fv, gv = f.values, g.values
        accs = [None] * (horizon + 1)
        for d in range(1, horizon + 1):
            a = fv[d - 1]
            if not a:
                continue
            for m in range(1, horizon // d + 1):
                b = gv[m - 1]
                if not b:
                    continue
                acc = accs[d * m]
                if acc is None:
                    acc = accs[d * m] = {}
                accumulate_product(acc, a, b)
        values = [
            Coefficient.from_accumulator(acc) if acc else ZERO for acc in accs[1:]
        ]
    result = ArithFun._wrap(values)
    logger.debug(
        "conv at horizon %d: %d nonzero values", horizon, len(result.support())
    )
    return result


def linear(op, f, g=None, c=None):
    """
    Index-wise linear operations.

    Args:
        op (``str``): ``add``, ``sub`` or ``scale``.
        f (:any:`ArithFun`): First operand.
        g (:any:`ArithFun`, optional): Second operand for ``add``/``sub``.
        c (:any:`Coefficient`, optional): Factor for ``scale``.
    """
    if op == "scale":
        if c is None:
            raise InvalidParameter("scale needs a coefficient")
        return f.scale(c)
    if g is None:
        raise InvalidParameter("{} needs two functions".format(op))
    horizon = min(f.horizon, g.horizon)
    pairs = zip(f.values[:horizon], g.values[:horizon])
    if op == "add":
        return ArithFun._wrap(a + b for a, b in pairs)
    if op == "sub":
        return ArithFun._wrap(a - b for a, b in pairs)
    raise InvalidParameter("invalid linear operation {}".format(op))


def pointwise_mul(f, g):
    """ ``(f . g)(n) = f(n) g(n)`` """
    horizon = min(f.horizon, g.horizon)
    return ArithFun._wrap(
        a * b if a and b else ZERO
        for a, b in zip(f.values[:horizon], g.values[:horizon])
    )


def conv_inverse(f):
    """
    The convolution inverse of ``f``, defined when ``f(1)`` is a nonzero
    rational.

    Raises:
        NotInvertible: ``f(1)`` is zero (or not a rational unit).
    """
    head = f.values[0]
    if head.is_zero() or not head.is_rational():
        raise NotInvertible("f(1) = {} is not invertible".format(head))
    horizon = f.horizon
    inverse_head = head.inverse()
    fq = _rational_list(f.values, horizon)
    if fq is not None:
        h = inverse_head.as_number()
        g = [0] * (horizon + 1)
        pending = [0] * (horizon + 1)
        g[1] = h
        for n in range(1, horizon + 1):
            if n > 1:
                g[n] = -h * pending[n]
            if not g[n]:
                continue
            for d in range(2, horizon // n + 1):
                a = fq[d - 1]
                if a:
                    pending[d * n] += a * g[n]
        values = [Coefficient.rational(v) if v else ZERO for v in g[1:]]
    else:
        fv = f.values
        g = [ZERO] * (horizon + 1)
        pending = [None] * (horizon + 1)
        g[1] = inverse_head
        factor = -inverse_head.as_number()
        for n in range(1, horizon + 1):
            if n > 1 and pending[n]:
                g[n] = Coefficient.from_accumulator(pending[n]).scale(factor)
            if not g[n]:
                continue
            for d in range(2, horizon // n + 1):
                a = fv[d - 1]
                if not a:
                    continue
                acc = pending[d * n]
                if acc is None:
                    acc = pending[d * n] = {}
                accumulate_product(acc, a, g[n])
        values = g[1:]
    return ArithFun._wrap(values)


def conv_power(f, k):
    """
    ``f^k`` under convolution by repeated squaring; ``f^0 = eps``.

    Raises:
        ZeroToThePowerZero: ``k == 0`` and ``f`` vanishes up to its horizon.
        NotInvertible: ``k < 0`` and ``f(1)`` is not invertible.
    """
    k = int(k)
    if k == 0:
        if f.is_zero():
            raise ZeroToThePowerZero("0^0 is undefined for the zero function")
        return ArithFun.eps(f.horizon)
    if k < 0:
        return conv_power(conv_inverse(f), -k)
    result = None
    base = f
    while k:
        if k & 1:
            result = base if result is None else conv(result, base)
        k >>= 1
        if k:
            base = conv(base, base)
    return result


@dataclass(frozen=True)
class OrderReport:
    """
    Order ``v(f)``, norm ``1/v(f)``, support and prime divisors of ``f``,
    all relative to the horizon.

    ``order`` is ``None`` when ``f`` is zero up to the horizon; the norm is
    then 0.
    """

    horizon: int
    order: int = None
    norm: Fraction = Fraction(0)
    support: tuple = ()
    prime_divisors: tuple = field(default=())

    @property
    def is_zero(self):
        return self.order is None

    def describe(self):
        if self.order is None:
            return "infinite (zero up to horizon {})".format(self.horizon)
        return "{} (horizon {})".format(self.order, self.horizon)


def order_report(f):
    support = f.support()
    if not support:
        return OrderReport(horizon=f.horizon)
    return OrderReport(
        horizon=f.horizon,
        order=support[0],
        norm=Fraction(1, support[0]),
        support=support,
        prime_divisors=tuple(sorted(prime_divisors(support))),
    )
