"""
Named functions
***************

Every builtin is looked up by name (or alias) and truncated to the requested
horizon. Parameters follow the name.

>>> builtin("kappa", horizon=8)[8]
Coefficient('1/3')
>>> builtin("Lambda", horizon=8)[8]
Coefficient('L2')
>>> builtin("e", 2, horizon=4).values
(Coefficient('0'), Coefficient('1'), Coefficient('0'), Coefficient('0'))

Available names:

============== ======================= ==========================================
Name           Aliases                 Value at ``n``
============== ======================= ==========================================
one                                    1
zero                                   0
eps            e1                      1 at ``n = 1``
e(m)                                   1 at ``n = m``
ind_prime      ind_P                   1 at primes
ind_ppowers(p) ind_p                   1 at ``p^k``, ``k >= 0``
ind_set(...)                           1 on listed values or a named recurrence
ind_smooth(..) ind_Q                   1 when every prime factor is listed
recur(P,Q,a,b)                         1 on the positive terms of a recurrence
mu             moebius                 Moebius function
Lambda         von_mangoldt            ``Lp`` at ``p^j``
Omega                                  prime factors with multiplicity
kappa                                  ``1/j`` at ``p^j``
I(k)                                   ``n^k``
tau_star                               ``tau(n) - 2`` for ``n > 1``
vp(p)                                  exponent of ``p`` in ``n``
log                                    ``sum v_p(n) Lp``
============== ======================= ==========================================

"""  #

from fractions import Fraction
import logging

from .arithfun import DEFAULT_HORIZON, ArithFun, check_horizon, conv_inverse, conv_power
from .errors import InvalidParameter, UnknownBuiltin
from .exactcoeff import ONE, ZERO, Coefficient
from .numtheory import (
    NAMED_RECURRENCES,
    build_completely_additive,
    factorize,
    is_prime,
    primes_upto,
    recurrence_set,
)

logger = logging.getLogger(__name__)

_REGISTRY = {}
_ALIASES = {}


def _register(name, *aliases, **options):
    arity = options.get("arity", 0)

    def decorator(builder):
        _REGISTRY[name] = (builder, arity)
        for alias in aliases:
            _ALIASES[alias] = name
        return builder

    return decorator


def builtin_names():
    return sorted(_REGISTRY)


def resolve_name(name):
    """ Canonical builtin name for ``name`` or one of its aliases """
    name = _ALIASES.get(name, name)
    if name not in _REGISTRY:
        raise UnknownBuiltin("unknown builtin {}".format(name))
    return name


def builtin(name, *params, **kwargs):
    """
    Builds a named function.

    Args:
        name (``str``): Builtin name or alias.
        params: Builtin parameters, e.g. ``builtin("e", 6)``.

    Keyword Args:
        horizon (``int``, optional): Truncation point. Default is
            :any:`DEFAULT_HORIZON`.

    Returns:
        function (:any:`ArithFun`)

    Raises:
        UnknownBuiltin: ``name`` is not registered.
        InvalidParameter: Wrong number or kind of parameters.
    """
    horizon = check_horizon(kwargs.pop("horizon", DEFAULT_HORIZON))
    if kwargs:
        raise InvalidParameter("unexpected keyword {}".format(sorted(kwargs)[0]))
    canonical = resolve_name(name)
    builder, arity = _REGISTRY[canonical]
    if arity != "*" and len(params) != arity:
        raise InvalidParameter(
            "{} takes {} parameter(s), got {}".format(canonical, arity, len(params))
        )
    logger.debug("building %s%s at horizon %d", canonical, params or "", horizon)
    return builder(horizon, *params)


def _integer(value, what):
    try:
        valid = not isinstance(value, (bool, str)) and int(value) == value
    except (TypeError, ValueError):
        valid = False
    if not valid:
        raise InvalidParameter("{} must be an integer, got {!r}".format(what, value))
    return int(value)


def _prime(value):
    p = _integer(value, "prime")
    if not is_prime(p):
        raise InvalidParameter("{} is not a prime".format(p))
    return p


def _prime_power(n):
    """ ``(p, j)`` when ``n = p^j`` with ``j >= 1``, else ``None`` """
    if n < 2:
        return None
    factors = factorize(n).factors
    if len(factors) != 1:
        return None
    return factors[0]


@_register("one")
def _one(horizon):
    return ArithFun([ONE] * horizon)


@_register("zero")
def _zero(horizon):
    return ArithFun.zero(horizon)


@_register("eps", "e1")
def _eps(horizon):
    return ArithFun.eps(horizon)


@_register("e", arity=1)
def _e(horizon, m):
    m = _integer(m, "e(m) index")
    if m < 1:
        raise InvalidParameter("e(m) needs m >= 1, got {}".format(m))
    return ArithFun.indicator([m], horizon)


@_register("ind_prime", "ind_P")
def _ind_prime(horizon):
    return ArithFun.indicator(primes_upto(horizon), horizon)


@_register("ind_ppowers", "ind_p", arity=1)
def _ind_ppowers(horizon, p):
    p = _prime(p)
    powers = []
    power = 1
    while power <= horizon:
        powers.append(power)
        power *= p
    return ArithFun.indicator(powers, horizon)


@_register("ind_set", arity="*")
def _ind_set(horizon, *items):
    if len(items) == 1 and isinstance(items[0], str):
        if items[0] not in NAMED_RECURRENCES:
            raise InvalidParameter("unknown recurrence {}".format(items[0]))
        return ArithFun.indicator(recurrence_set(items[0], horizon), horizon)
    indices = [_integer(item, "set element") for item in items]
    return ArithFun.indicator(indices, horizon)


@_register("ind_smooth", "ind_Q", arity="*")
def _ind_smooth(horizon, *primes):
    allowed = {_prime(p) for p in primes}
    if not allowed:
        raise InvalidParameter("ind_smooth needs at least one prime")
    return ArithFun.indicator(
        [n for n in range(1, horizon + 1) if set(factorize(n).primes) <= allowed],
        horizon,
    )


@_register("recur", arity=4)
def _recur(horizon, P, Q, u1, u2):
    params = tuple(_integer(v, "recurrence parameter") for v in (P, Q, u1, u2))
    return ArithFun.indicator(recurrence_set(params, horizon), horizon)


@_register("mu", "moebius")
def _mu(horizon):
    return conv_inverse(_one(horizon))


@_register("Lambda", "von_mangoldt")
def _lambda(horizon):
    values = [ZERO] * horizon
    for n in range(2, horizon + 1):
        power = _prime_power(n)
        if power:
            values[n - 1] = Coefficient.log_prime(power[0])
    return ArithFun(values)


@_register("Omega")
def _omega(horizon):
    return ArithFun([factorize(n).total() for n in range(1, horizon + 1)])


@_register("kappa")
def _kappa(horizon):
    values = [ZERO] * horizon
    for n in range(2, horizon + 1):
        power = _prime_power(n)
        if power:
            values[n - 1] = Coefficient.rational(Fraction(1, power[1]))
    return ArithFun(values)


@_register("I", arity=1)
def _power(horizon, k):
    k = _integer(k, "exponent")
    return ArithFun([Fraction(n) ** k for n in range(1, horizon + 1)])


@_register("tau_star")
def _tau_star(horizon):
    return conv_power(_one(horizon) - _eps(horizon), 2)


@_register("vp", arity=1)
def _vp(horizon, p):
    return build_completely_additive({_prime(p): 1}, horizon)


@_register("log")
def _log(horizon):
    return build_completely_additive(
        {p: Coefficient.log_prime(p) for p in primes_upto(horizon)}, horizon
    )
