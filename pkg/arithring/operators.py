"""
Operators
*********

Linear operators on arithmetic functions. Operators that read ``f`` past the
requested index shrink the horizon: ``dp`` reads ``f(np)`` so its output
horizon is ``N // p``.

>>> from arithring import builtin
>>> ind_prime = builtin("ind_prime", horizon=30)
>>> apply(OperatorSpec.basic(3), ind_prime) == builtin("eps", horizon=10)
True
>>> apply(OperatorSpec.log_deriv(), builtin("one", horizon=4))[4]
Coefficient('2*L2')

Operators also have a compact label used on the command line:

>>> [str(OperatorSpec.parse(label)) for label in ("dL", "dp2", "dhat4", "T-1")]
['dL', 'dp2', 'dhat4', 'T-1']

Available labels:

========= ==============================================
Label     Operator
========= ==============================================
id        identity
dL        log-derivation, multiplies by ``log n``
dp<p>     basic derivation ``f(np) v_p(np)``
dk<k>     composite of basic derivations, ``prod dp^v_p(k)``
dhat<k>   ``dk<k>`` divided by ``prod v_p(k)!``
T<k>      multiplier ``n^k``, ``k`` may be negative
dOmega    multiplier ``Omega(n)``
dv<p>     multiplier ``v_p(n)``
========= ==============================================

"""  #

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
import logging
import re

from .arithfun import ArithFun
from .builtins import builtin
from .errors import DivisionByZeroValue, HorizonExhausted, InvalidParameter
from .exactcoeff import ZERO
from .numtheory import factorize, is_prime, log_coefficient, padic_val

logger = logging.getLogger(__name__)

IDENTITY = "identity"
LOG_DERIV = "log"
BASIC = "basic"
MULTIPLIER = "mul"
COMPOSITE = "dk"
NORMALIZED = "dkhat"
SHIFT = "shift"
CHAIN = "chain"

_LABEL = re.compile(r"^(dp|dk|dhat|dv|T)(-?\d+)$")


@dataclass(frozen=True)
class OperatorSpec:
    """
    Descriptor of a linear operator.

    Use the named constructors (:any:`OperatorSpec.basic`,
    :any:`OperatorSpec.mul`, ...) or :any:`OperatorSpec.parse`.

    Args:
        kind (``str``): Operator family.
        k (``int``, optional): Prime for ``basic``, index for ``dk`` and
            ``dkhat``, exponent for ``shift``.
        g: Multiplier for ``mul``: an :any:`ArithFun` or a builtin
            ``(name, params)`` pair resolved at the input horizon.
        i (``int``): Power of the multiplier.
        ops (``tuple``): Members of a ``chain``, applied right to left.
        label (``str``, optional): Display name for ``mul``.
    """

    kind: str
    k: int = None
    g: object = field(default=None, compare=False)
    i: int = 1
    ops: tuple = ()
    label: str = None

    @classmethod
    def identity(cls):
        return cls(IDENTITY)

    @classmethod
    def log_deriv(cls):
        return cls(LOG_DERIV)

    @classmethod
    def basic(cls, p):
        p = int(p)
        if not is_prime(p):
            raise InvalidParameter("dp needs a prime, got {}".format(p))
        return cls(BASIC, k=p)

    @classmethod
    def mul(cls, g, i=1, label=None):
        """ ``m_g^i``; ``g`` is an :any:`ArithFun`, a builtin name or a ``(name, params)`` pair """
        if isinstance(g, str):
            g = (g, ())
        if label is None:
            label = "mg({},{})".format(g[0] if isinstance(g, tuple) else "g", int(i))
        return cls(MULTIPLIER, g=g, i=int(i), label=label)

    @classmethod
    def dk(cls, k):
        k = int(k)
        if k < 1:
            raise InvalidParameter("dk needs k >= 1, got {}".format(k))
        return cls(COMPOSITE, k=k)

    @classmethod
    def dk_hat(cls, k):
        k = int(k)
        if k < 1:
            raise InvalidParameter("dhat needs k >= 1, got {}".format(k))
        return cls(NORMALIZED, k=k)

    @classmethod
    def shift(cls, alpha):
        return cls(SHIFT, k=int(alpha))

    @classmethod
    def chain(cls, ops):
        return cls(CHAIN, ops=tuple(ops))

    @classmethod
    def parse(cls, text):
        """ Builds an operator from its label, e.g. ``"dp3"`` or ``"T-1"`` """
        text = text.strip()
        if text == "id":
            return cls.identity()
        if text == "dL":
            return cls.log_deriv()
        if text == "dOmega":
            return cls.mul("Omega", 1, label="dOmega")
        match = _LABEL.match(text)
        if not match:
            raise InvalidParameter("invalid operator label {}".format(text))
        family, number = match.group(1), int(match.group(2))
        if family == "T":
            return cls.shift(number)
        if number < 1:
            raise InvalidParameter("invalid operator label {}".format(text))
        if family == "dp":
            return cls.basic(number)
        if family == "dk":
            return cls.dk(number)
        if family == "dhat":
            return cls.dk_hat(number)
        if not is_prime(number):
            raise InvalidParameter("dv needs a prime, got {}".format(number))
        return cls.mul(("vp", (number,)), 1, label=text)

    @property
    def shrink(self):
        """ Factor by which the output horizon shrinks """
        if self.kind in (BASIC, COMPOSITE, NORMALIZED):
            return self.k
        if self.kind == CHAIN:
            product = 1
            for op in self.ops:
                product *= op.shrink
            return product
        return 1

    def multiplier(self, horizon):
        """ The multiplier ``g`` of ``mul`` and ``shift`` at ``horizon`` """
        if self.kind == SHIFT:
            return builtin("I", self.k, horizon=horizon)
        if isinstance(self.g, ArithFun):
            if self.g.horizon < horizon:
                raise HorizonExhausted(
                    "multiplier horizon {} is below {}".format(self.g.horizon, horizon)
                )
            return self.g
        name, params = self.g
        return builtin(name, *params, horizon=horizon)

    def __str__(self):
        if self.kind == IDENTITY:
            return "id"
        if self.kind == LOG_DERIV:
            return "dL"
        if self.kind == BASIC:
            return "dp{}".format(self.k)
        if self.kind == COMPOSITE:
            return "dk{}".format(self.k)
        if self.kind == NORMALIZED:
            return "dhat{}".format(self.k)
        if self.kind == SHIFT:
            return "T{}".format(self.k)
        if self.kind == MULTIPLIER:
            return self.label
        return "(" + " o ".join(str(op) for op in self.ops) + ")"


def _dk_weight(k_factors, n):
    """ ``prod_p prod_{j=1..v_p(k)} (v_p(n) + j)`` """
    weight = 1
    for p, e in k_factors:
        base = padic_val(p, n)
        for j in range(1, e + 1):
            weight *= base + j
    return weight


def _output_horizon(op, f):
    horizon = f.horizon // op.shrink
    if horizon < 1:
        raise HorizonExhausted(
            "{} needs horizon at least {}, got {}".format(op, op.shrink, f.horizon)
        )
    return horizon


def apply(op, f):
    """
    Applies ``op`` to ``f``.

    Args:
        op (:any:`OperatorSpec`): Operator.
        f (:any:`ArithFun`): Input.

    Returns:
        result (:any:`ArithFun`): Horizon ``f.horizon // op.shrink``.

    Raises:
        HorizonExhausted: The output horizon would be below 1.
        DivisionByZeroValue: A negative multiplier power meets ``g(n) = 0``.
        InvalidParameter: A negative multiplier power meets a value of ``g``
            that involves some ``L_p``.
    """
    if op.kind == CHAIN:
        for member in reversed(op.ops):
            f = apply(member, f)
        return f
    horizon = _output_horizon(op, f)
    if op.kind == IDENTITY:
        return f
    if op.kind == LOG_DERIV:
        return ArithFun._wrap(
            v * log_coefficient(n) if v else ZERO for n, v in enumerate(f.values, 1)
        )
    if op.kind == BASIC:
        p = op.k
        values = f.values
        return ArithFun._wrap(
            values[n * p - 1] * (padic_val(p, n) + 1) if values[n * p - 1] else ZERO
            for n in range(1, horizon + 1)
        )
    if op.kind in (COMPOSITE, NORMALIZED):
        k_factors = factorize(op.k).factors
        norm = 1
        if op.kind == NORMALIZED:
            for _, e in k_factors:
                norm *= factorial(e)
        values = []
        for n in range(1, horizon + 1):
            value = f[n * op.k]
            if value:
                value = value.scale(Fraction(_dk_weight(k_factors, n), norm))
            values.append(value)
        return ArithFun._wrap(values)
    return _apply_multiplier(op, f)


def _apply_multiplier(op, f):
    horizon = f.horizon
    g = op.multiplier(horizon)
    i = op.i if op.kind == MULTIPLIER else 1
    values = []
    for n, (v, w) in enumerate(zip(f.values, g.values), 1):
        if i >= 0:
            values.append(v * w ** i if v else ZERO)
            continue
        if w.is_zero():
            if n > 1 or v:
                raise DivisionByZeroValue(
                    "{} meets g({}) = 0 with a negative power".format(op, n)
                )
            values.append(ZERO)
            continue
        if v and not w.is_rational():
            raise InvalidParameter(
                "{} needs g({}) = {} inverted, which is not a unit of Q[L_p]".format(op, n, w)
            )
        values.append(v * w ** i if v else ZERO)
    return ArithFun._wrap(values)


def apply_dk_hat(k, f):
    """ Normalized composite derivative; its value at 1 is ``f(k)`` """
    return apply(OperatorSpec.dk_hat(k), f)


def apply_power(op, f, j):
    """ ``op`` applied ``j`` times """
    for _ in range(int(j)):
        f = apply(op, f)
    return f


def compose(ops):
    """
    Composition ``ops[0] o ops[1] o ...``.

    Identities are dropped and basic/composite derivatives fold into a single
    ``dk``; any other mix stays a chain applied right to left.

    >>> compose([OperatorSpec.basic(2), OperatorSpec.basic(3)])
    OperatorSpec(kind='dk', k=6, g=None, i=1, ops=(), label=None)
    """
    flat = []
    for op in ops:
        flat.extend(op.ops if op.kind == CHAIN else [op])
    flat = [op for op in flat if op.kind != IDENTITY]
    if not flat:
        return OperatorSpec.identity()
    if len(flat) == 1:
        return flat[0]
    if all(op.kind in (BASIC, COMPOSITE) for op in flat):
        product = 1
        for op in flat:
            product *= op.k
        return OperatorSpec.dk(product)
    return OperatorSpec.chain(flat)


@dataclass(frozen=True)
class FunctionalCheck:
    """
    Result of a functional-equation check up to ``horizon``.

    Truthy when the equation holds; ``counterexample`` is the first failing
    ``(n, m)`` pair otherwise.
    """

    holds: bool
    horizon: int
    counterexample: tuple = None

    def __bool__(self):
        return self.holds


def is_completely_additive(g):
    """ ``g(1) = 0`` and ``g(nm) = g(n) + g(m)`` for all ``nm <= N`` """
    if g[1]:
        return FunctionalCheck(False, g.horizon, (1, 1))
    for n in range(2, g.horizon // 2 + 1):
        for m in range(n, g.horizon // n + 1):
            if g[n * m] != g[n] + g[m]:
                return FunctionalCheck(False, g.horizon, (n, m))
    return FunctionalCheck(True, g.horizon)


def is_completely_multiplicative(g):
    """ ``g(1) = 1`` and ``g(nm) = g(n) g(m)`` for all ``nm <= N`` """
    if g[1] != 1:
        return FunctionalCheck(False, g.horizon, (1, 1))
    for n in range(2, g.horizon // 2 + 1):
        for m in range(n, g.horizon // n + 1):
            if g[n * m] != g[n] * g[m]:
                return FunctionalCheck(False, g.horizon, (n, m))
    return FunctionalCheck(True, g.horizon)


def is_derivation(op, horizon):
    """
    Whether ``op`` satisfies the Leibniz rule.

    Multipliers are checked for complete additivity up to ``horizon``.
    """
    if op.kind in (LOG_DERIV, BASIC):
        return True
    if op.kind == MULTIPLIER and op.i == 1:
        return bool(is_completely_additive(op.multiplier(horizon)))
    return False
