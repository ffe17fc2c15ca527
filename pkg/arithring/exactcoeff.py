"""
Exact coefficients
******************

Values of arithmetic functions live in the polynomial ring over the rationals
in formal symbols ``L2, L3, L5, ...``, one per prime. The symbol ``Lp`` stands
for the real number ``log p``, so ``log 12`` is stored exactly as
``2*L2 + L3``. The symbols are treated as algebraically independent, which
keeps every zero test exact.

>>> a = Coefficient.rational(Fraction(1, 2)) + Coefficient.log_prime(2)
>>> str(a)
'1/2 + L2'
>>> coeff_is_zero(a - a)
True

The textual form round-trips through :any:`Coefficient.parse`:

>>> Coefficient.parse("5/6 + 2*L2*L3^2")
Coefficient('5/6 + 2*L2*L3^2')

"""  #

from collections import namedtuple
from fractions import Fraction
import numbers

import mpmath

from .errors import InvalidParameter, NotInvertible

NumericValue = namedtuple("NumericValue", ["value", "radius"])


def _mono_mul(left, right):
    """ Multiplies two monomials, each a sorted tuple of (prime, exponent) """
    if not left:
        return right
    if not right:
        return left
    exponents = dict(left)
    for prime, exponent in right:
        exponents[prime] = exponents.get(prime, 0) + exponent
    return tuple(sorted(exponents.items()))


def _mono_degree(mono):
    return sum(exponent for _, exponent in mono)


def _mono_key(mono):
    # graded, then lexicographic by prime
    return (_mono_degree(mono), mono)


def _mono_str(mono):
    parts = []
    for prime, exponent in mono:
        if exponent == 1:
            parts.append("L{}".format(prime))
        else:
            parts.append("L{}^{}".format(prime, exponent))
    return "*".join(parts)


def _fraction_str(q):
    if q.denominator == 1:
        return str(q.numerator)
    return "{}/{}".format(q.numerator, q.denominator)


def accumulate_product(acc, left, right, factor=None):
    """
    Adds ``factor * left * right`` into ``acc`` in place.

    ``acc`` is a plain dict from monomials to Fractions. Convolution kernels
    use it to avoid building an intermediate :any:`Coefficient` per divisor.
    """
    for mono_l, q_l in left._terms.items():
        if factor is not None:
            q_l = q_l * factor
        for mono_r, q_r in right._terms.items():
            mono = _mono_mul(mono_l, mono_r)
            acc[mono] = acc.get(mono, 0) + q_l * q_r


class Coefficient(object):
    """
    Immutable element of Q[L2, L3, L5, ...] in canonical sparse form.

    Args:
        terms (``dict``, optional): Mapping from monomials to rationals. A
            monomial is a tuple of ``(prime, exponent)`` pairs sorted by prime;
            the empty tuple is the constant monomial. Zero rationals are
            dropped.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, q in (terms or {}).items():
            if not q:
                continue
            mono = tuple(sorted((int(p), int(e)) for p, e in mono if e))
            clean[mono] = clean.get(mono, 0) + Fraction(q)
        self._terms = {m: q for m, q in clean.items() if q}
        self._hash = None

    @classmethod
    def _canonical(cls, terms):
        """ Wraps an already canonical dict, dropping zeros only """
        self = cls.__new__(cls)
        self._terms = {m: q for m, q in terms.items() if q}
        self._hash = None
        return self

    @classmethod
    def from_accumulator(cls, acc):
        """ Wraps a dict filled by :any:`accumulate_product` """
        return cls._canonical(acc)

    @classmethod
    def rational(cls, value):
        value = Fraction(value)
        if not value:
            return ZERO
        return cls._canonical({(): value})

    @classmethod
    def log_prime(cls, prime):
        """ The formal symbol ``L_p`` standing for ``log p`` """
        return cls._canonical({((int(prime), 1),): Fraction(1)})

    @classmethod
    def from_factorization(cls, factors):
        """ ``log n`` as ``sum v_p(n) L_p`` from ``(prime, exponent)`` pairs """
        return cls._canonical({((p, 1),): Fraction(e) for p, e in factors if e})

    @classmethod
    def parse(cls, text):
        """ Parses the textual form, e.g. ``"5/6 + 2*L2*L3^2"`` """
        from .dsl import parse_coefficient

        return parse_coefficient(text)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, (numbers.Rational, int)):
            return cls.rational(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise InvalidParameter("cannot use {!r} as an exact coefficient".format(value))

    @property
    def terms(self):
        """ Sorted ``(monomial, rational)`` pairs """
        return tuple(sorted(self._terms.items(), key=lambda item: _mono_key(item[0])))

    def is_zero(self):
        return not self._terms

    def is_rational(self):
        return not self._terms or list(self._terms) == [()]

    def rational_value(self):
        if not self.is_rational():
            raise InvalidParameter("{} is not a rational number".format(self))
        return self._terms.get((), Fraction(0))

    def as_number(self):
        """ The value as ``int`` or ``Fraction`` when rational, else ``None`` """
        if not self._terms:
            return 0
        q = self._terms.get(())
        if q is None or len(self._terms) != 1:
            return None
        return q.numerator if q.denominator == 1 else q

    def primes(self):
        """ Primes whose log symbol occurs in this coefficient """
        return sorted({p for mono in self._terms for p, _ in mono})

    def degree(self):
        if not self._terms:
            return -1
        return max(_mono_degree(mono) for mono in self._terms)

    def content(self):
        """ The rational coefficient of the leading monomial """
        if not self._terms:
            return Fraction(0)
        lead = max(self._terms, key=_mono_key)
        return self._terms[lead]

    def inverse(self):
        if self.is_zero() or not self.is_rational():
            raise NotInvertible("{} is not a unit of Q[L_p]".format(self))
        return Coefficient._canonical({(): 1 / self._terms[()]})

    def scale(self, q):
        q = Fraction(q)
        return Coefficient._canonical({m: c * q for m, c in self._terms.items()})

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __neg__(self):
        return Coefficient._canonical({m: -q for m, q in self._terms.items()})

    def __add__(self, other):
        try:
            other = Coefficient.coerce(other)
        except InvalidParameter:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for mono, q in other._terms.items():
            terms[mono] = terms.get(mono, 0) + q
        return Coefficient._canonical(terms)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Coefficient.coerce(other)
        except InvalidParameter:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Coefficient.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Coefficient.coerce(other)
        except InvalidParameter:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        acc = {}
        accumulate_product(acc, self, other)
        return Coefficient._canonical(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * Coefficient.coerce(other).inverse()

    __div__ = __truediv__

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        try:
            other = Coefficient.coerce(other)
        except InvalidParameter:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self._terms.get((), Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for index, (mono, q) in enumerate(self.terms):
            sign = "-" if q < 0 else "+"
            magnitude = abs(q)
            if not mono:
                body = _fraction_str(magnitude)
            elif magnitude == 1:
                body = _mono_str(mono)
            else:
                body = "{}*{}".format(_fraction_str(magnitude), _mono_str(mono))
            if index == 0:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append("{} {}".format(sign, body))
        return " ".join(pieces)

    def __repr__(self):
        return "Coefficient('{}')".format(self)


ZERO = Coefficient()
ONE = Coefficient._canonical({(): Fraction(1)})


def coeff_arith(op, a, b):
    """
    Exact ring arithmetic.

    Args:
        op (``str``): One of ``add``, ``sub``, ``mul``.
        a (:any:`Coefficient`): Left operand.
        b (:any:`Coefficient`): Right operand.

    Returns:
        result (:any:`Coefficient`)
    """
    a, b = Coefficient.coerce(a), Coefficient.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise InvalidParameter("invalid coefficient operation {}".format(op))


def coeff_is_zero(a):
    return Coefficient.coerce(a).is_zero()


def coeff_eval_numeric(a, precision):
    """
    Substitutes ``Lp -> log p`` with mpmath.

    The sum is formed with ten guard digits; the returned radius is
    ``10**-precision`` scaled by the size of the largest partial sums, so it
    shrinks as ``precision`` grows.

    Args:
        a (:any:`Coefficient`): Value to evaluate.
        precision (``int``): Decimal digits, at least 1.

    Returns:
        value (``NumericValue``): ``(value, radius)`` with mpmath numbers.
    """
    if int(precision) < 1:
        raise InvalidParameter("precision must be at least 1, got {}".format(precision))
    a = Coefficient.coerce(a)
    with mpmath.workdps(int(precision) + 10):
        total = mpmath.mpf(0)
        magnitude = mpmath.mpf(0)
        for mono, q in a.terms:
            term = mpmath.mpf(q.numerator) / q.denominator
            for prime, exponent in mono:
                term *= mpmath.log(prime) ** exponent
            total += term
            magnitude += abs(term)
        radius = mpmath.mpf(10) ** (-int(precision)) * max(mpmath.mpf(1), magnitude)
    return NumericValue(total, radius)
