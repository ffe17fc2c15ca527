"""
Integer utilities
*****************

Factorization and valuations come from a smallest-prime-factor table that is
grown on demand up to :any:`MAX_N`.

>>> factorize(12)
Factorization(n=12, factors=((2, 2), (3, 1)))
>>> padic_val(2, 8), padic_val(3, 12)
(3, 1)

Multiplicative independence of integers is decided from the rank of their
prime exponent matrix:

>>> mult_indep_integers([2, 6]).independent
True
>>> mult_indep_integers([2, 4]).relation
(2, -1)

Second order recurrences ``U(n+2) = P*U(n+1) - Q*U(n)``:

>>> recurrence_terms(1, -1, 1, 1, 8).terms
(1, 1, 2, 3, 5, 8, 13, 21)
>>> is_degenerate(1, -1), is_degenerate(2, 1)
(False, True)

"""  #

from array import array
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
import logging

from sympy import Matrix, ilcm, igcd, isprime, primerange

from .errors import InvalidParameter, InvalidQ, OutOfRange
from .exactcoeff import ONE, ZERO, Coefficient

logger = logging.getLogger(__name__)

MAX_N = 10 ** 7

NAMED_RECURRENCES = {
    "fibonacci": (1, -1, 1, 1),
    "lucas": (1, -1, 1, 3),
    "pell": (2, -1, 1, 2),
    "pell_lucas": (2, -1, 2, 6),
}


class _SpfTable(object):
    """ Smallest prime factor of every n up to ``size`` """

    MIN_SIZE = 1 << 12

    def __init__(self):
        self.size = 0
        self.spf = array("l")

    def ensure(self, n):
        if n <= self.size:
            return
        size = min(MAX_N, max(n, 2 * self.size, self.MIN_SIZE))
        logger.debug("growing smallest prime factor table to %d", size)
        spf = array("l", range(size + 1))
        for i in range(2, isqrt(size) + 1):
            if spf[i] != i:
                continue
            for j in range(i * i, size + 1, i):
                if spf[j] == j:
                    spf[j] = i
        self.spf = spf
        self.size = size

    def __getitem__(self, n):
        self.ensure(n)
        return self.spf[n]


_SPF = _SpfTable()


def _check_range(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise OutOfRange("expected an integer, got {!r}".format(n))
    if n < 1 or n > MAX_N:
        raise OutOfRange("{} is outside 1..{}".format(n, MAX_N))


@dataclass(frozen=True)
class Factorization:
    """
    Prime factorization of ``n``.

    Args:
        n (``int``): The factored number.
        factors (``tuple``): ``(prime, exponent)`` pairs, primes ascending.
    """

    n: int
    factors: tuple = field(default=())

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    def valuation(self, p):
        for prime, exponent in self.factors:
            if prime == p:
                return exponent
        return 0

    def as_dict(self):
        return dict(self.factors)

    def total(self):
        """ Omega(n), prime factors counted with multiplicity """
        return sum(e for _, e in self.factors)


def smallest_prime_factor(n):
    _check_range(n)
    if n == 1:
        return 1
    return _SPF[n]


@lru_cache(maxsize=1 << 16)
def factorize(n):
    """
    Args:
        n (``int``): Between 1 and :any:`MAX_N`.

    Returns:
        factorization (:any:`Factorization`): ``factorize(1)`` has no factors.

    Raises:
        OutOfRange: ``n`` is not in ``1..MAX_N``.
    """
    _check_range(n)
    _SPF.ensure(n)
    spf = _SPF.spf
    original = n
    factors = []
    while n > 1:
        p = spf[n]
        exponent = 0
        while n % p == 0:
            n //= p
            exponent += 1
        factors.append((p, exponent))
    return Factorization(n=original, factors=tuple(factors))


def padic_val(p, n):
    """ Exponent of ``p`` in ``n``; ``v_p(1) = 0`` """
    _check_range(n)
    if p < 2:
        raise InvalidParameter("valuation base must be at least 2, got {}".format(p))
    exponent = 0
    while n % p == 0:
        n //= p
        exponent += 1
    return exponent


def divisors(n):
    """ Sorted divisors of ``n`` """
    result = [1]
    for p, e in factorize(n).factors:
        result = [d * p ** k for d in result for k in range(e + 1)]
    return sorted(result)


def ordered_factorizations(m, n):
    """
    Yields every ordered ``n``-tuple of naturals whose product is ``m``.

    >>> list(ordered_factorizations(4, 2))
    [(1, 4), (2, 2), (4, 1)]
    """
    if n < 1:
        raise InvalidParameter("tuple length must be at least 1, got {}".format(n))
    if n == 1:
        yield (m,)
        return
    for d in divisors(m):
        for rest in ordered_factorizations(m // d, n - 1):
            yield (d,) + rest


def primes_upto(n):
    return list(primerange(2, n + 1))


def is_prime(n):
    return bool(isprime(n))


def prime_divisors(values):
    """ Primes dividing at least one of the nonzero ``values`` """
    primes = set()
    for value in values:
        value = abs(int(value))
        if value > 1:
            primes.update(factorize(value).primes)
    return primes


@lru_cache(maxsize=1 << 16)
def log_coefficient(n):
    """ ``log n`` as the exact coefficient ``sum v_p(n) Lp`` """
    return Coefficient.from_factorization(factorize(n).factors)


@dataclass(frozen=True)
class MultIndepResult:
    """
    Outcome of :any:`mult_indep_integers`.

    ``relation`` is a primitive integer vector ``k`` with ``prod n_i^k_i == 1``,
    or ``None`` when the integers are independent.
    """

    independent: bool
    relation: tuple = None
    exponent_matrix: tuple = ()
    primes: tuple = ()


def exponent_matrix(ns):
    """ Rows ``(v_p(n) for p in primes)`` for each ``n`` plus the prime list """
    factorizations = [factorize(n) for n in ns]
    primes = sorted({p for f in factorizations for p in f.primes})
    rows = tuple(tuple(f.valuation(p) for p in primes) for f in factorizations)
    return rows, tuple(primes)


def _primitive(vector):
    denominator = 1
    for entry in vector:
        denominator = ilcm(denominator, entry.q)
    ints = [int(entry * denominator) for entry in vector]
    divisor = 0
    for entry in ints:
        divisor = igcd(divisor, entry)
    ints = [entry // divisor for entry in ints]
    lead = next(entry for entry in ints if entry)
    if lead < 0:
        ints = [-entry for entry in ints]
    return tuple(ints)


def mult_indep_integers(ns):
    """
    Decides whether the integers ``ns`` are multiplicatively independent.

    Args:
        ns (``list``): Integers, each at least 2.

    Returns:
        result (:any:`MultIndepResult`)
    """
    ns = [int(n) for n in ns]
    for n in ns:
        if n < 2:
            raise InvalidParameter("multiplicative independence needs n >= 2, got {}".format(n))
    rows, primes = exponent_matrix(ns)
    matrix = Matrix(rows)
    if matrix.rank() == len(ns):
        return MultIndepResult(True, None, rows, primes)
    kernel = matrix.T.nullspace()
    relation = _primitive(list(kernel[0]))
    _verify_relation(ns, relation)
    logger.debug("relation %s among %s", relation, ns)
    return MultIndepResult(False, relation, rows, primes)


def _verify_relation(ns, relation):
    numerator, denominator = 1, 1
    for n, k in zip(ns, relation):
        if k > 0:
            numerator *= n ** k
        elif k < 0:
            denominator *= n ** (-k)
    if numerator != denominator:
        raise ArithmeticError("exponent relation {} does not hold for {}".format(relation, ns))


@dataclass(frozen=True)
class Recurrence:
    """ Terms ``U(1), U(2), ...`` of ``U(n+2) = P*U(n+1) - Q*U(n)`` """

    P: int
    Q: int
    u1: int
    u2: int
    terms: tuple = ()

    def degenerate(self):
        return is_degenerate(self.P, self.Q)


def recurrence_terms(P, Q, u1, u2, bound):
    """
    Args:
        P (``int``): First coefficient.
        Q (``int``): Second coefficient, nonzero.
        u1 (``int``): ``U(1)``.
        u2 (``int``): ``U(2)``.
        bound (``int``): Number of terms to generate.

    Returns:
        recurrence (:any:`Recurrence`)
    """
    if Q == 0:
        raise InvalidQ("Q must be nonzero")
    if bound < 0 or bound > MAX_N:
        raise InvalidParameter("term bound must lie in 0..{}, got {}".format(MAX_N, bound))
    terms = [u1, u2][:bound]
    while len(terms) < bound:
        terms.append(P * terms[-1] - Q * terms[-2])
    return Recurrence(P, Q, u1, u2, tuple(terms))


def is_degenerate(P, Q):
    """ The root ratio is a root of unity iff ``P^2`` is one of ``0, Q, 2Q, 3Q, 4Q`` """
    if Q == 0:
        raise InvalidQ("Q must be nonzero")
    return P * P in (0, Q, 2 * Q, 3 * Q, 4 * Q)


def recurrence_set(params, limit):
    """
    Positive terms not exceeding ``limit``, as a sorted tuple.

    Args:
        params: A name from :any:`NAMED_RECURRENCES` or a ``(P, Q, u1, u2)``
            tuple.
        limit (``int``): Largest value kept.
    """
    if isinstance(params, str):
        try:
            params = NAMED_RECURRENCES[params]
        except KeyError:
            raise InvalidParameter("unknown recurrence {}".format(params))
    P, Q, u1, u2 = params
    if Q == 0:
        raise InvalidQ("Q must be nonzero")
    values = set()
    previous, current = u1, u2
    beyond = 0
    for value in (u1, u2):
        if 0 < value <= limit:
            values.add(value)
    for _ in range(3, limit + 3):
        previous, current = current, P * current - Q * previous
        if abs(current) > limit:
            beyond += 1
            if beyond >= 64:
                break
            continue
        beyond = 0
        if current > 0:
            values.add(current)
    return tuple(sorted(values))


def build_completely_additive(prime_values, horizon):
    """
    The completely additive function with ``g(p) = prime_values[p]``.

    Primes not listed get the value 0.

    >>> build_completely_additive({2: 1, 3: 1}, 12)[12]
    Coefficient('3')
    """
    from .arithfun import ArithFun, check_horizon

    check_horizon(horizon)
    table = {int(p): Coefficient.coerce(v) for p, v in prime_values.items()}
    values = [ZERO] * (horizon + 1)
    for n in range(2, horizon + 1):
        p = _SPF[n]
        values[n] = values[n // p] + table.get(p, ZERO)
    return ArithFun(values[1:])


def build_completely_multiplicative(prime_values, horizon):
    """
    The completely multiplicative function with ``g(p) = prime_values[p]``.

    Primes not listed get the value 1.
    """
    from .arithfun import ArithFun, check_horizon

    check_horizon(horizon)
    table = {int(p): Coefficient.coerce(v) for p, v in prime_values.items()}
    values = [ONE] * (horizon + 1)
    for n in range(2, horizon + 1):
        p = _SPF[n]
        values[n] = values[n // p] * table.get(p, ONE)
    return ArithFun(values[1:])
