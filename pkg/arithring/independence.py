"""
Independence certificates
*************************

Every certificate is one-sided. ``IndependentCertified`` carries an index
``m`` and the nonzero value of a determinant there, which anybody can
recompute. A determinant that vanishes up to the horizon only gives
``Inconclusive``. The brute-force :any:`dependence_oracle` looks for
polynomial relations and reports them as ``DependentRelationFound``
candidates that hold up to the horizon.

>>> from arithring import builtin, OperatorSpec
>>> fs = [builtin("tau_star", horizon=64), builtin("ind_prime", horizon=64)]
>>> ops = [OperatorSpec.basic(2), OperatorSpec.basic(3)]
>>> certificate = certify_jacobian(fs, ops)
>>> certificate.verdict, certificate.witness.index, str(certificate.witness.value)
('IndependentCertified', 4, '2')

The oracle finds planted relations:

>>> f1 = builtin("ind_p", 2, horizon=64)
>>> str(dependence_oracle([f1, f1 * f1], 2).relation)
'x^2 - y'

"""  #

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
import logging

from sympy import Matrix

from .arithfun import ArithFun, conv, linear, order_report
from .errors import (
    CapExceeded,
    DimensionTooLarge,
    HypothesisViolated,
    InvalidParameter,
    NonDistinctPrimes,
    NotSquare,
    ZeroFunction,
)
from .exactcoeff import ONE, ZERO, Coefficient
from .numtheory import (
    is_prime,
    mult_indep_integers,
    ordered_factorizations,
    padic_val,
)
from .operators import OperatorSpec, apply, apply_power, is_derivation

logger = logging.getLogger(__name__)

INDEPENDENT = "IndependentCertified"
DEPENDENT = "DependentRelationFound"
INCONCLUSIVE = "Inconclusive"

EXIT_CODES = {INDEPENDENT: 0, INCONCLUSIVE: 2, DEPENDENT: 3}

MAX_DIMENSION = 6

SUPPORT_CAVEAT = "support under-approximated at horizon {}"

LEADING_TERM_LIMIT = 1 << 16


@dataclass(frozen=True)
class Witness:
    """ Index ``m`` and the nonzero value found there """

    index: int
    value: Coefficient

    def to_dict(self):
        return {"index": self.index, "value": str(self.value)}


@dataclass(frozen=True)
class Relation:
    """
    Polynomial ``P`` with ``P(f_1, ..., f_n)`` zero up to a horizon.

    ``terms`` maps exponent tuples to coefficients; products are
    convolutions.
    """

    variables: tuple
    terms: tuple

    def evaluate(self, fs):
        """ ``P(f_1, ..., f_n)`` as an :any:`ArithFun` """
        horizon = min(f.horizon for f in fs)
        total = ArithFun.zero(horizon)
        for exponents, coefficient in self.terms:
            total = linear("add", total, _monomial(fs, exponents, horizon).scale(coefficient))
        return total

    def __str__(self):
        pieces = []
        for exponents, coefficient in self.terms:
            factors = []
            for name, e in zip(self.variables, exponents):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("{}^{}".format(name, e))
            monomial = "*".join(factors)
            rational = coefficient.as_number()
            negative = rational is not None and rational < 0
            magnitude = -coefficient if negative else coefficient
            if not monomial:
                body = str(magnitude)
            elif magnitude == ONE:
                body = monomial
            elif magnitude.as_number() is not None or len(magnitude.terms) == 1:
                body = "{}*{}".format(magnitude, monomial)
            else:
                body = "({})*{}".format(magnitude, monomial)
            if not pieces:
                pieces.append("-" + body if negative else body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class Certificate:
    """
    Outcome of an independence test.

    Args:
        verdict (``str``): One of ``IndependentCertified``,
            ``DependentRelationFound``, ``Inconclusive``.
        method (``str``): Criterion that produced the verdict.
        horizon_used (``int``): Horizon at which the verdict holds.
        witness (:any:`Witness`, optional): Index and nonzero value.
        relation (:any:`Relation`, optional): Candidate polynomial relation.
        matrix (``tuple``, optional): Matrix the verdict was read from.
        caveats (``tuple``): Human readable limitations.
        mu_profile (``tuple``): ``(degree, mu)`` pairs from the oracle.
        details (``dict``): Method specific extras.
    """

    verdict: str
    method: str
    horizon_used: int
    witness: Witness = None
    relation: Relation = None
    matrix: tuple = ()
    caveats: tuple = ()
    mu_profile: tuple = ()
    details: dict = field(default_factory=dict, compare=False)

    @property
    def exit_code(self):
        return EXIT_CODES[self.verdict]

    @property
    def certified(self):
        return self.verdict == INDEPENDENT

    def to_dict(self):
        document = {
            "verdict": self.verdict,
            "method": self.method,
            "horizon": self.horizon_used,
            "caveats": list(self.caveats),
        }
        if self.witness is not None:
            document["witness"] = self.witness.to_dict()
        elif self.relation is not None:
            document["witness"] = {
                "relation": str(self.relation),
                "variables": list(self.relation.variables),
            }
        if self.matrix:
            document["matrix"] = [[str(entry) for entry in row] for row in self.matrix]
        if self.mu_profile:
            document["mu_profile"] = {str(d): str(mu) for d, mu in self.mu_profile}
        if self.details:
            document["details"] = self.details
        return document


def _certificate(verdict, method, horizon, **kwargs):
    certificate = Certificate(verdict, method, horizon, **kwargs)
    logger.info("%s: %s at horizon %d", method, verdict, horizon)
    return certificate


@dataclass(frozen=True)
class FunMatrix:
    """ Rectangular grid of :any:`ArithFun` entries """

    entries: tuple

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise InvalidParameter("matrix rows have different lengths")

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_operators(cls, fs, ops):
        """ The Jacobian ``(op_j f_i)`` """
        return cls(tuple(tuple(apply(op, f) for op in ops) for f in fs))

    @classmethod
    def wronskian(cls, fs, op):
        """ ``(op^j f_i)`` for ``0 <= j < n`` """
        n = len(fs)
        return cls(tuple(tuple(apply_power(op, f, j) for j in range(n)) for f in fs))

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    @property
    def entry_horizons(self):
        return tuple(tuple(e.horizon for e in row) for row in self.entries)

    @property
    def horizon(self):
        return min(e.horizon for row in self.entries for e in row)


def _sign(permutation):
    inversions = sum(
        1
        for i in range(len(permutation))
        for j in range(i + 1, len(permutation))
        if permutation[i] > permutation[j]
    )
    return -1 if inversions % 2 else 1


def _check_square(rows, cols):
    if rows != cols:
        raise NotSquare("determinant needs a square matrix, got {}x{}".format(rows, cols))
    if rows > MAX_DIMENSION:
        raise DimensionTooLarge(
            "dimension {} exceeds the limit of {}".format(rows, MAX_DIMENSION)
        )
    if rows < 1:
        raise InvalidParameter("determinant of an empty matrix")


def conv_det(matrix):
    """
    Determinant in the convolution ring by the Leibniz expansion.

    Args:
        matrix (:any:`FunMatrix`): Square, dimension at most 6.

    Returns:
        determinant (:any:`ArithFun`): At the common horizon of the entries.
    """
    _check_square(matrix.rows, matrix.cols)
    horizon = matrix.horizon
    entries = [[e.truncate(horizon) for e in row] for row in matrix.entries]
    zero_flags = [[e.is_zero() for e in row] for row in entries]
    total = ArithFun.zero(horizon)
    n = matrix.rows
    for permutation in permutations(range(n)):
        if any(zero_flags[i][permutation[i]] for i in range(n)):
            continue
        term = entries[0][permutation[0]]
        for i in range(1, n):
            term = conv(term, entries[i][permutation[i]])
        if _sign(permutation) < 0:
            total = linear("sub", total, term)
        else:
            total = linear("add", total, term)
    return total


def scalar_det(rows):
    """ Leibniz determinant of a square matrix of coefficients """
    rows = [[Coefficient.coerce(v) for v in row] for row in rows]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise NotSquare("determinant needs a square matrix")
    if n > MAX_DIMENSION:
        raise DimensionTooLarge(
            "dimension {} exceeds the limit of {}".format(n, MAX_DIMENSION)
        )
    total = ZERO
    for permutation in permutations(range(n)):
        term = ONE
        for i in range(n):
            term = term * rows[i][permutation[i]]
            if not term:
                break
        if term:
            total = total + term if _sign(permutation) > 0 else total - term
    return total


def nonzero_witness(f):
    """ Least ``m`` with ``f(m) != 0`` and the value, or ``None`` """
    for n, value in enumerate(f.values, 1):
        if value:
            return Witness(n, value)
    return None


def det_value_identity(matrix, a, b):
    """
    The scalar ``det(f_ij(a_i b_j))``.

    Entries at non-natural arguments count as 0.
    """
    _check_square(matrix.rows, matrix.cols)
    rows = [
        [matrix.entries[i][j].value_at(Fraction(a[i]) * Fraction(b[j])) for j in range(matrix.cols)]
        for i in range(matrix.rows)
    ]
    return scalar_det(rows)


def _check_family(fs, ops=None):
    if not fs:
        raise InvalidParameter("at least one function is needed")
    if ops is not None and len(ops) != len(fs):
        raise NotSquare("{} functions but {} operators".format(len(fs), len(ops)))
    if len(fs) > MAX_DIMENSION:
        raise DimensionTooLarge(
            "dimension {} exceeds the limit of {}".format(len(fs), MAX_DIMENSION)
        )


def certify_jacobian(fs, ops):
    """
    Jacobian criterion: a nonzero ``det(D_j f_i)`` certifies algebraic
    independence over the joint kernel of the ``D_j``.

    Args:
        fs (``list``): Functions ``f_1..f_n``.
        ops (``list``): Operators ``D_1..D_n``.

    Returns:
        certificate (:any:`Certificate`)
    """
    _check_family(fs, ops)
    horizon = min(f.horizon for f in fs)
    for op in ops:
        if not is_derivation(op, horizon):
            logger.warning("%s is not a derivation; the Jacobian criterion does not apply", op)
    matrix = FunMatrix.from_operators(fs, ops)
    det = conv_det(matrix)
    witness = nonzero_witness(det)
    if witness:
        return _certificate(INDEPENDENT, "jacobian", det.horizon, witness=witness)
    return _certificate(
        INCONCLUSIVE,
        "jacobian",
        det.horizon,
        caveats=("Jacobian determinant is zero up to horizon {}".format(det.horizon),),
    )


def _check_primes(primes, count):
    primes = [int(p) for p in primes]
    if len(set(primes)) != len(primes):
        raise NonDistinctPrimes("primes must be distinct, got {}".format(primes))
    for p in primes:
        if not is_prime(p):
            raise InvalidParameter("{} is not a prime".format(p))
    if len(primes) != count:
        raise InvalidParameter("{} functions need {} primes, got {}".format(count, count, len(primes)))
    return primes


def _basic_orders(fs, primes):
    """ ``v(dp_j f_i)`` as a grid, ``None`` for zero up to horizon """
    return [
        [order_report(apply(OperatorSpec.basic(p), f)).order for p in primes]
        for f in fs
    ]


def certify_value_tests(fs, primes, mode="at_primes", m=1, ms=None):
    """
    Scalar value tests on the basic-derivation Jacobian ``det(dp_j f_i)``.

    Args:
        fs (``list``): Functions ``f_1..f_n``.
        primes (``list``): Distinct primes ``p_1..p_n``.
        mode (``str``): ``at_primes`` (``det(f_i(p_j))``), ``gvj`` (the
            ordered-factorization sum at ``m``) or ``order_anchored``
            (``det(dp_j f_i(m_j))`` with ``m_j <= v(dp_j f_i)``).
        m (``int``): Index for ``gvj``.
        ms (``list``, optional): Anchors for ``order_anchored``; defaults to
            the least order in each column.

    Returns:
        certificate (:any:`Certificate`): The witness is the Jacobian value
        at index 1, ``m`` or ``prod m_j`` respectively.
    """
    _check_family(fs)
    primes = _check_primes(primes, len(fs))
    n = len(fs)
    horizon = min(f.horizon // p for f in fs for p in primes)
    if mode in ("at_primes", "at-primes"):
        rows = [[f[p] for p in primes] for f in fs]
        return _value_verdict("at_primes", 1, scalar_det(rows), horizon, rows)
    if mode == "gvj":
        m = int(m)
        if m < 1:
            raise InvalidParameter("gvj needs m >= 1, got {}".format(m))
        total = ZERO
        for ks in ordered_factorizations(m, n):
            weight = 1
            for k, p in zip(ks, primes):
                weight *= padic_val(p, k * p)
            rows = [[f[k * p] for k, p in zip(ks, primes)] for f in fs]
            total = total + scalar_det(rows).scale(weight)
        return _value_verdict("gvj", m, total, horizon)
    if mode in ("order_anchored", "order-anchored"):
        orders = _basic_orders(fs, primes)
        if ms is None:
            ms = []
            for j in range(n):
                column = [row[j] for row in orders if row[j] is not None]
                if not column:
                    return _certificate(
                        INCONCLUSIVE,
                        "order_anchored",
                        horizon,
                        caveats=(
                            "dp{} kills every function up to horizon {}".format(primes[j], horizon),
                        ),
                    )
                ms.append(min(column))
        ms = [int(x) for x in ms]
        for i in range(n):
            for j in range(n):
                if orders[i][j] is not None and ms[j] > orders[i][j]:
                    raise HypothesisViolated(
                        "m_{} = {} exceeds v(dp{} f_{}) = {}".format(
                            j + 1, ms[j], primes[j], i + 1, orders[i][j]
                        )
                    )
        basics = [OperatorSpec.basic(p) for p in primes]
        rows = [[apply(op, f)[mj] for op, mj in zip(basics, ms)] for f in fs]
        index = 1
        for mj in ms:
            index *= mj
        certificate = _value_verdict("order_anchored", index, scalar_det(rows), horizon, rows)
        return _with_details(certificate, anchors=ms)
    raise InvalidParameter("invalid value test mode {}".format(mode))


def _with_details(certificate, **details):
    return replace(certificate, details={**certificate.details, **details})


def _value_verdict(method, index, value, horizon, rows=()):
    if value:
        return _certificate(
            INDEPENDENT, method, horizon, witness=Witness(index, value), matrix=tuple(map(tuple, rows))
        )
    return _certificate(
        INCONCLUSIVE,
        method,
        horizon,
        matrix=tuple(map(tuple, rows)),
        caveats=("{} value is zero; no conclusion".format(method),),
    )


def order_valuation_matrix(fs, primes):
    """
    The integer matrix ``(v_{p_j}(v(f_i)))`` and its determinant.

    Raises:
        ZeroFunction: Some ``f_i`` is zero up to its horizon.
    """
    orders = _orders(fs)
    rows = tuple(tuple(padic_val(p, v) for p in primes) for v in orders)
    return rows, int(Matrix(rows).det()) if rows else 0


def _orders(fs):
    orders = []
    for index, f in enumerate(fs, 1):
        report = order_report(f)
        if report.is_zero:
            raise ZeroFunction(
                "f_{} is zero up to horizon {}; its order is unknown".format(index, f.horizon)
            )
        orders.append(report.order)
    return orders


def certify_orders(fs):
    """
    Multiplicatively independent orders certify algebraic independence.

    The witness is the basic-derivation Jacobian at
    ``prod v(f_i) / prod p_j``, whose value is
    ``prod f_i(v(f_i)) * det(v_{p_j}(v(f_i)))`` for primes with a nonzero
    valuation determinant.

    The witness is always re-evaluated: on the functions themselves when
    the index fits their Jacobian, otherwise on their leading terms at a
    raised horizon. Above ``LEADING_TERM_LIMIT`` the verdict is
    ``Inconclusive``.
    """
    _check_family(fs)
    orders = _orders(fs)
    horizon = min(f.horizon for f in fs)
    if 1 in orders:
        return _certificate(
            INCONCLUSIVE,
            "orders",
            horizon,
            caveats=("an order equal to 1 is never multiplicatively independent",),
            details={"orders": orders},
        )
    result = mult_indep_integers(orders)
    if not result.independent:
        return _certificate(
            INCONCLUSIVE,
            "orders",
            horizon,
            matrix=result.exponent_matrix,
            caveats=(
                "orders {} satisfy the exponent relation {}".format(orders, list(result.relation)),
            ),
            details={"orders": orders, "order_relation": list(result.relation)},
        )
    for primes in combinations(result.primes, len(fs)):
        rows, det = order_valuation_matrix(fs, primes)
        if det:
            break
    index = 1
    value = Coefficient.rational(det)
    for f, v in zip(fs, orders):
        index *= v
        value = value * f[v]
    for p in primes:
        index //= p
    ops = [OperatorSpec.basic(p) for p in primes]
    details = {"orders": orders, "primes": list(primes)}
    jacobian_horizon = min(f.horizon // p for f in fs for p in primes)
    if index <= jacobian_horizon:
        jacobian = conv_det(FunMatrix.from_operators(fs, ops))
    else:
        # only f_i(v(f_i)) reaches the coefficient at the index
        lead_horizon = index * max(primes)
        if lead_horizon > LEADING_TERM_LIMIT:
            return _certificate(
                INCONCLUSIVE,
                "orders",
                horizon,
                matrix=rows,
                caveats=(
                    "witness index {} needs a Jacobian horizon of {}, above the limit {}".format(
                        index, lead_horizon, LEADING_TERM_LIMIT
                    ),
                ),
                details=details,
            )
        leads = [ArithFun.indicator((v,), lead_horizon).scale(f[v]) for f, v in zip(fs, orders)]
        jacobian = conv_det(FunMatrix.from_operators(leads, ops))
        details["jacobian_horizon"] = lead_horizon
    if jacobian[index] != value:
        raise ArithmeticError(
            "valuation identity gave {} but the Jacobian has {} at {}".format(
                value, jacobian[index], index
            )
        )
    return _certificate(
        INDEPENDENT,
        "orders",
        horizon,
        witness=Witness(index, value),
        matrix=rows,
        details=details,
    )


def _prime_divisor_set(f):
    return set(order_report(f).prime_divisors)


def certify_triangular(fs, primes):
    """
    Triangular support test: ``p_j`` divides some support element of
    ``f_j`` and none of ``f_i`` for ``i < j``.
    """
    _check_family(fs)
    primes = _check_primes(primes, len(fs))
    supports = [_prime_divisor_set(f) for f in fs]
    horizon = min(f.horizon for f in fs)
    caveat = SUPPORT_CAVEAT.format(horizon)
    for j, p in enumerate(primes):
        if p not in supports[j]:
            return _certificate(
                INCONCLUSIVE,
                "triangular",
                horizon,
                caveats=("p_{} = {} does not divide the support of f_{}".format(j + 1, p, j + 1), caveat),
            )
        for i in range(j):
            if p in supports[i]:
                return _certificate(
                    INCONCLUSIVE,
                    "triangular",
                    horizon,
                    caveats=("p_{} = {} divides the support of f_{}".format(j + 1, p, i + 1), caveat),
                )
    ops = [OperatorSpec.basic(p) for p in primes]
    return _triangular_witness("triangular", fs, ops, caveat)


def certify_triangular_kernels(fs, ops):
    """
    Triangular kernel test: ``D_j f_i = 0`` for ``i < j`` and
    ``D_i f_i != 0``, up to the horizon.
    """
    _check_family(fs, ops)
    horizon = min(f.horizon for f in fs)
    caveat = "kernel membership checked up to horizon {}".format(horizon)
    for i, f in enumerate(fs):
        for j, op in enumerate(ops):
            if j > i and not apply(op, f).is_zero():
                return _certificate(
                    INCONCLUSIVE,
                    "triangular_kernels",
                    horizon,
                    caveats=("f_{} is not in the kernel of {}".format(i + 1, op), caveat),
                )
    return _triangular_witness("triangular_kernels", fs, ops, caveat)


def _triangular_witness(method, fs, ops, caveat):
    """ Lower triangular Jacobian: the product of diagonal leading terms """
    diagonal = [apply(op, f) for f, op in zip(fs, ops)]
    entries_horizon = min(
        apply(op, f).horizon for f in fs for op in ops
    )
    index, value = 1, ONE
    for i, entry in enumerate(diagonal):
        witness = nonzero_witness(entry)
        if witness is None:
            return _certificate(
                INCONCLUSIVE,
                method,
                entries_horizon,
                caveats=("diagonal entry {} is zero up to horizon".format(i + 1), caveat),
            )
        index *= witness.index
        value = value * witness.value
    if index > entries_horizon:
        return _certificate(
            INCONCLUSIVE,
            method,
            entries_horizon,
            caveats=("diagonal witness index {} exceeds horizon {}".format(index, entries_horizon), caveat),
        )
    return _certificate(
        INDEPENDENT, method, entries_horizon, witness=Witness(index, value), caveats=(caveat,)
    )


def certify_escape(f, gs):
    """
    Support escape test: a prime of ``[supp f]`` outside every
    ``[supp g_i]`` gives a derivation ``dp`` killing the ``g_i`` but not
    ``f``.
    """
    if not gs:
        raise InvalidParameter("escape needs at least one g")
    horizon = min([f.horizon] + [g.horizon for g in gs])
    covered = set()
    for g in gs:
        covered |= _prime_divisor_set(g)
    caveat = SUPPORT_CAVEAT.format(horizon)
    for p in sorted(_prime_divisor_set(f) - covered):
        derivative = apply(OperatorSpec.basic(p), f)
        witness = nonzero_witness(derivative)
        if witness is not None:
            return _certificate(
                INDEPENDENT,
                "escape",
                derivative.horizon,
                witness=witness,
                caveats=(caveat,),
                details={"prime": p},
            )
    return _certificate(
        INCONCLUSIVE,
        "escape",
        horizon,
        caveats=("every prime divisor of supp f is covered by the g_i", caveat),
    )


def certify_support(fs, mode, primes=None, gs=None):
    """ Dispatches to :any:`certify_triangular` or :any:`certify_escape` """
    if mode == "triangular":
        return certify_triangular(fs, primes)
    if mode == "escape":
        return certify_escape(fs[0], gs if gs is not None else list(fs[1:]))
    raise InvalidParameter("invalid support test mode {}".format(mode))


def wronskian_li(fs, op):
    """
    Linear independence over the constants of ``op`` from a nonzero
    Wronskian ``det(op^j f_i)``.
    """
    _check_family(fs)
    det = conv_det(FunMatrix.wronskian(fs, op))
    witness = nonzero_witness(det)
    if witness:
        return _certificate(INDEPENDENT, "wronskian", det.horizon, witness=witness)
    return _certificate(
        INCONCLUSIVE,
        "wronskian",
        det.horizon,
        caveats=("Wronskian is zero up to horizon {}".format(det.horizon),),
    )


def certify_mg_transcendence(f, g, primes, k=0):
    """
    Multiplier family test for ``{m_g^i f : k <= i < k + n}``.

    With ``m_j = v(dp_j f)`` and ``x_j = g(m_j p_j)`` distinct and nonzero,
    the Jacobian of the family at ``prod m_j`` equals
    ``prod dp_j f(m_j) x_j^k`` times the Vandermonde determinant of the
    ``x_j``.

    Args:
        f (:any:`ArithFun`): Base function.
        g: Multiplier, an :any:`ArithFun` or a builtin name.
        primes (``list``): Distinct primes in ``[supp f]``; the family has
            one member per prime.
        k (``int``): First power; negative needs ``g`` nowhere zero.

    Raises:
        HypothesisViolated: A prime is outside ``[supp f]``, or the ``x_j``
            collide or vanish.
    """
    n = len(primes)
    if not 1 <= n <= MAX_DIMENSION:
        raise DimensionTooLarge("the family needs 1 to {} primes, got {}".format(MAX_DIMENSION, n))
    primes = _check_primes(primes, n)
    multiplier = OperatorSpec.mul(g, 1)
    g_values = multiplier.multiplier(f.horizon)
    if k < 0 and any(v.is_zero() for v in g_values):
        raise HypothesisViolated("negative powers need g nowhere zero up to the horizon")
    anchors, points, leads = [], [], []
    for p in primes:
        derivative = apply(OperatorSpec.basic(p), f)
        witness = nonzero_witness(derivative)
        if witness is None:
            raise HypothesisViolated("{} is not in [supp f] up to horizon {}".format(p, f.horizon))
        anchors.append(witness.index)
        leads.append(witness.value)
        points.append(g_values[witness.index * p])
    if any(x.is_zero() for x in points) or len(set(points)) != n:
        raise HypothesisViolated(
            "g values {} must be distinct and nonzero".format([str(x) for x in points])
        )
    value = ONE
    for lead, x in zip(leads, points):
        value = value * lead * x ** k
    for j in range(n):
        for l in range(j + 1, n):
            value = value * (points[l] - points[j])
    family = [apply(OperatorSpec.mul(g, i), f) for i in range(k, k + n)]
    anchored = certify_value_tests(family, primes, "order_anchored", ms=anchors)
    if anchored.witness is None or anchored.witness.value != value:
        raise ArithmeticError(
            "multiplier closed form {} disagrees with the anchored determinant".format(value)
        )
    index = 1
    for m in anchors:
        index *= m
    return _certificate(
        INDEPENDENT,
        "mg_transcendence",
        anchored.horizon_used,
        witness=Witness(index, value),
        details={
            "anchors": anchors,
            "points": [str(x) for x in points],
            "k": k,
            "powers": list(range(k, k + n)),
        },
    )


def _variables(n):
    if n <= 4:
        return ("x", "y", "z", "w")[:n]
    return tuple("x{}".format(i) for i in range(1, n + 1))


def _compositions(total, slots):
    if slots == 1:
        return [(total,)]
    return [
        (e,) + rest
        for e in range(total, -1, -1)
        for rest in _compositions(total - e, slots - 1)
    ]


def _exponent_tuples(n, degree):
    """ Exponent tuples of total degree at most ``degree``, lowest degree first """
    result = []
    for total in range(degree + 1):
        result.extend(_compositions(total, n))
    return result


def _monomial(fs, exponents, horizon, cache=None):
    if cache is not None and exponents in cache:
        return cache[exponents]
    if not any(exponents):
        value = ArithFun.eps(horizon)
    else:
        i = max(j for j, e in enumerate(exponents) if e)
        previous = list(exponents)
        previous[i] -= 1
        value = conv(_monomial(fs, tuple(previous), horizon, cache), fs[i].truncate(horizon))
    if cache is not None:
        cache[exponents] = value
    return value


def _normalize(vector):
    """ Scales a (coefficients, values) pair by its leading rational content """
    coefficients, values = vector
    for c in coefficients:
        if c:
            content = c.content()
            if content != 1:
                factor = 1 / content
                coefficients = [x.scale(factor) for x in coefficients]
                values = [x.scale(factor) for x in values]
            break
    return coefficients, values


def _eliminate(monomials, rows, horizon):
    """
    Fraction-free elimination over the columns ``1..horizon``.

    Returns the largest order reached by a combination with a nonconstant
    part and the surviving combinations.
    """
    size = len(monomials)
    basis = [
        ([ONE if i == j else ZERO for j in range(size)], list(rows[i].values[:horizon]))
        for i in range(size)
    ]
    best = 1

    def nonconstant(vector):
        return any(c for c, e in zip(vector[0], monomials) if any(e))

    for column in range(horizon):
        if any(nonconstant(v) for v in basis):
            best = column + 1
        else:
            break
        pivot_index = next((i for i, v in enumerate(basis) if v[1][column]), None)
        if pivot_index is None:
            continue
        pivot = basis.pop(pivot_index)
        w_j = pivot[1][column]
        updated = []
        for coefficients, values in basis:
            w_i = values[column]
            if not w_i:
                updated.append((coefficients, values))
                continue
            coefficients = [w_j * a - w_i * b for a, b in zip(coefficients, pivot[0])]
            values = [ZERO] * (column + 1) + [
                w_j * a - w_i * b for a, b in zip(values[column + 1:], pivot[1][column + 1:])
            ]
            updated.append(_normalize((coefficients, values)))
        basis = updated
        logger.debug("oracle column %d: %d combinations remain", column + 1, len(basis))
    survivors = [v for v in basis if nonconstant(v)]
    return best, survivors


def dependence_oracle(fs, degree, cap=500):
    """
    Brute-force search for polynomial relations of total degree at most
    ``degree`` among ``fs``, up to their common horizon.

    Also reports ``mu_d``: the least norm ``1/v(P(f))`` over polynomials
    ``P`` with a nonconstant part, for each ``d`` up to ``degree``.

    Raises:
        CapExceeded: More than ``cap`` monomials.
    """
    _check_family(fs)
    degree = int(degree)
    if degree < 1:
        raise InvalidParameter("oracle degree must be at least 1, got {}".format(degree))
    n = len(fs)
    count = comb(n + degree, degree)
    if count > cap:
        raise CapExceeded("{} monomials exceed the cap of {}".format(count, cap))
    horizon = min(f.horizon for f in fs)
    cache = {}
    profile = []
    relation = None
    for d in range(1, degree + 1):
        monomials = _exponent_tuples(n, d)
        rows = [_monomial(fs, e, horizon, cache) for e in monomials]
        best, survivors = _eliminate(monomials, rows, horizon)
        if survivors:
            profile.append((d, Fraction(0)))
            if relation is None:
                relation = _relation(monomials, survivors[0][0], n)
        else:
            profile.append((d, Fraction(1, best)))
    caveats = (
        "candidate relation, zero up to horizon {}".format(horizon)
        if relation is not None
        else "no relation of degree <= {} up to horizon {}; not a proof".format(degree, horizon),
    )
    verdict = DEPENDENT if relation is not None else INCONCLUSIVE
    return _certificate(
        verdict, "oracle", horizon, relation=relation, caveats=caveats, mu_profile=tuple(profile)
    )


def _relation(monomials, coefficients, n):
    terms = [(e, c) for e, c in zip(monomials, coefficients) if c]
    terms.sort(key=lambda item: (sum(item[0]), item[0]), reverse=True)
    lead = terms[0][1].content()
    terms = tuple((e, c.scale(1 / lead)) for e, c in terms)
    return Relation(_variables(n), terms)


@dataclass(frozen=True)
class RankReport:
    """ Lower bound on the rank over the fraction field, at a horizon """

    rank: int
    horizon: int
    caveat: str


def rank_ff(matrix):
    """
    Row rank by fraction-free elimination in the convolution ring.

    Pivots are the nonzero entries of smallest order, then lowest row. The
    result is a lower bound: a pivot that vanishes only at this horizon is
    missed.
    """
    horizon = matrix.horizon
    rows = [[e.truncate(horizon) for e in row] for row in matrix.entries]
    rank = 0
    for column in range(matrix.cols):
        candidates = [
            (order_report(row[column]).order, index)
            for index, row in enumerate(rows)
            if not row[column].is_zero()
        ]
        if not candidates:
            continue
        _, pivot_index = min(candidates)
        pivot = rows.pop(pivot_index)
        a = pivot[column]
        rows = [
            row
            if row[column].is_zero()
            else [linear("sub", conv(a, x), conv(row[column], y)) for x, y in zip(row, pivot)]
            for row in rows
        ]
        rank += 1
        logger.debug("rank_ff pivot in column %d, rank %d", column + 1, rank)
    return RankReport(
        rank,
        horizon,
        "lower bound: pivots are tested up to horizon {}".format(horizon),
    )
