"""
Worked examples
***************

Known values recomputed from scratch. Every check is exact, so the report
is the same on every run.

>>> results = run_worked_examples()
>>> all(result.passed for result in results)
True
>>> results[0].name
'kappa = Log(one)'

"""  #

from dataclasses import dataclass
import logging

from .builtins import builtin
from .dsl import evaluate
from .exactcoeff import Coefficient
from .independence import (
    INCONCLUSIVE,
    certify_jacobian,
    certify_mg_transcendence,
    certify_orders,
    certify_value_tests,
    dependence_oracle,
    scalar_det,
    wronskian_li,
)
from .numtheory import factorize, mult_indep_integers
from .operators import OperatorSpec, apply, apply_dk_hat

logger = logging.getLogger(__name__)

_REGISTRY = []


@dataclass(frozen=True)
class WorkedResult:
    name: str
    expected: str
    computed: str

    @property
    def passed(self):
        return self.expected == self.computed

    def describe(self):
        status = "PASS" if self.passed else "FAIL"
        return "{}  {}: expected {}, computed {}".format(
            status, self.name, self.expected, self.computed
        )


def _worked(name, expected):
    def decorator(compute):
        _REGISTRY.append((name, expected, compute))
        return compute

    return decorator


def _values(f, count):
    return "(" + ",".join(str(v) for v in f.values[:count]) + ")"


def _witness(certificate):
    if certificate.witness is None:
        return certificate.verdict
    return "{} at {} = {}".format(
        certificate.verdict, certificate.witness.index, certificate.witness.value
    )


@_worked("kappa = Log(one)", "1/j at p^j, 0 elsewhere up to 64")
def _kappa():
    kappa = evaluate("Log(one)", 64)
    for n in range(1, 65):
        factors = factorize(n).factors
        expected = Coefficient.rational(0)
        if len(factors) == 1:
            expected = Coefficient.rational(1) / factors[0][1]
        if kappa[n] != expected:
            return "kappa({}) = {}".format(n, kappa[n])
    return "1/j at p^j, 0 elsewhere up to 64"


@_worked("Log(one) on 1..9", "(0,1,1,1/2,1,0,1,1/3,1/2)")
def _kappa_head():
    return _values(evaluate("Log(one)", 9), 9)


@_worked("tau_star, ind_prime under dp2, dp3", "IndependentCertified at 4 = 2")
def _tau_star():
    fs = [builtin("tau_star", horizon=64), builtin("ind_prime", horizon=64)]
    return _witness(certify_jacobian(fs, [OperatorSpec.basic(2), OperatorSpec.basic(3)]))


@_worked("det f_i(p_j) for ind_p(2), ind_p(3), ind_p(5), one", "1")
def _values_at_primes():
    primes = [2, 3, 5, 7]
    fs = [builtin("ind_p", p, horizon=64) for p in primes[:-1]] + [builtin("one", horizon=64)]
    certificate = certify_value_tests(fs, primes, "at_primes")
    return str(certificate.witness.value) if certificate.witness else certificate.verdict


@_worked("det of dhat2, dhat4 at 1 on ind_p(2), ind_p(2)^2", "1")
def _dhat_block():
    f1 = builtin("ind_p", 2, horizon=64)
    fs = [f1, f1 * f1]
    rows = [[apply_dk_hat(k, f)[1] for k in (2, 4)] for f in fs]
    return str(scalar_det(rows))


@_worked("dL(X) - L2*(X^2 - X) for X = ind_p(2)", "zero up to 256")
def _log_equation():
    residual = evaluate("dL(ind_p(2)) - L2*(ind_p(2)^2 - ind_p(2))", 256)
    return "zero up to 256" if residual.is_zero() else repr(residual)


@_worked("h1, h2 on 1..4", "(0,1,0,0) (0,0,0,1)")
def _h_values():
    h1 = evaluate("3*ind_p(2) - ind_p(2)^2 - 2", 16)
    h2 = evaluate("ind_p(2)^2 - 2*ind_p(2) + 1", 16)
    return _values(h1, 4) + " " + _values(h2, 4)


@_worked("ind_p(2), ind_p(2)^2: jacobian dp2, dp3 / oracle degree 2", "Inconclusive / x^2 - y")
def _planted_relation():
    f1 = builtin("ind_p", 2, horizon=64)
    fs = [f1, f1 * f1]
    jacobian = certify_jacobian(fs, [OperatorSpec.basic(2), OperatorSpec.basic(3)])
    oracle = dependence_oracle(fs, 2)
    relation = str(oracle.relation) if oracle.relation is not None else oracle.verdict
    verdict = jacobian.verdict if jacobian.verdict == INCONCLUSIVE else _witness(jacobian)
    return "{} / {}".format(verdict, relation)


@_worked("Wronskian of one, Omega, Omega^<2> under dp2, value at 1", "4")
def _omega_wronskian():
    fs = [evaluate(text, 64) for text in ("one", "Omega", "pw(Omega, 2)")]
    certificate = wronskian_li(fs, OperatorSpec.basic(2))
    if certificate.witness is None or certificate.witness.index != 1:
        return _witness(certificate)
    return str(certificate.witness.value)


@_worked("orders of e(2), e(6)", "IndependentCertified at 2 = 1")
def _orders():
    return _witness(certify_orders([builtin("e", 2, horizon=64), builtin("e", 6, horizon=64)]))


@_worked("multiplicative relations of (2, 6) and (2, 4)", "independent / (2, -1)")
def _integers():
    first = mult_indep_integers([2, 6])
    second = mult_indep_integers([2, 4])
    left = "independent" if first.independent else str(first.relation)
    right = "independent" if second.independent else str(tuple(second.relation))
    return "{} / {}".format(left, right)


@_worked("dL(e(6)) - (L2 + L3)*e(6)", "zero up to 64")
def _e_n_equation():
    residual = evaluate("dL(e(6)) - (L2 + L3)*e(6)", 64)
    return "zero up to 64" if residual.is_zero() else repr(residual)


@_worked("Omega multiplier on e(5)", "e(5)")
def _omega_kernel():
    e5 = builtin("e", 5, horizon=64)
    return "e(5)" if apply(OperatorSpec.parse("dOmega"), e5) == e5 else "changed"


@_worked(
    "m_log^i ind_smooth(2,3,5), i = 0..2",
    "IndependentCertified at 1 = (L3 - L2)(L5 - L2)(L5 - L3)",
)
def _multiplier_family():
    f = builtin("ind_smooth", 2, 3, 5, horizon=64)
    certificate = certify_mg_transcendence(f, "log", [2, 3, 5], k=0)
    expected = Coefficient.parse("(L3 - L2)*(L5 - L2)*(L5 - L3)")
    if certificate.witness is not None and certificate.witness.value == expected:
        return "IndependentCertified at {} = (L3 - L2)(L5 - L2)(L5 - L3)".format(
            certificate.witness.index
        )
    return _witness(certificate)


@_worked("dL(kappa) = Lambda", "equal up to 64")
def _kappa_derivative():
    same = evaluate("dL(kappa)", 64) == builtin("Lambda", horizon=64)
    return "equal up to 64" if same else "different"


def run_worked_examples():
    """
    Recomputes every worked example.

    Returns:
        results (``list``): :any:`WorkedResult` per example, in order.
    """
    results = []
    for name, expected, compute in _REGISTRY:
        try:
            computed = compute()
        except (ArithmeticError, ValueError, IndexError) as exc:
            computed = "{}: {}".format(type(exc).__name__, exc)
        result = WorkedResult(name, expected, computed)
        logger.info(result.describe())
        results.append(result)
    return results
