"""
Seeded law checks
*****************

Random functions with small integer values, and the identities the ring
should satisfy on them. The same seed always draws the same functions.

>>> import random
>>> report = check_laws(random.Random(0), horizon=64, cases=5)
>>> all(passed for _, passed, _ in report)
True

"""  #

from math import prod
import logging

from .arithfun import ArithFun, conv, linear, order_report
from .errors import InvalidParameter
from .independence import FunMatrix, conv_det, det_value_identity
from .numtheory import build_completely_additive, build_completely_multiplicative, primes_upto
from .operators import OperatorSpec, apply, apply_dk_hat
from .rearick import exp0, log1

logger = logging.getLogger(__name__)

MIN_HORIZON = 8


def random_function(rng, horizon, density=0.3, head=None, low=-3, high=3):
    """
    A function with integer values in ``[low, high]``.

    Args:
        rng (``random.Random``): Source of randomness.
        horizon (``int``): Truncation point.
        density (``float``): Chance of a nonzero draw at each ``n``.
        head (``int``, optional): Forced value at 1.
    """
    values = [rng.randint(low, high) if rng.random() < density else 0 for _ in range(horizon)]
    if head is not None:
        values[0] = head
    return ArithFun(values)


def random_function_of_order(rng, horizon, order, density=0.3):
    """ A random function vanishing below ``order`` and nonzero at it """
    values = random_function(rng, horizon, density).values
    head = rng.choice((-2, -1, 1, 2))
    return ArithFun([0] * (order - 1) + [head] + list(values[order:]))


def random_additive(rng, horizon, low=-2, high=2):
    """ Completely additive, with prime values drawn from ``[low, high]`` """
    table = {p: rng.randint(low, high) for p in primes_upto(horizon)}
    return build_completely_additive(table, horizon)


def random_multiplicative(rng, horizon, choices=(-2, -1, 1, 2)):
    """ Completely multiplicative, nonzero everywhere """
    table = {p: rng.choice(choices) for p in primes_upto(horizon)}
    return build_completely_multiplicative(table, horizon)


def _root(horizon, degree):
    top = 1
    while (top + 1) ** degree <= horizon:
        top += 1
    return top


def _norm_multiplicative(rng, horizon):
    f = random_function(rng, horizon)
    g = random_function(rng, horizon)
    product = order_report(conv(f, g))
    left, right = order_report(f), order_report(g)
    if left.is_zero or right.is_zero:
        return product.is_zero
    if left.order * right.order > horizon:
        return True
    return product.norm == left.norm * right.norm


def _product_at_orders(rng, horizon):
    top = _root(horizon, 3)
    orders = [rng.randint(1, top) for _ in range(3)]
    fs = [random_function_of_order(rng, horizon, v) for v in orders]
    points = [rng.randint(1, v) for v in orders]
    product = conv(conv(fs[0], fs[1]), fs[2])
    expected = fs[0][points[0]] * fs[1][points[1]] * fs[2][points[2]]
    return product[prod(points)] == expected


def _det_at_orders(rng, horizon):
    size = rng.choice((2, 3))
    top = _root(horizon, 2 * size)
    a = [rng.randint(1, top) for _ in range(size)]
    b = [rng.randint(1, top) for _ in range(size)]
    matrix = FunMatrix.from_rows(
        [
            [random_function_of_order(rng, horizon, ai * bj + rng.randint(0, 1)) for bj in b]
            for ai in a
        ]
    )
    return conv_det(matrix)[prod(a) * prod(b)] == det_value_identity(matrix, a, b)


def _basic_kernel(rng, horizon):
    p = rng.choice((2, 3, 5, 7))
    f = random_function(rng, horizon, density=rng.choice((0.02, 0.3)))
    if rng.random() < 0.5:
        f = ArithFun([0 if n % p == 0 else v for n, v in enumerate(f.values, 1)])
    killed = apply(OperatorSpec.basic(p), f).is_zero()
    return killed == (not any(n % p == 0 for n in f.support()))


def _multiplier_keeps_order(rng, horizon):
    op = OperatorSpec.basic(rng.choice((2, 3, 5)))
    f = random_function(rng, horizon, density=rng.choice((0.05, 0.3)))
    choice = rng.randrange(3)
    if choice == 0:
        g, i, nonvanishing = random_additive(rng, horizon, 1, 3), rng.randint(1, 3), True
    elif choice == 1:
        g, i, nonvanishing = random_multiplicative(rng, horizon), rng.randint(-2, 2), True
    else:
        g, i, nonvanishing = random_additive(rng, horizon, -1, 1), rng.randint(0, 2), False
    base = order_report(apply(op, f)).order
    moved = order_report(apply(op, apply(OperatorSpec.mul(g, i), f))).order
    if nonvanishing:
        return base == moved
    return moved is None or (base is not None and base <= moved)


def _multiplier_automorphism(rng, horizon):
    g = random_multiplicative(rng, horizon)
    forward, back = OperatorSpec.mul(g), OperatorSpec.mul(g, -1)
    f = random_function(rng, horizon)
    h = random_function(rng, horizon)
    if apply(forward, conv(f, h)) != conv(apply(forward, f), apply(forward, h)):
        return False
    return apply(back, apply(forward, f)) == f


def _exp_log_round_trip(rng, horizon):
    f = random_function(rng, horizon, head=0)
    return log1(exp0(f)) == f


def _exp_homomorphism(rng, horizon):
    f = random_function(rng, horizon, head=0)
    g = random_function(rng, horizon, head=0)
    return exp0(linear("add", f, g)) == conv(exp0(f), exp0(g))


def _random_derivation(rng, horizon):
    choice = rng.randrange(4)
    if choice == 0:
        return OperatorSpec.log_deriv()
    if choice == 1:
        return OperatorSpec.basic(rng.choice((2, 3, 5)))
    if choice == 2:
        return OperatorSpec.parse("dv{}".format(rng.choice((2, 3))))
    return OperatorSpec.mul(random_additive(rng, horizon))


def _leibniz(rng, horizon):
    op = _random_derivation(rng, horizon)
    f = random_function(rng, horizon)
    g = random_function(rng, horizon)
    left = apply(op, conv(f, g))
    right = linear("add", conv(apply(op, f), g), conv(f, apply(op, g)))
    return left == right


def _exp_derivative(rng, horizon):
    op = _random_derivation(rng, horizon)
    f = random_function(rng, horizon, head=0)
    exp_f = exp0(f)
    return apply(op, exp_f) == conv(exp_f, apply(op, f))


def _jacobian_under_exp(rng, horizon):
    ops = rng.sample(
        [OperatorSpec.log_deriv(), OperatorSpec.basic(2), OperatorSpec.basic(3)], 2
    )
    f = random_function(rng, horizon, head=0)
    if rng.random() < 0.5:
        g = random_function(rng, horizon, head=0)
    else:
        g = rng.choice((f.scale(2), conv(f, f)))
    plain = conv_det(FunMatrix.from_operators([f, g], ops))
    lifted = conv_det(FunMatrix.from_operators([exp0(f), exp0(g)], ops))
    return order_report(plain).order == order_report(lifted).order


def _dk_hat_at_one(rng, horizon):
    f = random_function(rng, horizon)
    k = rng.randint(1, min(horizon, 64))
    return apply_dk_hat(k, f)[1] == f[k]


LAWS = (
    ("norm of a product", _norm_multiplicative),
    ("product at the orders", _product_at_orders),
    ("determinant at the orders", _det_at_orders),
    ("kernel of dp", _basic_kernel),
    ("dp order under m_g", _multiplier_keeps_order),
    ("m_g automorphism", _multiplier_automorphism),
    ("Log(Exp f) = f", _exp_log_round_trip),
    ("Exp(f + g) = Exp f * Exp g", _exp_homomorphism),
    ("Leibniz rule", _leibniz),
    ("D Exp f = Exp f * D f", _exp_derivative),
    ("Jacobian vanishing under Exp", _jacobian_under_exp),
    ("dhat_k f at 1 = f(k)", _dk_hat_at_one),
)


def check_laws(rng, horizon=64, cases=20):
    """
    Runs every law on ``cases`` random draws.

    Args:
        horizon (``int``): At least ``MIN_HORIZON``.

    Returns:
        report (``list``): ``(law, passed, failures)`` triples.
    """
    if horizon < MIN_HORIZON:
        raise InvalidParameter(
            "law checks need a horizon of at least {}, got {}".format(MIN_HORIZON, horizon)
        )
    report = []
    for name, law in LAWS:
        failures = sum(1 for _ in range(cases) if not law(rng, horizon))
        logger.debug("%s: %d of %d failed", name, failures, cases)
        report.append((name, failures == 0, failures))
    return report
