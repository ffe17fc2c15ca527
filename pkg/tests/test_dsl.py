from fractions import Fraction
import logging
import random

import pytest

from arithring import builtin
from arithring.arithfun import conv, linear, pointwise_mul
from arithring.dsl import (
    Builtin,
    Coeff,
    ConvPow,
    Pow,
    Scale,
    evaluate,
    parse,
    parse_coefficient,
    to_text,
    tokenize,
)
from arithring.errors import (
    ArithRingError,
    DslEvalError,
    DslSyntaxError,
    HorizonExhausted,
    InvalidParameter,
    NotInA0,
    NotInA1,
    UnknownBuiltin,
    ZeroToThePowerZero,
)
from arithring.exactcoeff import Coefficient
from arithring.numtheory import build_completely_additive
from arithring.operators import OperatorSpec, apply


def test_tokenize():
    tokens = tokenize("dp(3, L2*one)")
    assert [t.text for t in tokens] == ["dp", "(", "3", ",", "L2", "*", "one", ")", ""]
    assert [t.position for t in tokens][:5] == [0, 2, 3, 4, 6]
    assert tokens[-1].kind == "end"


class TestParse:
    def test_coefficients_fold(self):
        assert parse("2*3 - 1") == Coeff(Coefficient.rational(5))
        assert parse_coefficient("5/6 + 2*L2*L3^2") == Coefficient.parse("5/6 + 2*L2*L3^2")

    @pytest.mark.parametrize("text", ["3*one", "one*3", "(3)*one"])
    def test_scale(self, text):
        assert parse(text) == Scale(Coefficient.rational(3), Builtin("one"))

    def test_unary_minus(self):
        assert parse("-one") == Scale(Coefficient.rational(-1), Builtin("one"))
        assert parse("-L2") == Coeff(-Coefficient.log_prime(2))

    def test_power(self):
        assert parse("e(2)^-1") == ConvPow(Builtin("e", (2,)), -1)

    def test_pow(self):
        node = parse("pow(one, 1/2)")
        assert isinstance(node, Pow)
        assert node.exponent == Coeff(Coefficient.parse("1/2"))

    def test_builtin_positions(self):
        node = parse("  one + e(3)")
        assert node.left.position == 2
        assert node.right.position == 8

    def test_mixed_products_warn(self, caplog):
        with caplog.at_level(logging.WARNING, logger="arithring.dsl"):
            parse("one*one.Omega")
        assert "mixed" in caplog.text

    def test_single_product_is_quiet(self, caplog):
        parse("one*one*one")
        assert not caplog.records

    def test_coefficient_required(self):
        with pytest.raises(DslSyntaxError):
            parse_coefficient("2*one")


@pytest.mark.parametrize(
    "text,position,expected",
    [
        ("one +", 5, ("number", "name", "'('")),
        ("(one", 4, ("')'",)),
        ("one two", 4, ("'+'", "'-'", "'*'", "'.'", "end of input")),
        ("dp(x, one)", 3, ("integer",)),
        ("one # two", 4, ()),
        ("L4", 0, ()),
        ("1/0", 0, ()),
        ("addfun{4: 1}", 7, ()),
        ("addfun{2: one}", 10, ()),
        ("(1 - 1)^-1", 1, ()),
    ],
)
def test_syntax_errors(text, position, expected):
    with pytest.raises(DslSyntaxError) as excinfo:
        parse(text)
    assert excinfo.value.position == position
    assert excinfo.value.expected == expected
    assert "at position {}".format(position) in str(excinfo.value)


def test_unknown_builtin():
    with pytest.raises(UnknownBuiltin) as excinfo:
        parse("one + sigma(2)")
    assert "[at position 6]" in str(excinfo.value)


@pytest.mark.parametrize(
    "text",
    [
        "dL(ind_p(2)) - L2*(ind_p(2)^2 - ind_p(2))",
        "Exp(kappa)",
        "pow(one, 1/2)",
        "mg(log, 2, ind_smooth(2,3))",
        "T(-1, one)",
        "pw(Omega, 2)",
        "addfun{2: 1, 3: -1}",
        "(one - eps)^2",
        "one*(eps + one)",
        "one - (eps - one)",
        "(5/6)*one",
        "e(2)^-1",
        "ind_set(fibonacci).mu",
        "dhat(4, inv(one))",
    ],
)
def test_to_text_parses_back(text):
    node = parse(text)
    assert parse(to_text(node)) == node


def test_to_text_is_stable():
    text = "dL(ind_p(2)) - L2*(ind_p(2)^2 - ind_p(2))"
    assert to_text(parse(text)) == text


class TestEvaluate:
    def test_zeroth_power_is_eps(self):
        assert evaluate("e(2)^0", 16) == builtin("eps", horizon=16)

    def test_inverse(self):
        assert evaluate("inv(eps - e(2))", 32) == builtin("ind_p", 2, horizon=32)

    def test_coefficient_literal_is_scaled_eps(self):
        f = evaluate("L2", 8)
        assert f[1] == Coefficient.log_prime(2)
        assert f.support() == (1,)

    def test_half_powers(self):
        assert evaluate("pow(one, 1/2)*pow(one, 1/2)", 32) == builtin("one", horizon=32)

    def test_pointwise_power(self):
        assert evaluate("pw(Omega, 2)", 32) == evaluate("Omega.Omega", 32)
        assert evaluate("pw(Omega, 0)", 8) == builtin("one", horizon=8)

    def test_horizon_shrinks(self):
        assert evaluate("dp(2, one)", 64).horizon == 32
        assert evaluate("dp(2, one) + one", 64).horizon == 32

    def test_builders(self):
        assert evaluate("addfun{2: 1, 3: 1}", 12) == build_completely_additive({2: 1, 3: 1}, 12)
        assert evaluate("mulfun{2: 2}", 12)[12] == 4

    def test_multiplier(self):
        f = evaluate("mg(Omega, 1, one)", 16)
        assert f == builtin("Omega", horizon=16)

    def test_log_derivative_of_kappa(self):
        assert evaluate("dL(kappa)", 64) == builtin("Lambda", horizon=64)


@pytest.mark.parametrize(
    "text,horizon,error,position",
    [
        ("one + zero^0", 8, ZeroToThePowerZero, 6),
        ("Exp(one)", 8, NotInA0, 0),
        ("eps - Log(2*one)", 8, NotInA1, 6),
        ("dp(5, e(2))", 4, HorizonExhausted, 0),
        ("one * dp(4, one)", 8, InvalidParameter, 6),
        ("pw(one, 2) - inv(zero)", 8, ArithmeticError, 13),
    ],
)
def test_evaluation_errors(text, horizon, error, position):
    with pytest.raises(error) as excinfo:
        evaluate(text, horizon)
    assert excinfo.value.dsl_position == position
    assert "[at position {}]".format(position) in str(excinfo.value)


def test_bad_horizon():
    with pytest.raises(InvalidParameter):
        evaluate("one", 0)


def test_eval_error_is_an_arithring_error():
    assert issubclass(DslEvalError, ArithRingError)


@pytest.mark.parametrize("seed", range(4))
def test_random_expressions_parse_back(seed):
    rng = random.Random(seed)
    for _ in range(50):
        node = parse(_random_text(rng, 4))
        assert parse(to_text(node)) == node


def test_random_expressions_evaluate_by_parts(rng):
    for _ in range(100):
        text, expected = _random_pair(rng, 3, 32)
        assert evaluate(text, 32) == expected, text


# Helpers

_ATOMS = ("one", "eps", "mu", "Omega", "kappa", "log", "e(2)", "e(6)", "ind_p(3)", "3", "1/2", "L2", "2*L3")

_WRAPPERS = (
    "({}) + ({})",
    "({}) - ({})",
    "({})*({})",
    "({}).({})",
    "-({})",
    "({})^{k}",
    "Exp({})",
    "Log(eps + ({}))",
    "inv(eps + ({}))",
    "dL({})",
    "dp(2, {})",
    "dhat(4, {})",
    "T(-1, {})",
    "mg(Omega, 2, {})",
    "pw({}, 2)",
    "pow(one, {})",
)


def _random_text(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        return rng.choice(_ATOMS)
    shape = rng.choice(_WRAPPERS)
    parts = [_random_text(rng, depth - 1) for _ in range(shape.count("{}"))]
    return shape.format(*parts, k=rng.randint(1, 3))


def _random_pair(rng, depth, horizon):
    """ Source text with its value computed directly """
    if depth == 0 or rng.random() < 0.25:
        return rng.choice(_evaluated_atoms(horizon))
    shape = rng.randrange(7)
    a, f = _random_pair(rng, depth - 1, horizon)
    if shape == 4:
        return "-({})".format(a), f.scale(-1)
    if shape == 5:
        k = rng.randint(1, 2)
        return "({})^{}".format(a, k), f if k == 1 else conv(f, f)
    if shape == 6:
        return "dL({})".format(a), apply(OperatorSpec.log_deriv(), f)
    b, g = _random_pair(rng, depth - 1, horizon)
    if shape == 0:
        return "({}) + ({})".format(a, b), linear("add", f, g)
    if shape == 1:
        return "({}) - ({})".format(a, b), linear("sub", f, g)
    if shape == 2:
        return "({})*({})".format(a, b), conv(f, g)
    return "({}).({})".format(a, b), pointwise_mul(f, g)


def _evaluated_atoms(horizon):
    eps = builtin("eps", horizon=horizon)
    return [
        ("one", builtin("one", horizon=horizon)),
        ("mu", builtin("mu", horizon=horizon)),
        ("Omega", builtin("Omega", horizon=horizon)),
        ("e(2)", builtin("e", 2, horizon=horizon)),
        ("ind_p(3)", builtin("ind_p", 3, horizon=horizon)),
        ("3", eps.scale(3)),
        ("1/2", eps.scale(Fraction(1, 2))),
        ("L2", eps.scale(Coefficient.log_prime(2))),
    ]
