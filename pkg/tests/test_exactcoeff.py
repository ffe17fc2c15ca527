from fractions import Fraction

import mpmath
import pytest

from arithring.errors import InvalidParameter, NotInvertible
from arithring.exactcoeff import (
    ONE,
    ZERO,
    Coefficient,
    coeff_arith,
    coeff_eval_numeric,
    coeff_is_zero,
)


def L(p):
    return Coefficient.log_prime(p)


class TestCanonicalForm:
    def test_zero_terms_dropped(self):
        c = Coefficient({(): 0, ((2, 1),): Fraction(3)})
        assert c.terms == ((((2, 1),), Fraction(3)),)

    def test_like_terms_merge(self):
        assert L(2) + L(2) == Coefficient({((2, 1),): 2})

    def test_cancellation_is_exact_zero(self):
        assert coeff_is_zero(L(3) * L(2) - L(2) * L(3))

    def test_zero_exponents_ignored(self):
        assert Coefficient({((2, 0),): 5}) == 5

    def test_hash_matches_for_rationals(self):
        assert hash(Coefficient.rational(Fraction(1, 2))) == hash(Fraction(1, 2))
        assert len({L(2) + 1, 1 + L(2)}) == 1


@pytest.mark.parametrize(
    "value,text",
    [
        (ZERO, "0"),
        (ONE, "1"),
        (-L(2), "-L2"),
        (Coefficient.rational(Fraction(5, 6)) + 2 * L(2) * L(3) ** 2, "5/6 + 2*L2*L3^2"),
        (L(3) - L(2), "-L2 + L3"),
        (Coefficient.from_factorization([(2, 2), (3, 1)]), "2*L2 + L3"),
    ],
)
def test_str(value, text):
    assert str(value) == text


@pytest.mark.parametrize(
    "text", ["5/6 + 2*L2*L3^2", "-L2", "0", "1/3", "L2*L5 - 7/2*L3"]
)
def test_parse_reads_back_str(text):
    value = Coefficient.parse(text)
    assert Coefficient.parse(str(value)) == value


def test_repr():
    assert repr(L(5)) == "Coefficient('L5')"


class TestArithmetic:
    def test_ring_laws(self):
        a = L(2) + Fraction(1, 3)
        b = 2 * L(3) - L(2) * L(5)
        c = Coefficient.rational(-7)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == ZERO

    @pytest.mark.parametrize("op,expected", [("add", "3 + L2"), ("sub", "-3 + L2"), ("mul", "3*L2")])
    def test_coeff_arith(self, op, expected):
        assert str(coeff_arith(op, L(2), 3)) == expected

    def test_coeff_arith_rejects_unknown(self):
        with pytest.raises(InvalidParameter):
            coeff_arith("div", 1, 2)

    def test_rational_inverse(self):
        assert Coefficient.rational(Fraction(2, 3)).inverse() == Fraction(3, 2)

    @pytest.mark.parametrize("value", [ZERO, Coefficient.log_prime(2)])
    def test_inverse_needs_nonzero_rational(self, value):
        with pytest.raises(NotInvertible):
            value.inverse()

    def test_negative_power(self):
        assert Coefficient.rational(2) ** -2 == Fraction(1, 4)

    def test_power_of_sum(self):
        assert (L(2) + 1) ** 2 == L(2) ** 2 + 2 * L(2) + 1

    def test_queries(self):
        c = L(2) * L(3) + Fraction(1, 2)
        assert c.primes() == [2, 3]
        assert c.degree() == 2
        assert not c.is_rational()
        assert c.as_number() is None
        assert Coefficient.rational(Fraction(4, 2)).as_number() == 2
        assert ZERO.degree() == -1

    def test_content_is_leading_coefficient(self):
        assert (3 * L(2) * L(3) + L(5)).content() == 3

    def test_coerce_rejects_floats(self):
        with pytest.raises(InvalidParameter):
            Coefficient.coerce(0.5)

    def test_random_ring_axioms(self, rng):
        for _ in range(50):
            a, b, c = (_random_coefficient(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + ZERO == a and a * ONE == a
            assert a + (-a) == ZERO
            assert a - b == a + (-b)
            assert Coefficient.parse(str(a)) == a
            if a == b:
                assert hash(a) == hash(b)

    def test_random_rational_inverses(self, rng):
        for _ in range(50):
            q = Coefficient.rational(Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)))
            b = _random_coefficient(rng)
            assert q * q.inverse() == ONE
            assert (b * q) / q == b



class TestNumeric:
    def test_log_symbols_become_logs(self):
        result = coeff_eval_numeric(2 * L(2) + L(3), 20)
        with mpmath.workdps(30):
            assert abs(result.value - mpmath.log(12)) < mpmath.mpf(10) ** -20

    def test_radius_shrinks_with_precision(self):
        c = L(2) * L(3) - Fraction(1, 7)
        assert coeff_eval_numeric(c, 30).radius < coeff_eval_numeric(c, 10).radius

    def test_zero(self):
        assert coeff_eval_numeric(ZERO, 5).value == 0

    def test_precision_must_be_positive(self):
        with pytest.raises(InvalidParameter):
            coeff_eval_numeric(ONE, 0)


# Helpers


def _random_coefficient(rng):
    """ A sum of up to three terms in L2, L3, L5 with small rational weights """
    total = ZERO
    for _ in range(rng.randint(0, 3)):
        term = Coefficient.rational(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        for p in rng.sample([2, 3, 5], rng.randint(0, 2)):
            term = term * L(p) ** rng.randint(1, 2)
        total = total + term
    return total
