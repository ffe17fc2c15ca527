from fractions import Fraction
from itertools import product
from math import prod

import mpmath
import pytest

from arithring.errors import InvalidParameter, InvalidQ, OutOfRange
from arithring.numtheory import (
    NAMED_RECURRENCES,
    build_completely_additive,
    build_completely_multiplicative,
    divisors,
    factorize,
    is_degenerate,
    is_prime,
    log_coefficient,
    mult_indep_integers,
    ordered_factorizations,
    padic_val,
    prime_divisors,
    primes_upto,
    recurrence_set,
    recurrence_terms,
    smallest_prime_factor,
)
from arithring.operators import is_completely_additive, is_completely_multiplicative


@pytest.mark.parametrize(
    "n,factors",
    [
        (1, ()),
        (2, ((2, 1),)),
        (12, ((2, 2), (3, 1))),
        (360, ((2, 3), (3, 2), (5, 1))),
        (9973, ((9973, 1),)),
    ],
)
def test_factorize(n, factors):
    result = factorize(n)
    assert result.factors == factors
    assert result.n == n


def test_factorize_reassembles_up_to_ten_thousand():
    primes = set(primes_upto(10 ** 4))
    for n in range(1, 10 ** 4 + 1):
        factors = factorize(n).factors
        assert prod(p ** e for p, e in factors) == n
        assert [p for p, _ in factors] == sorted({p for p, _ in factors})
        assert all(p in primes and e >= 1 for p, e in factors)


def test_factorization_helpers():
    f = factorize(360)
    assert f.primes == (2, 3, 5)
    assert f.valuation(3) == 2
    assert f.valuation(7) == 0
    assert f.total() == 6
    assert f.as_dict() == {2: 3, 3: 2, 5: 1}


@pytest.mark.parametrize("n", [0, -3, 10 ** 7 + 1, 2.5])
def test_out_of_range(n):
    with pytest.raises(OutOfRange):
        factorize(n)


def test_smallest_prime_factor():
    assert smallest_prime_factor(1) == 1
    assert smallest_prime_factor(91) == 7


@pytest.mark.parametrize("p,n,v", [(2, 1, 0), (2, 48, 4), (3, 48, 1), (5, 48, 0)])
def test_padic_val(p, n, v):
    assert padic_val(p, n) == v


def test_padic_val_base():
    with pytest.raises(InvalidParameter):
        padic_val(1, 10)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


def test_ordered_factorizations():
    assert list(ordered_factorizations(4, 2)) == [(1, 4), (2, 2), (4, 1)]
    assert len(list(ordered_factorizations(12, 3))) == 18
    for tup in ordered_factorizations(30, 3):
        assert tup[0] * tup[1] * tup[2] == 30


def test_primes():
    assert primes_upto(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(97) and not is_prime(91)
    assert prime_divisors([0, 1, 12, 35, -9]) == {2, 3, 5, 7}


def test_log_coefficient():
    assert str(log_coefficient(12)) == "2*L2 + L3"
    assert log_coefficient(1).is_zero()


class TestMultiplicativeIndependence:
    def test_independent_pair(self):
        result = mult_indep_integers([2, 6])
        assert result.independent
        assert result.relation is None

    def test_dependent_pair(self):
        result = mult_indep_integers([2, 4])
        assert not result.independent
        assert tuple(result.relation) == (2, -1)

    def test_exponent_matrix(self):
        result = mult_indep_integers([6, 10, 15])
        assert result.primes == (2, 3, 5)
        assert result.exponent_matrix == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
        assert result.independent

    def test_rejects_small(self):
        with pytest.raises(InvalidParameter):
            mult_indep_integers([1, 2])

    @pytest.mark.slow
    def test_matches_exhaustive_search(self):
        values = range(2, 31)
        exponents = range(-3, 4)
        for size in (1, 2, 3):
            for ns in product(values, repeat=size):
                if list(ns) != sorted(ns):
                    continue
                relation_exists = any(
                    any(ks) and _holds(ns, ks) for ks in product(exponents, repeat=size)
                )
                result = mult_indep_integers(ns)
                if relation_exists:
                    assert not result.independent, ns
                if result.independent:
                    assert not relation_exists, ns
                else:
                    assert _holds(ns, result.relation)


class TestRecurrences:
    def test_fibonacci_terms(self):
        assert recurrence_terms(1, -1, 1, 1, 10).terms == (1, 1, 2, 3, 5, 8, 13, 21, 34, 55)

    @pytest.mark.parametrize(
        "name,expected",
        [
            ("fibonacci", (1, 2, 3, 5, 8, 13, 21, 34, 55, 89)),
            ("lucas", (1, 3, 4, 7, 11, 18, 29, 47, 76)),
            ("pell", (1, 2, 5, 12, 29, 70)),
            ("pell_lucas", (2, 6, 14, 34, 82)),
        ],
    )
    def test_named_sets(self, name, expected):
        assert recurrence_set(name, 100) == expected

    def test_named_table(self):
        assert set(NAMED_RECURRENCES) == {"fibonacci", "lucas", "pell", "pell_lucas"}

    def test_unknown_name(self):
        with pytest.raises(InvalidParameter):
            recurrence_set("tribonacci", 10)

    def test_zero_q(self):
        with pytest.raises(InvalidQ):
            recurrence_set((1, 0, 1, 1), 10)
        with pytest.raises(InvalidQ):
            is_degenerate(1, 0)

    def test_degenerate(self):
        assert is_degenerate(1, 1)
        assert not is_degenerate(1, -1)

    @pytest.mark.parametrize("P", range(-20, 21))
    def test_degenerate_matches_the_roots(self, P):
        with mpmath.workdps(50):
            for Q in range(-20, 21):
                if not Q:
                    continue
                root = mpmath.sqrt(P * P - 4 * Q)
                ratio = (P + root) / (P - root)
                unity = any(abs(ratio ** k - 1) < mpmath.mpf(10) ** -30 for k in range(1, 13))
                assert is_degenerate(P, Q) == unity, (P, Q)

    def test_periodic_recurrence_terminates(self):
        assert recurrence_set((1, 1, 1, 0), 10 ** 6) == (1,)


class TestBuilders:
    def test_completely_additive(self):
        g = build_completely_additive({2: 1, 3: 1}, 12)
        assert [int(str(v)) for v in g.values] == [0, 1, 1, 2, 0, 2, 0, 3, 2, 1, 0, 3]

    def test_completely_multiplicative(self):
        g = build_completely_multiplicative({2: 2, 3: -1}, 12)
        assert g[12] == -4
        assert g[5] == 1

    def test_random_tables(self, rng):
        for _ in range(10):
            table = {p: rng.randint(-3, 3) for p in primes_upto(64)}
            assert is_completely_additive(build_completely_additive(table, 64))
            assert is_completely_multiplicative(build_completely_multiplicative(table, 64))

    def test_partial_and_symbolic_tables(self):
        assert is_completely_additive(build_completely_additive({2: "L2", 5: "1/2"}, 64))
        assert is_completely_multiplicative(build_completely_multiplicative({3: Fraction(2, 3)}, 64))


# Helpers


def _holds(ns, ks):
    numerator, denominator = 1, 1
    for n, k in zip(ns, ks):
        if k > 0:
            numerator *= n ** k
        elif k < 0:
            denominator *= n ** -k
    return numerator == denominator
