import mpmath
import pytest

from arithring import Session
from arithring.config import RunConfig
from arithring.errors import CapExceeded, InvalidParameter
from arithring.independence import DEPENDENT, INDEPENDENT
from arithring.session import PARTIAL_SUM_LABEL


def test_repr(session):
    assert repr(session) == "<Session horizon:64>"


def test_config_object(clean_env):
    config = RunConfig(horizon=32)
    assert Session(config).config is config


class TestEvaluate:
    def test_configured_horizon(self, session):
        assert session.evaluate("one").horizon == 64

    def test_explicit_horizon(self, session):
        assert session.evaluate("one", horizon=8).horizon == 8

    def test_function_passes_through(self, session, one):
        assert session.evaluate(one) is one


class TestRows:
    def test_rows(self, session):
        assert session.rows("eps", stop=3) == [(1, "1", "1.0"), (2, "0", "0.0"), (3, "0", "0.0")]

    def test_symbolic_rows(self, session):
        n, exact, numeric = session.rows("Lambda", start=4, stop=4)[0]
        assert (n, exact) == (4, "L2")
        assert numeric.startswith("0.693147")

    def test_pages(self, clean_env):
        session = Session(horizon=64, page_size=10)
        pages = list(session.iter_rows("one*one", stop=25))
        assert [len(page) for page in pages] == [10, 10, 5]
        assert pages[1][1] == (12, "6", "6.0")

    def test_stop_past_horizon_raises_horizon(self, session):
        rows = session.rows("one", start=100, stop=101)
        assert [n for n, _, _ in rows] == [100, 101]

    def test_shrinking_operator(self, session):
        rows = session.rows("dp(2, one)")
        assert len(rows) == 32

    @pytest.mark.parametrize("start,stop", [(0, 5), (6, 5)])
    def test_bad_range(self, session, start, stop):
        with pytest.raises(InvalidParameter):
            session.rows("one", start=start, stop=stop)

    def test_range_beyond_result(self, session):
        with pytest.raises(InvalidParameter):
            session.rows("dp(2, one)", stop=64)


class TestCertify:
    def test_jacobian(self, session):
        certificate = session.certify("jacobian", ["tau_star", "ind_prime"], derivs=["dp2", "dp3"])
        assert certificate.verdict == INDEPENDENT
        assert certificate.witness.index == 4

    def test_alias(self, session):
        certificate = session.certify("at-primes", ["ind_p(2)", "ind_p(3)"], primes=[2, 3])
        assert certificate.method == "at_primes"

    def test_multiplier_expression(self, session):
        certificate = session.certify("mg", ["ind_smooth(2,3)"], g="log", primes=[2, 3])
        assert certificate.verdict == INDEPENDENT

    def test_wronskian_label(self, session):
        certificate = session.certify("wronskian", ["one", "Omega"], derivs="dp2")
        assert certificate.verdict == INDEPENDENT

    def test_unknown_method(self, session):
        with pytest.raises(InvalidParameter):
            session.certify("guess", ["one"])


class TestOracle:
    def test_planted(self, session):
        certificate = session.oracle(["ind_p(2)", "ind_p(2)^2"], degree=2)
        assert certificate.verdict == DEPENDENT
        assert str(certificate.relation) == "x^2 - y"

    def test_degree_cap(self, session):
        with pytest.raises(InvalidParameter):
            session.oracle(["one"], degree=4)

    def test_monomial_cap(self, clean_env):
        session = Session(horizon=16, degree_cap=5, monomial_cap=10)
        with pytest.raises(CapExceeded):
            session.oracle(["one", "Omega"], degree=4)


class TestDirichlet:
    def test_zeta_two(self, session):
        result = session.dirichlet("one", 2, terms=10000)
        assert result.label == PARTIAL_SUM_LABEL
        assert result.terms == 10000
        # tail of sum 1/n^2 past N is below 1/N
        assert 0 < mpmath.pi ** 2 / 6 - result.value < mpmath.mpf(1) / 10000

    def test_single_term(self, session):
        result = session.dirichlet("e(2)", 3, terms=2)
        assert abs(result.value - mpmath.mpf(1) / 8) < mpmath.mpf(10) ** -12

    def test_shift(self, session):
        shifted = session.dirichlet("one", 3, terms=50, shift=1)
        plain = session.dirichlet("one", 2, terms=50)
        assert abs(shifted.value - plain.value) < mpmath.mpf(10) ** -12

    def test_complex_point(self, session):
        result = session.dirichlet("e(2)", mpmath.mpc(0, 1), terms=2)
        expected = mpmath.power(2, mpmath.mpc(0, -1))
        assert abs(result.value - expected) < mpmath.mpf(10) ** -12

    def test_terms(self, session):
        with pytest.raises(InvalidParameter):
            session.dirichlet("one", 2, terms=0)
        with pytest.raises(InvalidParameter):
            session.dirichlet("dp(2, one)", 2, terms=10)


def test_numeric_exp(session):
    values = session.numeric_exp("one", horizon=4)
    assert len(values) == 4
    assert abs(values[1] - mpmath.e) < mpmath.mpf(10) ** -10
