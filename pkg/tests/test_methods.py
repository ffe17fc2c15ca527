import pytest

from arithring import builtin
from arithring.errors import InvalidParameter
from arithring.independence import INDEPENDENT
from arithring.methods import CertificateMethods
from arithring.operators import OperatorSpec


@pytest.mark.parametrize(
    "name,method_name",
    [
        ("jacobian", "jacobian"),
        ("at_primes", "at_primes"),
        ("at-primes", "at_primes"),
        ("gvj", "gvj"),
        ("order-anchored", "order_anchored"),
        ("orders", "orders"),
        ("triangular", "triangular"),
        ("triangular-kernels", "triangular_kernels"),
        ("escape", "escape"),
        ("wronskian", "wronskian"),
        ("mg", "mg_transcendence"),
        ("mg_transcendence", "mg_transcendence"),
        ("oracle", "oracle"),
    ],
)
def test_get(name, method_name):
    assert CertificateMethods._get(name).method_name == method_name


def test_invalid_keyword():
    with pytest.raises(InvalidParameter) as excinfo:
        CertificateMethods._get("bogus")
    assert "invalid method keyword bogus" in str(excinfo.value)


def test_names():
    names = CertificateMethods.names()
    assert "at_primes" in names
    assert "at-primes" not in names
    assert len(names) == 11


@pytest.mark.parametrize(
    "name,missing",
    [("jacobian", "--derivs"), ("gvj", "--primes"), ("mg", "--g"), ("oracle", "--degree")],
)
def test_missing_argument(name, missing):
    with pytest.raises(InvalidParameter) as excinfo:
        CertificateMethods._get(name)()
    assert missing in str(excinfo.value)


def test_ignored_arguments_warn(caplog):
    method = CertificateMethods._get("orders")(primes=[2, 3], m=None)
    assert method.arguments == {}
    assert "orders ignores primes" in caplog.text


def test_run():
    fs = [builtin("ind_p", 2, horizon=32), builtin("ind_p", 3, horizon=32)]
    method = CertificateMethods._get("at-primes")(primes=[2, 3])
    assert method.run(fs).verdict == INDEPENDENT
    assert repr(method) == "<AtPrimesMethod at_primes>"


class TestArity:
    def test_escape_needs_two(self):
        with pytest.raises(InvalidParameter):
            CertificateMethods._get("escape")().run([builtin("one", horizon=8)])

    def test_wronskian_takes_one_operator(self):
        ops = [OperatorSpec.basic(2), OperatorSpec.basic(3)]
        with pytest.raises(InvalidParameter):
            CertificateMethods._get("wronskian")(derivs=ops).run([builtin("one", horizon=8)])

    def test_mg_takes_one_function(self):
        method = CertificateMethods._get("mg")(g="log", primes=[2])
        with pytest.raises(InvalidParameter):
            method.run([builtin("one", horizon=8)] * 2)
