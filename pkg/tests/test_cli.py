import io
import json

import mpmath
import pytest

from arithring.cli import main, parse_complex, parse_range, split_top_level
from arithring.errors import InvalidParameter
from arithring.session import PARTIAL_SUM_LABEL


@pytest.fixture
def run(clean_env):
    def run(*argv):
        out = io.StringIO()
        code = main(list(argv), out=out)
        return code, out.getvalue()

    return run


class TestEval:
    def test_table(self, run):
        code, text = run("--horizon", "16", "eval", "Log(one)", "1..9")
        lines = text.splitlines()
        assert code == 0
        assert lines[0].split() == ["n", "f(n)", "numeric"]
        assert len(lines) == 10
        assert lines[4].split()[:2] == ["4", "1/2"]

    def test_json(self, run):
        code, text = run("--horizon", "16", "--output", "json", "eval", "one*one", "1..6")
        document = json.loads(text)
        assert document["values"] == ["1", "2", "2", "3", "2", "4"]
        assert document["horizon"] == 6
        assert document["expression"] == "one*one"

    def test_csv(self, run):
        code, text = run("--horizon", "8", "--output", "csv", "eval", "Lambda", "2")
        assert text.splitlines()[0] == "n,f(n),numeric"
        assert text.splitlines()[1].startswith("2,L2,0.693")

    def test_header_printed_once(self, run):
        code, text = run("--horizon", "200", "eval", "one", "1..150")
        assert text.count("f(n)") == 1


class TestCertify:
    def test_independent(self, run):
        code, text = run(
            "--horizon", "64", "certify", "jacobian", "--fns", "tau_star,ind_prime", "--derivs", "dp2,dp3"
        )
        assert code == 0
        document = json.loads(text)
        assert document["verdict"] == "IndependentCertified"
        assert document["witness"] == {"index": 4, "value": "2"}

    def test_inconclusive(self, run):
        code, text = run(
            "--horizon", "64", "certify", "jacobian",
            "--fns", "ind_p(2),ind_p(2)^2", "--derivs", "dp2,dp3",
        )
        assert code == 2
        assert json.loads(text)["verdict"] == "Inconclusive"

    def test_oracle(self, run):
        code, text = run("--horizon", "64", "oracle", "--fns", "ind_p(2),ind_p(2)^2", "--degree", "2")
        assert code == 3
        assert json.loads(text)["witness"]["relation"] == "x^2 - y"

    def test_orders_with_dashed_alias(self, run):
        code, text = run(
            "--horizon", "64", "certify", "order-anchored", "--fns", "ind_p(2),ind_p(3)", "--primes", "2,3"
        )
        assert code == 0
        assert json.loads(text)["method"] == "order_anchored"

    def test_domain_error(self, run, capsys):
        code, text = run("--horizon", "64", "certify", "at-primes", "--fns", "one,eps", "--primes", "2,2")
        assert code == 1
        assert text == ""
        assert "error:" in capsys.readouterr().err

    def test_missing_argument(self, run, capsys):
        code, _ = run("--horizon", "64", "certify", "jacobian", "--fns", "one")
        assert code == 1
        assert "--derivs" in capsys.readouterr().err

    def test_unknown_method(self, run):
        with pytest.raises(SystemExit) as excinfo:
            run("certify", "guess", "--fns", "one")
        assert excinfo.value.code == 1


class TestOtherCommands:
    def test_worked_examples(self, run):
        code, text = run("worked-examples")
        assert code == 0
        assert text.splitlines()[-1].endswith("0 failed")
        assert all(line.startswith("PASS") for line in text.splitlines()[:-1])

    def test_dirichlet(self, run):
        code, text = run("dirichlet", "one", "--s", "2", "--terms", "1000")
        assert code == 0
        assert "label: {}".format(PARTIAL_SUM_LABEL) in text
        assert "value: 1.64393" in text
        assert "s: 2.0\n" in text
        assert "j)" not in text

    @pytest.mark.parametrize("s", ["2", "2,0", "2, 0.0"])
    def test_dirichlet_real_point(self, run, s):
        code, text = run("dirichlet", "one", "--s", s, "--terms", "100")
        assert code == 0
        value = [line for line in text.splitlines() if line.startswith("value:")][0]
        assert value.startswith("value: 1.63498")

    def test_dirichlet_complex_point(self, run):
        code, text = run("dirichlet", "e(2)", "--s", "0,1", "--terms", "2")
        assert code == 0
        assert "s: (0.0 + 1.0j)" in text

    def test_numeric_exp(self, run):
        code, text = run("--horizon", "4", "numeric-exp", "one")
        lines = text.splitlines()
        assert lines[0].split() == ["n", "value"]
        assert lines[2].split()[1].startswith("2.71828")

    def test_check_laws(self, run):
        code, text = run("--horizon", "32", "--seed", "7", "check-laws", "--cases", "3")
        assert code == 0
        assert text.startswith("PASS")

    def test_version(self, run):
        with pytest.raises(SystemExit) as excinfo:
            run("--version")
        assert excinfo.value.code == 0

    def test_bad_horizon_from_environment(self, run, capsys, monkeypatch):
        monkeypatch.setenv("ARITHRING_HORIZON", "lots")
        code, _ = run("eval", "one", "1")
        assert code == 1
        assert "ARITHRING_HORIZON" in capsys.readouterr().err


def test_split_top_level():
    text = "ind_p(2), e(2),addfun{2: 1, 3: 1}"
    assert split_top_level(text) == ["ind_p(2)", "e(2)", "addfun{2: 1, 3: 1}"]


def test_parse_complex():
    assert isinstance(parse_complex("2"), mpmath.mpf)
    assert parse_complex("2") == 2
    assert isinstance(parse_complex("2,0"), mpmath.mpf)
    assert parse_complex("0.5, 14") == mpmath.mpc(0.5, 14)
    with pytest.raises(InvalidParameter):
        parse_complex("1,2,3")
    with pytest.raises(InvalidParameter):
        parse_complex("half")


@pytest.mark.parametrize("text,expected", [(None, (1, None)), ("6", (6, 6)), ("2..9", (2, 9))])
def test_parse_range(text, expected):
    assert parse_range(text) == expected


def test_parse_range_invalid():
    with pytest.raises(InvalidParameter):
        parse_range("a..b")
