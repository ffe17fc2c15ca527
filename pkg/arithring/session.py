"""

Session
*******

>>> session = Session(horizon=64)
>>> session.evaluate("Log(one)")[8]
Coefficient('1/3')

A :any:`Session` holds a :any:`RunConfig`; every expression is evaluated at
its horizon unless one is given explicitly.

------------------------------------------------------------------------

Examples
********

Row Iterator:

>>> for page in session.iter_rows("one*one", stop=20):
...     for n, exact, numeric in page:
...         print(n, exact)

All rows:

>>> session.rows("eps", stop=3)
[(1, '1', '1.0'), (2, '0', '0.0'), (3, '0', '0.0')]

Certificates:

>>> session.certify("jacobian", ["tau_star", "ind_prime"], derivs=["dp2", "dp3"])
>>> session.certify("at-primes", ["ind_p(2)", "ind_p(3)"], primes=[2, 3])
>>> session.oracle(["ind_p(2)", "ind_p(2)^2"], degree=2)

Dirichlet partial sums:

>>> session.dirichlet("one", 2, terms=10000).value
mpf('1.6448340718480...')

"""  #

from collections import namedtuple
import logging

import mpmath

from .arithfun import ArithFun
from .config import RunConfig
from .dsl import evaluate
from .errors import InvalidParameter
from .exactcoeff import coeff_eval_numeric
from .methods import CertificateMethods
from .operators import OperatorSpec
from .rearick import exp_numeric

logger = logging.getLogger(__name__)

PARTIAL_SUM_LABEL = "partial sum, no convergence claim"

DirichletSum = namedtuple("DirichletSum", "value terms s shift label")


class Session:
    def __init__(self, config=None, **settings):
        """
        If ``config`` is not provided, the keyword settings build one; any
        setting left out falls back to its ``ARITHRING_*`` environment
        variable. See :any:`RunConfig`.
        """
        self.config = config if config is not None else RunConfig(**settings)

    def _horizon(self, horizon):
        return self.config.horizon if horizon is None else horizon

    def evaluate(self, expression, horizon=None):
        """
        Evaluates an expression, or passes an :any:`ArithFun` through.

        Args:
            expression (``str``, :any:`ArithFun`): Expression text.
            horizon (``int``, optional): Defaults to the configured horizon.

        Returns:
            function (:any:`ArithFun`)
        """
        if isinstance(expression, ArithFun):
            return expression
        return evaluate(expression, self._horizon(horizon))

    def functions(self, expressions, horizon=None):
        return [self.evaluate(e, horizon) for e in expressions]

    def numeric(self, value):
        """ Numeric rendering of a coefficient at the configured precision """
        number = coeff_eval_numeric(value, self.config.precision).value
        return mpmath.nstr(number, self.config.precision)

    def iter_rows(self, expression, start=1, stop=None, horizon=None):
        """
        Row Iterator

        Yields lists of ``(n, exact, numeric)`` rows, at most ``page_size``
        per list. To get all rows at once use :any:`rows`.

        Args:
            expression (``str``): Expression text.
            start (``int``): First index, default 1.
            stop (``int``, optional): Last index, default the horizon of
                the result.

        Returns:
            iterator (``list``): Rows grouped by page size.
        """
        horizon = self._horizon(horizon)
        if stop is not None and stop > horizon:
            horizon = stop
        f = self.evaluate(expression, horizon)
        stop = f.horizon if stop is None else stop
        if start < 1 or stop < start:
            raise InvalidParameter("invalid range {}..{}".format(start, stop))
        if stop > f.horizon:
            raise InvalidParameter(
                "range end {} is beyond the result horizon {}".format(stop, f.horizon)
            )
        page = []
        for n in range(start, stop + 1):
            value = f[n]
            page.append((n, str(value), self.numeric(value)))
            if len(page) == self.config.page_size:
                yield page
                page = []
        if page:
            yield page

    def rows(self, expression, start=1, stop=None, horizon=None):
        all_rows = []
        for page in self.iter_rows(expression, start, stop, horizon):
            all_rows.extend(page)
        return all_rows

    def _operators(self, derivs):
        if derivs is None:
            return None
        if isinstance(derivs, (str, OperatorSpec)):
            derivs = [derivs]
        return [d if isinstance(d, OperatorSpec) else OperatorSpec.parse(d) for d in derivs]

    def certify(self, method, expressions, horizon=None, **arguments):
        """
        Runs a certificate method on a family of functions.

        >>> session.certify("orders", ["e(2)", "e(6)"]).verdict
        'IndependentCertified'

        Args:
            method (``str``): Method name or alias, see
                :any:`CertificateMethods`.
            expressions (``list``): Expression texts or functions.

        Keyword Args:
            derivs (``list``, optional): Operator labels such as ``"dp2"``.
            primes (``list``, optional): Primes.
            m (``int``, optional): Index for ``gvj``.
            ms (``list``, optional): Anchors for ``order_anchored``.
            g (``str``, optional): Multiplier expression for ``mg``.
            k (``int``, optional): First power for ``mg``.
            degree (``int``, optional): Oracle degree.

        Returns:
            certificate (:any:`Certificate`)
        """
        method_class = CertificateMethods._get(method)
        fs = self.functions(expressions, horizon)
        arguments["derivs"] = self._operators(arguments.get("derivs"))
        if isinstance(arguments.get("g"), str):
            arguments["g"] = self.evaluate(arguments["g"], horizon)
        if method_class.method_name == "oracle":
            arguments.setdefault("cap", self.config.monomial_cap)
        logger.debug("certify %s on %d functions", method_class.method_name, len(fs))
        return method_class(**arguments).run(fs)

    def oracle(self, expressions, degree=None, horizon=None):
        """
        Dependence oracle up to ``degree`` (default the configured degree
        cap).
        """
        degree = self.config.degree_cap if degree is None else int(degree)
        if degree > self.config.degree_cap:
            raise InvalidParameter(
                "degree {} exceeds the cap {}".format(degree, self.config.degree_cap)
            )
        return self.certify("oracle", expressions, horizon, degree=degree)

    def dirichlet(self, expression, s, terms=None, shift=None):
        """
        ``sum_{n <= terms} f(n) n^shift n^-s`` in floating point.

        Args:
            expression (``str``): Expression text.
            s (``complex``): Point of evaluation.
            terms (``int``, optional): Number of terms, default the
                configured horizon.
            shift (``complex``, optional): Exponent of the ``n^shift``
                multiplier.

        Returns:
            result (``DirichletSum``): Labelled as a partial sum.
        """
        terms = self.config.horizon if terms is None else int(terms)
        if terms < 1:
            raise InvalidParameter("terms must be at least 1, got {}".format(terms))
        f = self.evaluate(expression, terms)
        if f.horizon < terms:
            raise InvalidParameter(
                "{} terms requested but the result horizon is {}".format(terms, f.horizon)
            )
        with mpmath.workdps(self.config.precision + 10):
            s_value = mpmath.mpmathify(s)
            exponent = s_value - (mpmath.mpmathify(shift) if shift is not None else 0)
            total = mpmath.mpf(0)
            for n, value in enumerate(f.values[:terms], 1):
                if value:
                    numeric = coeff_eval_numeric(value, self.config.precision).value
                    total += numeric * mpmath.power(n, -exponent)
        return DirichletSum(total, terms, s, shift, PARTIAL_SUM_LABEL)

    def numeric_exp(self, expression, horizon=None):
        """ ``exp(f(1)) Exp(f - f(1) eps)`` as mpmath numbers """
        return exp_numeric(self.evaluate(expression, horizon), self.config.precision)

    def __repr__(self):
        return "<Session horizon:{}>".format(self.config.horizon)
