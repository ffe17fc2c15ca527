"""
Certificate methods are looked up by name. Each name has a snake-case
spelling and, where the command line used a dashed one, an alias
(``at_primes`` or ``at-primes``).

Refer to the :any:`Session` class for how the arguments are collected from
expressions.

>>> method = CertificateMethods._get("at-primes")
>>> method.method_name
'at_primes'
>>> method(primes=[2, 3]).run(functions)

"""  #

import logging

from .errors import InvalidParameter
from .independence import (
    certify_escape,
    certify_jacobian,
    certify_mg_transcendence,
    certify_orders,
    certify_triangular,
    certify_triangular_kernels,
    certify_value_tests,
    dependence_oracle,
    wronskian_li,
)

logger = logging.getLogger(__name__)


class _BaseMethod:
    requires = ()
    optional = ()

    def __init__(self, **arguments):
        for name in self.requires:
            if arguments.get(name) is None:
                raise InvalidParameter(
                    "method {} needs --{}".format(self.method_name, name)
                )
        allowed = set(self.requires) | set(self.optional)
        self.arguments = {
            name: value
            for name, value in arguments.items()
            if name in allowed and value is not None
        }
        ignored = sorted(
            name for name, value in arguments.items()
            if name not in allowed and value is not None
        )
        if ignored:
            logger.warning("%s ignores %s", self.method_name, ", ".join(ignored))

    def run(self, fs):
        raise NotImplementedError

    def __repr__(self):
        return "<{} {}>".format(type(self).__name__, self.method_name)


class CertificateMethods:
    class JacobianMethod(_BaseMethod):
        """
        Jacobian Method

        Names:
            ``jacobian``

        ``det(D_j f_i)`` for derivations ``D_j``.

        Usage:

        >>> session.certify("jacobian", ["tau_star", "ind_prime"], derivs=["dp2", "dp3"])

        Args:
            derivs (``list``): One operator per function.
        """

        method_name = "jacobian"
        alias = method_name
        requires = ("derivs",)

        def run(self, fs):
            return certify_jacobian(fs, self.arguments["derivs"])

    class AtPrimesMethod(_BaseMethod):
        """
        Values At Primes Method

        Names:
            ``at_primes`` or ``at-primes``

        ``det(f_i(p_j))``, the Jacobian of basic derivations at 1.

        Args:
            primes (``list``): One distinct prime per function.
        """

        method_name = "at_primes"
        alias = "at-primes"
        requires = ("primes",)

        def run(self, fs):
            return certify_value_tests(fs, self.arguments["primes"], "at_primes")

    class GvjMethod(_BaseMethod):
        """
        Ordered Factorization Method

        Names:
            ``gvj``

        The basic-derivation Jacobian at ``m`` as a sum over ordered
        factorizations of ``m``.

        Args:
            primes (``list``): One distinct prime per function.
            m (``int``): Index, default 1.
        """

        method_name = "gvj"
        alias = method_name
        requires = ("primes",)
        optional = ("m",)

        def run(self, fs):
            return certify_value_tests(
                fs, self.arguments["primes"], "gvj", m=self.arguments.get("m", 1)
            )

    class OrderAnchoredMethod(_BaseMethod):
        """
        Order Anchored Method

        Names:
            ``order_anchored`` or ``order-anchored``

        ``det(dp_j f_i(m_j))`` with each ``m_j`` at most the orders in its
        column.

        Args:
            primes (``list``): One distinct prime per function.
            ms (``list``, optional): Anchors; default the least order per
                column.
        """

        method_name = "order_anchored"
        alias = "order-anchored"
        requires = ("primes",)
        optional = ("ms",)

        def run(self, fs):
            return certify_value_tests(
                fs, self.arguments["primes"], "order_anchored", ms=self.arguments.get("ms")
            )

    class OrdersMethod(_BaseMethod):
        """
        Orders Method

        Names:
            ``orders``

        Multiplicatively independent orders ``v(f_i)``.

        >>> session.certify("orders", ["e(2)", "e(6)"])
        """

        method_name = "orders"
        alias = method_name

        def run(self, fs):
            return certify_orders(fs)

    class TriangularMethod(_BaseMethod):
        """
        Triangular Support Method

        Names:
            ``triangular``

        Args:
            primes (``list``): ``p_j`` divides the support of ``f_j`` only
                from ``j`` on.
        """

        method_name = "triangular"
        alias = method_name
        requires = ("primes",)

        def run(self, fs):
            return certify_triangular(fs, self.arguments["primes"])

    class TriangularKernelsMethod(_BaseMethod):
        """
        Triangular Kernel Method

        Names:
            ``triangular_kernels`` or ``triangular-kernels``

        Args:
            derivs (``list``): ``D_j`` kills ``f_i`` for ``i < j``.
        """

        method_name = "triangular_kernels"
        alias = "triangular-kernels"
        requires = ("derivs",)

        def run(self, fs):
            return certify_triangular_kernels(fs, self.arguments["derivs"])

    class EscapeMethod(_BaseMethod):
        """
        Support Escape Method

        Names:
            ``escape``

        The first function against the others: a prime of its support that
        no other support reaches.
        """

        method_name = "escape"
        alias = method_name

        def run(self, fs):
            if len(fs) < 2:
                raise InvalidParameter("escape needs f and at least one g")
            return certify_escape(fs[0], list(fs[1:]))

    class WronskianMethod(_BaseMethod):
        """
        Wronskian Method

        Names:
            ``wronskian``

        Linear independence from ``det(D^j f_i)``.

        Args:
            derivs (``list``): A single operator ``D``.
        """

        method_name = "wronskian"
        alias = method_name
        requires = ("derivs",)

        def run(self, fs):
            derivs = self.arguments["derivs"]
            if len(derivs) != 1:
                raise InvalidParameter("wronskian takes one operator, got {}".format(len(derivs)))
            return wronskian_li(fs, derivs[0])

    class MultiplierMethod(_BaseMethod):
        """
        Multiplier Family Method

        Names:
            ``mg`` or ``mg_transcendence``

        ``{m_g^i f : k <= i < k + n}`` for a single ``f``.

        Args:
            g: Multiplier function.
            primes (``list``): Distinct primes of ``[supp f]``.
            k (``int``): First power, default 0.
        """

        method_name = "mg_transcendence"
        alias = "mg"
        requires = ("g", "primes")
        optional = ("k",)

        def run(self, fs):
            if len(fs) != 1:
                raise InvalidParameter("mg takes a single base function, got {}".format(len(fs)))
            return certify_mg_transcendence(
                fs[0], self.arguments["g"], self.arguments["primes"], self.arguments.get("k", 0)
            )

    class OracleMethod(_BaseMethod):
        """
        Dependence Oracle

        Names:
            ``oracle``

        Args:
            degree (``int``): Highest total degree.
            cap (``int``, optional): Monomial cap, default 500.
        """

        method_name = "oracle"
        alias = method_name
        requires = ("degree",)
        optional = ("cap",)

        def run(self, fs):
            return dependence_oracle(
                fs, self.arguments["degree"], cap=self.arguments.get("cap", 500)
            )

    @classmethod
    def _discover_methods(cls):
        """
        Returns a dict where the method name is key, and class is value.
        Both spellings of a name are added.
        """
        try:
            return cls.methods
        except AttributeError:
            methods = {}
            for class_name in dir(cls):
                method_class = getattr(cls, class_name)
                if hasattr(method_class, "method_name"):
                    methods[method_class.method_name] = method_class
                    methods[method_class.alias] = method_class
            cls.methods = methods
        return cls.methods

    @classmethod
    def _get(cls, name):
        """ Returns a method class by either of its names """
        method_classes = cls._discover_methods()
        try:
            return method_classes[name]
        except KeyError:
            raise InvalidParameter("invalid method keyword {}".format(name))

    @classmethod
    def names(cls):
        return sorted({m.method_name for m in cls._discover_methods().values()})
