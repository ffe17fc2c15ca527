"""
Errors
******

Every error raised by the package derives from :any:`ArithRingError`, and
also from the closest builtin exception, so both of these work:

>>> from arithring import builtin, conv_inverse
>>> try:
...     conv_inverse(builtin("e", 2, horizon=16))
... except NotInvertible:
...     pass

>>> try:
...     conv_inverse(builtin("e", 2, horizon=16))
... except ArithmeticError:
...     pass

"""  #


class ArithRingError(Exception):
    """ Base class for all arithring errors """


class InvalidParameter(ArithRingError, ValueError):
    pass


class UnknownBuiltin(ArithRingError, ValueError):
    pass


class OutOfRange(ArithRingError, ValueError):
    pass


class InvalidQ(ArithRingError, ValueError):
    pass


class NotInvertible(ArithRingError, ArithmeticError):
    pass


class ZeroToThePowerZero(ArithRingError, ArithmeticError):
    pass


class NotInA0(ArithRingError, ValueError):
    """ Exp is only defined exactly on functions with f(1) = 0 """


class NotInA1(ArithRingError, ValueError):
    """ Log is only defined exactly on functions with f(1) = 1 """


class UnsupportedDepth(ArithRingError, ValueError):
    pass


class HorizonExhausted(ArithRingError, IndexError):
    """ An operator needs values beyond the horizon of its input """


class HorizonTooLarge(ArithRingError, ValueError):
    pass


class DivisionByZeroValue(ArithRingError, ZeroDivisionError):
    pass


class NotSquare(ArithRingError, ValueError):
    pass


class DimensionTooLarge(ArithRingError, ValueError):
    pass


class NonDistinctPrimes(ArithRingError, ValueError):
    pass


class HypothesisViolated(ArithRingError, ValueError):
    pass


class ZeroFunction(ArithRingError, ValueError):
    pass


class CapExceeded(ArithRingError, ValueError):
    pass


class DslEvalError(ArithRingError, ValueError):
    pass


class DslSyntaxError(ArithRingError, SyntaxError):
    """
    Raised by :any:`arithring.dsl.parse`.

    Args:
        message (``str``): What went wrong.
        position (``int``): Offset in the source text, 0 based.
        expected (``tuple``): Token kinds that would have been accepted.
    """

    def __init__(self, message, position=0, expected=()):
        self.position = position
        self.expected = tuple(expected)
        text = "{} at position {}".format(message, position)
        if self.expected:
            text += " (expected one of: {})".format(", ".join(self.expected))
        super(DslSyntaxError, self).__init__(text)
