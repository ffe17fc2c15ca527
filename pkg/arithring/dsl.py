"""
Expression language
*******************

A small language for arithmetic functions. ``*`` is Dirichlet convolution,
``.`` is the pointwise product (same precedence, left associative), ``^`` is
a convolution power and ``+``/``-`` act index-wise. Coefficient literals
(``5/6``, ``L2``) stand for the function ``c * eps``; on the left of ``*``
they scale.

>>> evaluate("Log(one)", horizon=9).values[7]
Coefficient('1/3')
>>> evaluate("inv(eps - e(2))", horizon=8) == evaluate("ind_p(2)", horizon=8)
True
>>> to_text(parse("dL(ind_p(2)) - L2*(ind_p(2)^2 - ind_p(2))"))
'dL(ind_p(2)) - L2*(ind_p(2)^2 - ind_p(2))'

Grammar::

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | ".") unary)*
    unary := "-" unary | atom ("^" int)?
    atom  := int ("/" int)? | L<p> | builtin ("(" params ")")?
           | "(" expr ")" | func "(" args ")"
           | ("addfun" | "mulfun") "{" p ":" expr ("," p ":" expr)* "}"
    func  := Exp | Log | pow | inv | dL | dp | dhat | dk | mg | T | pw

"""  #

from dataclasses import dataclass, field
import logging
import re

from .arithfun import ArithFun, DEFAULT_HORIZON, check_horizon, conv, conv_inverse, conv_power
from .arithfun import linear, pointwise_mul
from .builtins import builtin, resolve_name
from .errors import ArithRingError, DslEvalError, DslSyntaxError, UnknownBuiltin
from .exactcoeff import Coefficient
from .numtheory import build_completely_additive, build_completely_multiplicative, is_prime
from .operators import OperatorSpec, apply
from .rearick import exp0, log1, power_fg

logger = logging.getLogger(__name__)

FUNCS = ("Exp", "Log", "pow", "inv", "dL", "dp", "dhat", "dk", "mg", "T", "pw")
BUILDERS = ("addfun", "mulfun")

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*.^(),/{}:]))"
)
_LOG_SYMBOL = re.compile(r"^L(\d+)$")
_SIMPLE_COEFF = re.compile(r"^(\d+|L\d+)$")


class Token(object):
    def __init__(self, kind, text, position):
        self.kind = kind
        self.text = text
        self.position = position

    def __repr__(self):
        return "Token({}, {!r}, {})".format(self.kind, self.text, self.position)


def tokenize(text):
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = _TOKEN.match(text, position)
        if not match:
            raise DslSyntaxError("unexpected character {!r}".format(text[position]), position)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# Nodes


@dataclass(frozen=True)
class Coeff:
    value: Coefficient
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Builtin:
    name: str
    params: tuple = ()
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Conv:
    left: object
    right: object
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pointwise:
    left: object
    right: object
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Add:
    left: object
    right: object
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sub:
    left: object
    right: object
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Scale:
    coeff: Coefficient
    expr: object
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ConvPow:
    expr: object
    k: int
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Exp:
    expr: object
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Log:
    expr: object
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: object
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Inverse:
    expr: object
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class OpApply:
    """ ``name`` is one of ``dL dp dhat dk T mg``; ``g`` is the ``mg`` multiplier """

    name: str
    param: int
    expr: object
    g: object = None
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PointwisePow:
    expr: object
    k: int
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Builder:
    kind: str
    table: tuple
    position: int = field(default=0, compare=False)


def _fold(node):
    """ The coefficient a node stands for, or ``None`` """
    return node.value if isinstance(node, Coeff) else None


class _Parser(object):
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message, expected=()):
        raise DslSyntaxError(message, self.token.position, expected)

    def accept(self, text):
        if self.token.kind == "op" and self.token.text == text:
            return self.advance()
        return None

    def expect(self, text):
        token = self.accept(text)
        if token is None:
            found = self.token.text or "end of input"
            self.fail("found {!r}".format(found), (repr(text),))
        return token

    def integer(self, signed=False):
        negative = bool(signed and self.accept("-"))
        if self.token.kind != "number":
            self.fail("found {!r}".format(self.token.text or "end of input"), ("integer",))
        value = int(self.advance().text)
        return -value if negative else value

    def parse(self):
        node = self.expr()
        if self.token.kind != "end":
            self.fail(
                "unexpected {!r}".format(self.token.text),
                ("'+'", "'-'", "'*'", "'.'", "end of input"),
            )
        return node

    def expr(self):
        node = self.term()
        while True:
            token = self.accept("+") or self.accept("-")
            if token is None:
                return node
            right = self.term()
            left_c, right_c = _fold(node), _fold(right)
            if left_c is not None and right_c is not None:
                value = left_c + right_c if token.text == "+" else left_c - right_c
                node = Coeff(value, node.position)
            elif token.text == "+":
                node = Add(node, right, node.position)
            else:
                node = Sub(node, right, node.position)

    def term(self):
        node = self.unary()
        operators = set()
        while True:
            token = self.accept("*") or self.accept(".")
            if token is None:
                break
            operators.add(token.text)
            right = self.unary()
            left_c, right_c = _fold(node), _fold(right)
            if token.text == "*":
                if left_c is not None and right_c is not None:
                    node = Coeff(left_c * right_c, node.position)
                elif left_c is not None:
                    node = Scale(left_c, right, node.position)
                elif right_c is not None:
                    node = Scale(right_c, node, node.position)
                else:
                    node = Conv(node, right, node.position)
            else:
                node = Pointwise(node, right, node.position)
        if len(operators) > 1:
            logger.warning(
                "'*' and '.' mixed without parentheses at position %d; "
                "they group left to right",
                node.position,
            )
        return node

    def unary(self):
        minus = self.accept("-")
        if minus is not None:
            node = self.unary()
            value = _fold(node)
            if value is not None:
                return Coeff(-value, minus.position)
            return Scale(Coefficient.rational(-1), node, minus.position)
        node = self.atom()
        if self.accept("^"):
            k = self.integer(signed=True)
            value = _fold(node)
            if value is not None:
                try:
                    return Coeff(value ** k, node.position)
                except ArithRingError as exc:
                    raise DslSyntaxError(str(exc), node.position)
            return ConvPow(node, k, node.position)
        return node

    def atom(self):
        token = self.token
        if token.kind == "number":
            numerator = int(self.advance().text)
            if self.accept("/"):
                denominator = self.integer()
                if denominator == 0:
                    raise DslSyntaxError("zero denominator", token.position)
                return Coeff(Coefficient.rational(numerator) / denominator, token.position)
            return Coeff(Coefficient.rational(numerator), token.position)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if token.kind != "ident":
            self.fail(
                "found {!r}".format(token.text or "end of input"),
                ("number", "name", "'('"),
            )
        self.advance()
        symbol = _LOG_SYMBOL.match(token.text)
        if symbol:
            p = int(symbol.group(1))
            if not is_prime(p):
                raise DslSyntaxError("{} is not a log symbol of a prime".format(token.text), token.position)
            return Coeff(Coefficient.log_prime(p), token.position)
        if token.text in FUNCS:
            return self.func(token)
        if token.text in BUILDERS:
            return self.builder(token)
        return self.builtin(token)

    def func(self, token):
        name = token.text
        self.expect("(")
        if name in ("Exp", "Log", "inv", "dL"):
            arg = self.expr()
            node = {
                "Exp": lambda: Exp(arg, token.position),
                "Log": lambda: Log(arg, token.position),
                "inv": lambda: Inverse(arg, token.position),
                "dL": lambda: OpApply("dL", None, arg, None, token.position),
            }[name]()
        elif name == "pow":
            base = self.expr()
            self.expect(",")
            node = Pow(base, self.expr(), token.position)
        elif name in ("dp", "dhat", "dk", "T"):
            param = self.integer(signed=(name == "T"))
            self.expect(",")
            node = OpApply(name, param, self.expr(), None, token.position)
        elif name == "mg":
            g = self.expr()
            self.expect(",")
            i = self.integer(signed=True)
            self.expect(",")
            node = OpApply("mg", i, self.expr(), g, token.position)
        else:
            arg = self.expr()
            self.expect(",")
            node = PointwisePow(arg, self.integer(), token.position)
        self.expect(")")
        return node

    def builder(self, token):
        self.expect("{")
        table = []
        while True:
            p = self.integer()
            if not is_prime(p):
                raise DslSyntaxError("{} is not a prime".format(p), self.tokens[self.index - 1].position)
            self.expect(":")
            value_token = self.token
            value = _fold(self.expr())
            if value is None:
                raise DslSyntaxError("expected a coefficient", value_token.position)
            table.append((p, value))
            if not self.accept(","):
                break
        self.expect("}")
        return Builder(token.text, tuple(table), token.position)

    def builtin(self, token):
        try:
            resolve_name(token.text)
        except UnknownBuiltin as exc:
            raise UnknownBuiltin("{} [at position {}]".format(exc, token.position))
        params = []
        if self.accept("("):
            while True:
                if self.token.kind == "ident":
                    params.append(self.advance().text)
                else:
                    params.append(self.integer(signed=True))
                if not self.accept(","):
                    break
            self.expect(")")
        return Builtin(token.text, tuple(params), token.position)


def parse(text):
    """
    Parses ``text`` into an expression tree.

    Raises:
        DslSyntaxError: With the offending position and the accepted tokens.
    """
    return _Parser(text).parse()


def parse_coefficient(text):
    """ Parses a coefficient such as ``"5/6 + 2*L2*L3^2"`` """
    node = parse(text)
    value = _fold(node)
    if value is None:
        raise DslSyntaxError("expected a coefficient", node.position)
    return value


# Printing

_PRECEDENCE = {Add: 1, Sub: 1, Conv: 2, Pointwise: 2, Scale: 2, ConvPow: 3}


def _precedence(node):
    if isinstance(node, Coeff) and not _SIMPLE_COEFF.match(str(node.value)):
        return 0
    return _PRECEDENCE.get(type(node), 4)


def _child(node, minimum):
    text = to_text(node)
    return "({})".format(text) if _precedence(node) < minimum else text


def _coefficient_text(value):
    text = str(value)
    return text if _SIMPLE_COEFF.match(text) else "({})".format(text)


def to_text(node):
    """ Source text that parses back to ``node`` """
    if isinstance(node, Coeff):
        return str(node.value)
    if isinstance(node, Builtin):
        if not node.params:
            return node.name
        return "{}({})".format(node.name, ",".join(str(p) for p in node.params))
    if isinstance(node, (Add, Sub, Conv, Pointwise)):
        symbol = {Add: " + ", Sub: " - ", Conv: "*", Pointwise: "."}[type(node)]
        level = _PRECEDENCE[type(node)]
        return _child(node.left, level) + symbol + _child(node.right, level + 1)
    if isinstance(node, Scale):
        return _coefficient_text(node.coeff) + "*" + _child(node.expr, 3)
    if isinstance(node, ConvPow):
        return "{}^{}".format(_child(node.expr, 4), node.k)
    if isinstance(node, Exp):
        return "Exp({})".format(to_text(node.expr))
    if isinstance(node, Log):
        return "Log({})".format(to_text(node.expr))
    if isinstance(node, Inverse):
        return "inv({})".format(to_text(node.expr))
    if isinstance(node, Pow):
        return "pow({}, {})".format(to_text(node.base), to_text(node.exponent))
    if isinstance(node, PointwisePow):
        return "pw({}, {})".format(to_text(node.expr), node.k)
    if isinstance(node, Builder):
        items = ", ".join("{}: {}".format(p, v) for p, v in node.table)
        return "%s{%s}" % (node.kind, items)
    if node.name == "dL":
        return "dL({})".format(to_text(node.expr))
    if node.name == "mg":
        return "mg({}, {}, {})".format(to_text(node.g), node.param, to_text(node.expr))
    return "{}({}, {})".format(node.name, node.param, to_text(node.expr))


# Evaluation


def _operator(node, horizon):
    if node.name == "dL":
        return OperatorSpec.log_deriv()
    if node.name == "dp":
        return OperatorSpec.basic(node.param)
    if node.name == "dhat":
        return OperatorSpec.dk_hat(node.param)
    if node.name == "dk":
        return OperatorSpec.dk(node.param)
    if node.name == "T":
        return OperatorSpec.shift(node.param)
    g = eval_expr(node.g, horizon)
    return OperatorSpec.mul(g, node.param, label="mg({},{})".format(to_text(node.g), node.param))


def _evaluate(node, horizon):
    if isinstance(node, Coeff):
        return ArithFun.eps(horizon).scale(node.value)
    if isinstance(node, Builtin):
        return builtin(node.name, *node.params, horizon=horizon)
    if isinstance(node, Conv):
        return conv(eval_expr(node.left, horizon), eval_expr(node.right, horizon))
    if isinstance(node, Pointwise):
        return pointwise_mul(eval_expr(node.left, horizon), eval_expr(node.right, horizon))
    if isinstance(node, Add):
        return linear("add", eval_expr(node.left, horizon), eval_expr(node.right, horizon))
    if isinstance(node, Sub):
        return linear("sub", eval_expr(node.left, horizon), eval_expr(node.right, horizon))
    if isinstance(node, Scale):
        return eval_expr(node.expr, horizon).scale(node.coeff)
    if isinstance(node, ConvPow):
        return conv_power(eval_expr(node.expr, horizon), node.k)
    if isinstance(node, Exp):
        return exp0(eval_expr(node.expr, horizon))
    if isinstance(node, Log):
        return log1(eval_expr(node.expr, horizon))
    if isinstance(node, Inverse):
        return conv_inverse(eval_expr(node.expr, horizon))
    if isinstance(node, Pow):
        return power_fg(eval_expr(node.base, horizon), eval_expr(node.exponent, horizon))
    if isinstance(node, PointwisePow):
        if node.k < 0:
            raise DslEvalError("pw needs a nonnegative power, got {}".format(node.k))
        f = eval_expr(node.expr, horizon)
        result = ArithFun([1] * f.horizon)
        for _ in range(node.k):
            result = pointwise_mul(result, f)
        return result
    if isinstance(node, Builder):
        table = dict(node.table)
        if node.kind == "addfun":
            return build_completely_additive(table, horizon)
        return build_completely_multiplicative(table, horizon)
    if isinstance(node, OpApply):
        return apply(_operator(node, horizon), eval_expr(node.expr, horizon))
    raise DslEvalError("cannot evaluate {!r}".format(node))


def eval_expr(node, horizon=DEFAULT_HORIZON):
    """
    Evaluates an expression tree.

    Operators that shrink the horizon shrink the result; binary nodes keep
    the smaller horizon of their operands.

    Raises:
        ArithRingError: The domain error of the failing node, with
            ``[at position k]`` appended.
    """
    horizon = check_horizon(horizon)
    try:
        return _evaluate(node, horizon)
    except ArithRingError as exc:
        if getattr(exc, "dsl_position", None) is not None:
            raise
        error = _with_position(type(exc), exc, node.position)
    except (ArithmeticError, ValueError) as exc:
        error = _with_position(DslEvalError, exc, node.position)
    raise error


def _with_position(error_class, exc, position):
    try:
        error = error_class("{} [at position {}]".format(exc, position))
    except TypeError:
        error = DslEvalError("{} [at position {}]".format(exc, position))
    error.dsl_position = position
    error.__cause__ = exc
    return error


def evaluate(text, horizon=DEFAULT_HORIZON):
    """ Parses and evaluates ``text`` at ``horizon`` """
    return eval_expr(parse(text), horizon)
