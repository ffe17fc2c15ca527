"""
Command line
************

::

    $ arithring eval "Log(one)" 1..9
    $ arithring --output json certify jacobian --fns tau_star,ind_prime --derivs dp2,dp3
    $ arithring certify orders --fns "e(2),e(6)"
    $ arithring oracle --fns "ind_p(2),ind_p(2)^2" --degree 2
    $ arithring worked-examples
    $ arithring dirichlet one --s 2 --terms 10000
    $ arithring numeric-exp "one"
    $ arithring --seed 7 check-laws

Global flags come before the subcommand. ``certify`` and ``oracle`` exit
with 0 for ``IndependentCertified``, 2 for ``Inconclusive`` and 3 for
``DependentRelationFound``; any error exits with 1.

"""  #

import argparse
import csv
import json
import logging
import random
import sys

import mpmath

from .__version__ import __version__
from .config import OUTPUT_FORMATS
from .errors import ArithRingError, InvalidParameter
from .laws import check_laws
from .methods import CertificateMethods
from .session import Session
from .worked import run_worked_examples

logger = logging.getLogger(__name__)

EXIT_ERROR = 1


def split_top_level(text):
    """ Splits at commas outside parentheses and braces """
    parts, depth, current = [], 0, []
    for char in text:
        if char in "({":
            depth += 1
        elif char in ")}":
            depth -= 1
        if char == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(char)
    parts.append("".join(current).strip())
    return [part for part in parts if part]


def _integers(text):
    try:
        return [int(part) for part in split_top_level(text)]
    except ValueError:
        raise InvalidParameter("expected comma separated integers, got {!r}".format(text))


def parse_complex(text):
    """ ``"2"`` as an mpmath real, ``"0.5,14.1347"`` as an mpmath complex number """
    parts = [part.strip() for part in text.split(",")]
    if len(parts) not in (1, 2):
        raise InvalidParameter("expected 're' or 're,im', got {!r}".format(text))
    try:
        real = mpmath.mpf(parts[0])
        imag = mpmath.mpf(parts[1]) if len(parts) == 2 else mpmath.mpf(0)
    except ValueError:
        raise InvalidParameter("invalid complex number {!r}".format(text))
    if not imag:
        return real
    return mpmath.mpc(real, imag)


def parse_range(text):
    """ ``"1..9"`` or ``"6"`` as ``(start, stop)`` """
    if text is None:
        return 1, None
    try:
        if ".." in text:
            start, stop = text.split("..", 1)
            return int(start), int(stop)
        n = int(text)
    except ValueError:
        raise InvalidParameter("invalid range {!r}".format(text))
    return n, n


class _ArgumentParser(argparse.ArgumentParser):
    """ Usage errors exit with 1; 2 and 3 are verdicts """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, "{}: error: {}\n".format(self.prog, message))


def build_parser():
    parser = _ArgumentParser(
        prog="arithring", description="Exact arithmetic functions and independence certificates."
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--horizon", type=int, default=None, help="truncation point")
    parser.add_argument("--output", choices=OUTPUT_FORMATS, default=None)
    parser.add_argument("--precision", type=int, default=None, help="digits of numeric columns")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    parser.add_argument("--degree-cap", type=int, default=None, dest="degree_cap")
    parser.add_argument("--monomial-cap", type=int, default=None, dest="monomial_cap")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug"
    )
    commands = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    commands.required = True

    evaluate = commands.add_parser("eval", help="print f(n) for an expression")
    evaluate.add_argument("expression")
    evaluate.add_argument("range", nargs="?", default=None, help="n or a..b")
    evaluate.set_defaults(handler=cmd_eval)

    certify = commands.add_parser("certify", help="run an independence certificate")
    certify.add_argument("method", choices=sorted(CertificateMethods._discover_methods()))
    certify.add_argument("--fns", required=True, help="comma separated expressions")
    certify.add_argument("--derivs", default=None, help="operator labels, e.g. dp2,dp3")
    certify.add_argument("--primes", type=_integers, default=None)
    certify.add_argument("--m", type=int, default=None)
    certify.add_argument("--ms", type=_integers, default=None)
    certify.add_argument("--g", default=None, help="multiplier expression for mg")
    certify.add_argument("--k", type=int, default=None)
    certify.add_argument("--degree", type=int, default=None)
    certify.set_defaults(handler=cmd_certify)

    oracle = commands.add_parser("oracle", help="search for polynomial relations")
    oracle.add_argument("--fns", required=True)
    oracle.add_argument("--degree", type=int, default=None)
    oracle.set_defaults(handler=cmd_oracle)

    worked = commands.add_parser("worked-examples", help="recompute known values")
    worked.set_defaults(handler=cmd_worked_examples)

    dirichlet = commands.add_parser("dirichlet", help="numeric Dirichlet partial sum")
    dirichlet.add_argument("expression")
    dirichlet.add_argument("--s", type=parse_complex, required=True, help="re or re,im")
    dirichlet.add_argument("--terms", type=int, default=None)
    dirichlet.add_argument("--shift", type=parse_complex, default=None, help="re or re,im")
    dirichlet.set_defaults(handler=cmd_dirichlet)

    numeric_exp = commands.add_parser("numeric-exp", help="exp(f(1)) Exp(f - f(1)) numerically")
    numeric_exp.add_argument("expression")
    numeric_exp.set_defaults(handler=cmd_numeric_exp)

    laws = commands.add_parser("check-laws", help="seeded random ring identities")
    laws.add_argument("--cases", type=int, default=20)
    laws.set_defaults(handler=cmd_check_laws)
    return parser


def _emit_rows(session, rows, header, out):
    output = session.config.output
    if output == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    lines = ([header] if header else []) + list(rows)
    widths = [max(len(str(row[i])) for row in lines) for i in range(len(lines[0]))]
    for row in lines:
        out.write("  ".join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip())
        out.write("\n")


def _emit_json(document, out):
    json.dump(document, out, indent=2, sort_keys=True)
    out.write("\n")


def cmd_eval(session, args, out):
    start, stop = parse_range(args.range)
    if session.config.output == "json":
        f = session.evaluate(args.expression, max(session.config.horizon, stop or 0))
        stop = f.horizon if stop is None else stop
        document = f.truncate(stop).to_json()
        document["expression"] = args.expression
        _emit_json(document, out)
        return 0
    header = ("n", "f(n)", "numeric")
    if session.config.output == "csv":
        _emit_rows(session, session.rows(args.expression, start, stop), header, out)
        return 0
    for page in session.iter_rows(args.expression, start, stop):
        _emit_rows(session, page, header, out)
        header = None
    return 0


def _certificate_arguments(args):
    arguments = {}
    for name in ("primes", "m", "ms", "g", "k", "degree"):
        arguments[name] = getattr(args, name, None)
    if args.derivs is not None:
        arguments["derivs"] = split_top_level(args.derivs)
    return arguments


def _emit_certificate(certificate, out):
    _emit_json(certificate.to_dict(), out)
    return certificate.exit_code


def cmd_certify(session, args, out):
    certificate = session.certify(
        args.method, split_top_level(args.fns), **_certificate_arguments(args)
    )
    return _emit_certificate(certificate, out)


def cmd_oracle(session, args, out):
    certificate = session.oracle(split_top_level(args.fns), degree=args.degree)
    return _emit_certificate(certificate, out)


def cmd_worked_examples(session, args, out):
    results = run_worked_examples()
    if session.config.output == "json":
        _emit_json(
            [
                {"name": r.name, "expected": r.expected, "computed": r.computed, "passed": r.passed}
                for r in results
            ],
            out,
        )
    else:
        for result in results:
            out.write(result.describe() + "\n")
    failed = sum(1 for r in results if not r.passed)
    if session.config.output != "json":
        out.write("{} passed, {} failed\n".format(len(results) - failed, failed))
    return 0 if not failed else EXIT_ERROR


def _number(value, precision):
    if isinstance(value, mpmath.mpc) and not value.imag:
        value = value.real
    return mpmath.nstr(value, precision)


def cmd_dirichlet(session, args, out):
    result = session.dirichlet(args.expression, args.s, terms=args.terms, shift=args.shift)
    precision = session.config.precision
    document = {
        "expression": args.expression,
        "s": _number(result.s, precision),
        "terms": result.terms,
        "value": _number(result.value, precision),
        "label": result.label,
    }
    if result.shift is not None:
        document["shift"] = _number(result.shift, precision)
    if session.config.output == "json":
        _emit_json(document, out)
    else:
        for key in ("expression", "s", "shift", "terms", "value", "label"):
            if key in document:
                out.write("{}: {}\n".format(key, document[key]))
    return 0


def cmd_numeric_exp(session, args, out):
    values = session.numeric_exp(args.expression)
    precision = session.config.precision
    rows = [(n, _number(v, precision)) for n, v in enumerate(values, 1)]
    if session.config.output == "json":
        _emit_json({"expression": args.expression, "values": [v for _, v in rows]}, out)
    else:
        _emit_rows(session, rows, ("n", "value"), out)
    return 0


def cmd_check_laws(session, args, out):
    rng = random.Random(session.config.seed)
    horizon = min(session.config.horizon, 256)
    report = check_laws(rng, horizon=horizon, cases=args.cases)
    for name, passed, failures in report:
        out.write("{}  {} ({} of {} failed)\n".format(
            "PASS" if passed else "FAIL", name, failures, args.cases
        ))
    return 0 if all(passed for _, passed, _ in report) else EXIT_ERROR


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv=None, out=None):
    """ Entry point of the ``arithring`` command; returns the exit status """
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        session = Session(
            horizon=args.horizon,
            output=args.output,
            precision=args.precision,
            seed=args.seed,
            degree_cap=args.degree_cap,
            monomial_cap=args.monomial_cap,
        )
        return args.handler(session, args, out)
    except ArithRingError as exc:
        sys.stderr.write("error: {}\n".format(exc))
        return EXIT_ERROR
