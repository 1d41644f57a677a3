"""Text grammar for G_ω(X) terms: ``0``, ``c(x)``, ``th(W^w*c(x) + W^2*<term> + W^0*<term>)``
and sums of ``th(...)`` terms joined with ``+``."""
from typing import List

from ordwqo.theta.term import ZERO_TERM, Const, GTerm, Sum, Theta, Zero
from ordwqo.utils.error import ParamError
from ordwqo.utils.scanner import Scanner


def print_g(t: GTerm) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Const):
        return f"c({t.x})"
    if isinstance(t, Theta):
        tail = "".join(f" + W^{degree}*{print_g(coeff)}" for degree, coeff in t.tail)
        return f"th(W^w*c({t.head}){tail})"
    if isinstance(t, Sum):
        return " + ".join(print_g(s) for s in t.summands)
    raise ParamError(f"not a term: {t!r}")


def parse_g(text: str) -> GTerm:
    """Parse a term; the result is structural, :func:`well_formed` decides whether it is admissible.

    :raises ParseError: on malformed text.
    """
    scanner = Scanner(text)
    res = _parse_term(scanner)
    scanner.done()
    return res


def _parse_term(scanner: Scanner) -> GTerm:
    first = _parse_atom(scanner)
    summands: List[GTerm] = [first]
    while scanner.at("+") and scanner.at("th", 1):
        scanner.next()
        summands.append(_parse_atom(scanner))
    if len(summands) == 1:
        return first
    if not all(isinstance(s, Theta) for s in summands):
        raise scanner.error("only th-terms can be summed")
    return Sum(tuple(summands))


def _parse_atom(scanner: Scanner) -> GTerm:
    if scanner.accept("0"):
        return ZERO_TERM
    if scanner.accept("c"):
        scanner.expect("(")
        x = scanner.name()
        scanner.expect(")")
        return Const(x)
    if scanner.accept("th"):
        scanner.expect("(")
        for token in ("W", "^", "w", "*", "c", "("):
            scanner.expect(token)
        head = scanner.name()
        scanner.expect(")")
        tail = []
        while scanner.accept("+"):
            scanner.expect("W")
            scanner.expect("^")
            degree = scanner.integer()
            scanner.expect("*")
            tail.append((degree, _parse_term(scanner)))
        scanner.expect(")")
        return Theta(head, tuple(tail))
    raise scanner.error("expected '0', 'c(' or 'th('")
