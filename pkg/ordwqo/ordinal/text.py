"""Text grammar for CNF ordinals: ``0``, ``w``, ``w^<exp>``, ``w^<exp>*<int>``, sums with ``+``
and parentheses, e.g. ``w^w*2 + w + 3``."""
from typing import Dict

from ordwqo.ordinal.cnf import OMEGA, ONE, OrdinalCNF, add, mul, of_int, omega_power
from ordwqo.utils.scanner import Scanner


def _print_term(exponent: OrdinalCNF, coeff: int, texts: Dict[int, str]) -> str:
    if exponent.is_zero:
        return str(coeff)
    if exponent == ONE:
        base = "w"
    elif exponent.is_finite or exponent == OMEGA:
        base = f"w^{texts[id(exponent)]}"
    else:
        base = f"w^({texts[id(exponent)]})"
    return base if coeff == 1 else f"{base}*{coeff}"


def print_cnf(a: OrdinalCNF) -> str:
    """Canonical text of a CNF ordinal.

    Example:
        .. code-block:: python

            from ordwqo.ordinal.cnf import nat_prod
            from ordwqo.ordinal.text import parse_cnf, print_cnf

            print_cnf(nat_prod(parse_cnf("w+1"), parse_cnf("w+1")))
            # 'w^2 + w*2 + 1'
    """
    # exponents are printed before the ordinals that use them
    texts: Dict[int, str] = {}
    stack = [a]
    while stack:
        x = stack[-1]
        if id(x) in texts:
            stack.pop()
            continue
        pending = [e for e, _ in x.terms if id(e) not in texts]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        if x.is_zero:
            texts[id(x)] = "0"
        else:
            texts[id(x)] = " + ".join(_print_term(e, c, texts) for e, c in x.terms)
    return texts[id(a)]


def parse_cnf(text: str) -> OrdinalCNF:
    """Parse the CNF grammar; ``+`` is ordinal addition, so non-canonical sums are normalized.

    :raises ParseError: on malformed text.
    """
    scanner = Scanner(text)
    res = _parse_sum(scanner)
    scanner.done()
    return res


def _parse_sum(scanner: Scanner) -> OrdinalCNF:
    res = _parse_product(scanner)
    while scanner.accept("+"):
        res = add(res, _parse_product(scanner))
    return res


def _parse_product(scanner: Scanner) -> OrdinalCNF:
    res = _parse_atom(scanner)
    while scanner.accept("*"):
        res = mul(res, of_int(scanner.integer()))
    return res


def _parse_atom(scanner: Scanner) -> OrdinalCNF:
    if scanner.accept("("):
        res = _parse_sum(scanner)
        scanner.expect(")")
        return res
    if scanner.accept("w"):
        if scanner.accept("^"):
            return omega_power(_parse_exponent(scanner))
        return OMEGA
    token = scanner.peek()
    if token is not None and token[0] == "int":
        return of_int(scanner.integer())
    raise scanner.error("expected an integer, 'w' or '('")


def _parse_exponent(scanner: Scanner) -> OrdinalCNF:
    if scanner.accept("("):
        res = _parse_sum(scanner)
        scanner.expect(")")
        return res
    if scanner.accept("w"):
        return OMEGA
    token = scanner.peek()
    if token is not None and token[0] == "int":
        return of_int(scanner.integer())
    raise scanner.error("expected an exponent")


