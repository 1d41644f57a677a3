from dataclasses import dataclass
from functools import cmp_to_key
from typing import Dict, Iterable, List, Tuple

from ordwqo.ordering import Ordering
from ordwqo.utils.error import ParamError


@dataclass(frozen=True, eq=False, repr=False)
class OrdinalCNF:
    """Ordinal below ε₀ in Cantor normal form.

    ``terms`` lists ``(exponent, coefficient)`` pairs with strictly decreasing
    exponents and coefficients ≥ 1; the empty tuple is 0. Every instance is
    canonical, so ``==`` is ordinal equality.

    Hash and depth are computed once from the already built exponents, and
    equality, comparison and printing walk the exponents with an explicit stack,
    so the nesting depth is bounded by memory and not by the interpreter stack.

    :param terms: the CNF terms, highest exponent first.
    :type terms: Tuple[Tuple[OrdinalCNF, int], ...]

    Example:
        .. code-block:: python

            from ordwqo.ordinal.cnf import OrdinalCNF, ONE, ZERO

            omega_plus_one = OrdinalCNF(((ONE, 1), (ZERO, 1)))
    """

    terms: Tuple[Tuple["OrdinalCNF", int], ...] = ()

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        prev = None
        for term in terms:
            if not isinstance(term, tuple) or len(term) != 2:
                raise ParamError(f"CNF term must be an (exponent, coefficient) pair, got {term!r}")
            exponent, coeff = term
            if not isinstance(exponent, OrdinalCNF):
                raise ParamError(f"CNF exponent must be an OrdinalCNF, got {exponent!r}")
            if isinstance(coeff, bool) or not isinstance(coeff, int) or coeff < 1:
                raise ParamError(f"CNF coefficient must be a positive integer, got {coeff!r}")
            if prev is not None and compare_cnf(prev, exponent) != Ordering.GREATER:
                raise ParamError("CNF exponents must be strictly decreasing")
            prev = exponent
        object.__setattr__(self, "_hash", hash(tuple((e._hash, c) for e, c in terms)))
        object.__setattr__(self, "_depth", max(
            (e._depth + 1 for e, _ in terms if e.terms), default=0
        ))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(exponent.is_zero for exponent, _ in self.terms)

    @property
    def finite_value(self) -> int:
        if not self.is_finite:
            raise ParamError(f"{self!r} is not a natural number")
        return self.terms[0][1] if self.terms else 0

    @property
    def leading_exponent(self) -> "OrdinalCNF":
        if self.is_zero:
            raise ParamError("0 has no leading exponent")
        return self.terms[0][0]

    @property
    def depth(self) -> int:
        """Exponent nesting depth, 0 for natural numbers."""
        return self._depth

    def __eq__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        if self is other:
            return True
        return self._hash == other._hash and compare_cnf(self, other) == Ordering.EQUAL

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return compare_cnf(self, other) == Ordering.LESS

    def __le__(self, other):
        return compare_cnf(self, other) != Ordering.GREATER

    def __gt__(self, other):
        return compare_cnf(self, other) == Ordering.GREATER

    def __ge__(self, other):
        return compare_cnf(self, other) != Ordering.LESS

    def __str__(self):
        from ordwqo.ordinal.text import print_cnf  # pylint: disable=C0415

        return print_cnf(self)

    def __repr__(self):
        return f"OrdinalCNF({str(self)!r})"


ZERO = OrdinalCNF()
ONE = OrdinalCNF(((ZERO, 1),))
OMEGA = OrdinalCNF(((ONE, 1),))


def of_int(n: int) -> OrdinalCNF:
    """The natural number ``n`` as a CNF ordinal."""
    if n < 0:
        raise ParamError(f"ordinals are non-negative, got {n}")
    return OrdinalCNF(((ZERO, n),)) if n else ZERO


def compare_cnf(a: OrdinalCNF, b: OrdinalCNF) -> Ordering:
    """Compare two CNF ordinals lexicographically, term by term.

    The first difference at any exponent level decides, so the walk keeps one
    ``[a, b, index]`` frame per level instead of recursing.

    :param a: the left ordinal.
    :param b: the right ordinal.
    :return: ``Ordering.LESS``, ``Ordering.EQUAL`` or ``Ordering.GREATER``.
    """
    stack: List[list] = [[a, b, 0]]
    while stack:
        x, y, i = stack[-1]
        if x is not y and i < min(len(x.terms), len(y.terms)):
            stack.append([x.terms[i][0], y.terms[i][0], 0])
            continue
        if x is not y and len(x.terms) != len(y.terms):
            return Ordering.of(len(x.terms), len(y.terms))
        stack.pop()
        if stack:
            parent = stack[-1]
            px, py, pi = parent
            c1, c2 = px.terms[pi][1], py.terms[pi][1]
            if c1 != c2:
                return Ordering.of(c1, c2)
            parent[2] = pi + 1
    return Ordering.EQUAL


cnf_key = cmp_to_key(compare_cnf)


def _from_monomials(monomials: Iterable[Tuple[OrdinalCNF, int]]) -> OrdinalCNF:
    """Natural sum of the monomials ω^e·c, i.e. merge coefficients of equal exponents."""
    merged: Dict[OrdinalCNF, int] = {}
    for exponent, coeff in monomials:
        if coeff:
            merged[exponent] = merged.get(exponent, 0) + coeff
    exponents = sorted(merged, key=cnf_key, reverse=True)
    return OrdinalCNF(tuple((e, merged[e]) for e in exponents))


def add(a: OrdinalCNF, b: OrdinalCNF) -> OrdinalCNF:
    """Ordinal sum a + b; the terms of ``a`` below the leading term of ``b`` are absorbed."""
    if b.is_zero:
        return a
    lead, lead_coeff = b.terms[0]
    head = []
    for exponent, coeff in a.terms:
        res = compare_cnf(exponent, lead)
        if res == Ordering.GREATER:
            head.append((exponent, coeff))
        elif res == Ordering.EQUAL:
            head.append((exponent, coeff + lead_coeff))
            return OrdinalCNF(tuple(head) + b.terms[1:])
        else:
            break
    return OrdinalCNF(tuple(head) + b.terms)


def mul(a: OrdinalCNF, b: OrdinalCNF) -> OrdinalCNF:
    """Ordinal product a · b.

    With a = ω^e·c + r, every limit term ω^f·k of ``b`` contributes ω^(e+f)·k and
    a final finite term k contributes ω^e·(c·k) + r.
    """
    if a.is_zero or b.is_zero:
        return ZERO
    lead, lead_coeff = a.terms[0]
    res = []
    for exponent, coeff in b.terms:
        if exponent.is_zero:
            res.append((lead, lead_coeff * coeff))
            res.extend(a.terms[1:])
        else:
            res.append((add(lead, exponent), coeff))
    return OrdinalCNF(tuple(res))


def nat_sum(a: OrdinalCNF, b: OrdinalCNF) -> OrdinalCNF:
    """Hessenberg natural sum a ⊕ b."""
    return _from_monomials(a.terms + b.terms)


def nat_prod(a: OrdinalCNF, b: OrdinalCNF) -> OrdinalCNF:
    """Hessenberg natural product a ⊗ b: ω^e·m ⊗ ω^f·k = ω^(e⊕f)·(m·k), combined with ⊕."""
    return _from_monomials(
        (nat_sum(e, f), m * k) for e, m in a.terms for f, k in b.terms
    )


def omega_power(a: OrdinalCNF) -> OrdinalCNF:
    """ω^a."""
    return OrdinalCNF(((a, 1),))


def omega_tower(n: int) -> OrdinalCNF:
    """ω_1 = ω and ω_(n+1) = ω^(ω_n).

    :param n: the height of the tower, starting from 1.
    """
    if n < 1:
        raise ParamError(f"omega_tower is indexed from 1, got {n}")
    res = OMEGA
    for _ in range(n - 1):
        res = omega_power(res)
    return res
