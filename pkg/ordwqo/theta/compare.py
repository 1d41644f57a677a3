"""The term order ≤_G on G_ω(X).

Summary of the decision procedure, all comparisons are three-way:

* 0 is below every other term, constants sit above 0 and below every ϑ-term
  and sum, and are ordered among themselves like their elements in X.
* Sums compare lexicographically summand by summand, a proper prefix being smaller.
* A ϑ-term θ and a sum s: θ < s iff θ ≤ the first summand of s.
* Two ϑ-terms α, β: α < β iff α ≤ some coefficient of β, or the argument of α
  is below the argument of β and every coefficient of α is below β. Arguments
  compare head constant first, then tail entries from the highest degree down.
"""
from functools import cmp_to_key

from ordwqo.ordering import Ordering
from ordwqo.theta.term import BaseOrder, Const, GTerm, Sum, Theta, Zero, well_formed
from ordwqo.utils.error import IllFormedTermError, TerminationError

_RANK = {Zero: 0, Const: 1}


def _kind(t: GTerm) -> int:
    return _RANK.get(type(t), 2)


def compare_g(a: GTerm, b: GTerm, X: BaseOrder, check: bool = False) -> Ordering:
    """Three-way comparison under ≤_G.

    :param a: the left term.
    :param b: the right term.
    :param X: the base order both terms are built over.
    :param check: validate both inputs with :func:`well_formed` first.
    :return: the :class:`Ordering` of ``a`` relative to ``b``.

    :raises IllFormedTermError: when ``check`` is set and an input is rejected.
    :raises TerminationError: when the recursion outgrows ``size(a) + size(b)``.

    Example:
        .. code-block:: python

            from ordwqo.theta.compare import compare_g
            from ordwqo.theta.term import BaseOrder, Sum, Theta

            X = BaseOrder.chain(2)
            small = Theta("0")
            compare_g(Sum((small, small)), Theta("1"), X)  # Ordering.LESS
    """
    if check:
        for name, t in (("left", a), ("right", b)):
            res = well_formed(t, X, name)
            if not res:
                raise IllFormedTermError(res.path, res.reason)
    return _compare(a, b, X, a.size + b.size)


def _compare(a: GTerm, b: GTerm, X: BaseOrder, bound: int) -> Ordering:
    if bound < 0:
        raise TerminationError(f"comparison of {a!r} and {b!r} exceeded its depth bound")
    if a is b:
        return Ordering.EQUAL
    ka, kb = _kind(a), _kind(b)
    if ka != kb or ka == 0:
        return Ordering.of(ka, kb)
    if ka == 1:
        return X.compare(a.x, b.x)
    if isinstance(a, Sum):
        if isinstance(b, Sum):
            return _compare_sums(a, b, X, bound)
        return _compare_theta_sum(b, a, X, bound).reverse()
    if isinstance(b, Sum):
        return _compare_theta_sum(a, b, X, bound)
    return _compare_thetas(a, b, X, bound)


def _compare_sums(a: Sum, b: Sum, X: BaseOrder, bound: int) -> Ordering:
    for s, t in zip(a.summands, b.summands):
        res = _compare(s, t, X, bound - 1)
        if res != Ordering.EQUAL:
            return res
    return Ordering.of(len(a.summands), len(b.summands))


def _compare_theta_sum(theta: Theta, s: Sum, X: BaseOrder, bound: int) -> Ordering:
    if _compare(theta, s.summands[0], X, bound - 1) == Ordering.GREATER:
        return Ordering.GREATER
    return Ordering.LESS


def _below_some(a: GTerm, coeffs, X: BaseOrder, bound: int) -> bool:
    return any(_compare(a, c, X, bound - 1) != Ordering.GREATER for c in coeffs)


def _compare_thetas(a: Theta, b: Theta, X: BaseOrder, bound: int) -> Ordering:
    if a == b:
        return Ordering.EQUAL
    if _below_some(a, b.coefficients, X, bound):
        return Ordering.LESS
    if _below_some(b, a.coefficients, X, bound):
        return Ordering.GREATER
    # every coefficient of each side is below the other term
    return _compare_arguments(a, b, X, bound)


def _compare_arguments(a: Theta, b: Theta, X: BaseOrder, bound: int) -> Ordering:
    res = X.compare(a.head, b.head)
    if res != Ordering.EQUAL:
        return res
    for (da, ca), (db, cb) in zip(a.tail, b.tail):
        if da != db:
            return Ordering.of(da, db)
        res = _compare(ca, cb, X, bound - 1)
        if res != Ordering.EQUAL:
            return res
    return Ordering.of(len(a.tail), len(b.tail))


def g_key(X: BaseOrder):
    """Sort key for ≤_G over ``X``."""
    return cmp_to_key(lambda a, b: compare_g(a, b, X))
