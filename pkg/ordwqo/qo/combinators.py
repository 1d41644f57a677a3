"""Combinators on finite quasi-orders.

Product elements are named ``(p,q)``; tagged elements of sums, disjoint unions
and n-fold orders are named ``(m,q)`` where ``m`` is the copy index, 0 for the
left operand and 1 for the right one.
"""
from enum import Enum

import numpy as np

from ordwqo.qo.finite import FiniteQO
from ordwqo.utils.error import ParamError


class NFoldMode(str, Enum):
    """Relations on ``n × Q``.

    ``plus``: m1 < m2 or (m1 = m2 and q1 ≤ q2); ``times``: m1 ≤ m2 and q1 ≤ q2;
    ``dunion``: m1 = m2 and q1 ≤ q2.
    """

    PLUS = "plus"
    TIMES = "times"
    DUNION = "dunion"


def _tagged(copies, names):
    return [f"({m},{q})" for m, qs in zip(copies, names) for q in qs]


def product(P: FiniteQO, Q: FiniteQO) -> FiniteQO:
    """``P × Q`` ordered componentwise."""
    carrier = [f"({p},{q})" for p in P.carrier for q in Q.carrier]
    return FiniteQO(carrier, np.kron(P.le, Q.le))


def ordered_sum(P: FiniteQO, Q: FiniteQO) -> FiniteQO:
    """``P + Q``: every element of ``P`` lies below every element of ``Q``."""
    le = np.block([
        [P.le, np.ones((P.size, Q.size), dtype=bool)],
        [np.zeros((Q.size, P.size), dtype=bool), Q.le],
    ])
    return FiniteQO(_tagged((0, 1), (P.carrier, Q.carrier)), le)


def disjoint_union(P: FiniteQO, Q: FiniteQO) -> FiniteQO:
    """``P ⊔ Q``: the two parts are incomparable."""
    le = np.block([
        [P.le, np.zeros((P.size, Q.size), dtype=bool)],
        [np.zeros((Q.size, P.size), dtype=bool), Q.le],
    ])
    return FiniteQO(_tagged((0, 1), (P.carrier, Q.carrier)), le)


def n_fold(Q: FiniteQO, n: int, mode) -> FiniteQO:
    """``n × Q`` under the relation named by ``mode``.

    :param Q: the quasi-order to copy.
    :param n: the number of copies, at least 1.
    :param mode: one of :class:`NFoldMode` or its value.

    Example:
        .. code-block:: python

            from ordwqo.qo.combinators import n_fold
            from ordwqo.qo.finite import FiniteQO

            Q = n_fold(FiniteQO.antichain(2), 2, "plus")
            Q.leq("(0,1)", "(1,0)")  # True
    """
    if n < 1:
        raise ParamError(f"n_fold needs at least one copy, got {n}")
    try:
        mode = NFoldMode(mode)
    except ValueError:
        raise ParamError(f"unknown n_fold mode {mode!r}, expected one of plus, times, dunion") from None
    ones = np.ones((n, n), dtype=bool)
    if mode == NFoldMode.PLUS:
        le = np.kron(np.triu(ones, 1), np.ones_like(Q.le)) | np.kron(np.eye(n, dtype=bool), Q.le)
    elif mode == NFoldMode.TIMES:
        le = np.kron(np.triu(ones), Q.le)
    else:
        le = np.kron(np.eye(n, dtype=bool), Q.le)
    return FiniteQO(_tagged(range(n), [Q.carrier] * n), le)
