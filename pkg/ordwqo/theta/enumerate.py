from typing import Dict, List, Optional, Tuple

from ordwqo.theta.compare import g_key
from ordwqo.theta.term import ZERO_TERM, BaseOrder, Const, GTerm, Sum, Theta
from ordwqo.utils.budget import Budget
from ordwqo.utils.error import ParamError
from ordwqo.utils.log import ordwqo_log


class _Strata:
    """Terms of G_ω(X) grouped by exact size, built bottom-up."""

    def __init__(self, X: BaseOrder, max_degree: int, budget: Budget):
        self.X = X
        self.max_degree = max_degree
        self.budget = budget
        self.terms: Dict[int, List[GTerm]] = {}
        self.thetas: Dict[int, List[Theta]] = {}
        self._tails: Dict[Tuple[int, int], List[Tuple[Tuple[int, GTerm], ...]]] = {}
        self._key = g_key(X)

    def nonzero(self, size: int) -> List[GTerm]:
        return [t for t in self.terms.get(size, []) if t is not ZERO_TERM]

    def tails(self, cost: int, below: int) -> List[Tuple[Tuple[int, GTerm], ...]]:
        """Tails of total cost ``cost`` whose degrees are all below ``below``."""
        key = (cost, below)
        if key in self._tails:
            return self._tails[key]
        res: List[Tuple[Tuple[int, GTerm], ...]] = []
        if cost == 0:
            res.append(())
        else:
            for degree in range(below - 1, -1, -1):
                for coeff_size in range(1, cost):
                    for coeff in self.nonzero(coeff_size):
                        for rest in self.tails(cost - 1 - coeff_size, degree):
                            res.append(((degree, coeff),) + rest)
        self._tails[key] = res
        return res

    def sums(self, size: int) -> List[Sum]:
        ranked = sorted(
            (t for s in range(2, size - 1) for t in self.thetas.get(s, [])),
            key=self._key,
            reverse=True,
        )
        res: List[Sum] = []

        def extend(prefix: List[Theta], start: int, left: int):
            if left == 0:
                if len(prefix) >= 2:
                    res.append(Sum(tuple(prefix)))
                return
            for i in range(start, len(ranked)):
                t = ranked[i]
                if t.size <= left:
                    prefix.append(t)
                    extend(prefix, i, left - t.size)
                    prefix.pop()

        extend([], 0, size)
        return res

    def build(self, size: int):
        level: List[GTerm] = []
        if size == 1:
            level.append(ZERO_TERM)
            level.extend(Const(x) for x in self.X)
        thetas = [Theta(x, tail) for x in self.X for tail in self.tails(size - 2, self.max_degree + 1)] \
            if size >= 2 else []
        level.extend(thetas)
        if size >= 4:
            level.extend(self.sums(size))
        self.budget.spend(len(level))
        self.thetas[size] = thetas
        self.terms[size] = level


def enumerate_terms(
    X: BaseOrder,
    max_size: int,
    max_degree: int = 2,
    budget: Optional[Budget] = None,
) -> List[GTerm]:
    """All well-formed terms of G_ω(X) of size at most ``max_size`` whose tail
    degrees are at most ``max_degree``, sorted increasingly by ≤_G.

    Sizes count constructor nodes: 0 and constants have size 1, a ϑ-term has
    size 2 plus ``1 + size(coefficient)`` per tail entry, and a sum the total
    size of its summands.

    :param X: the base order.
    :param max_size: the largest size, at least 1.
    :param max_degree: the largest Ω-degree in a tail.
    :param budget: bound on the number of generated terms.
    :return: the sorted, duplicate-free list of terms.

    Example:
        .. code-block:: python

            from ordwqo.theta.enumerate import enumerate_terms
            from ordwqo.theta.term import BaseOrder

            len(enumerate_terms(BaseOrder.chain(2), 2))  # 5
    """
    if max_size < 1:
        raise ParamError(f"max_size must be at least 1, got {max_size}")
    if max_degree < 0:
        raise ParamError(f"max_degree must be non-negative, got {max_degree}")
    strata = _Strata(X, max_degree, budget or Budget(None, "enumerate_terms"))
    for size in range(1, max_size + 1):
        strata.build(size)
    res = [t for size in range(1, max_size + 1) for t in strata.terms[size]]
    ordwqo_log.debug("enumerated %d terms of size <= %d over %d elements", len(res), max_size, len(X))
    return sorted(res, key=g_key(X))
