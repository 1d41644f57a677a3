from itertools import combinations
from typing import Sequence

import numpy as np
from cachetools import LRUCache

from ordwqo.qo.finite import FiniteQO
from ordwqo.tree.labelled import LabelledTree
from ordwqo.utils.error import NotFoundError


def _check_labels(t: LabelledTree, Q: FiniteQO):
    for label in t.labels():
        if label not in Q:
            raise NotFoundError("label", label)


class EmbeddingChecker:
    """Decides ``t ⪯ s`` for trees labelled in ``Q``.

    Either ``t`` embeds into a child of ``s``, or the root labels satisfy
    ``p ≤_Q q`` and the children of ``t`` embed into a subsequence of the
    children of ``s``, in order. The subsequence is matched greedily from the
    left, and every decided pair is remembered in an LRU cache.

    :param Q: the label order.
    :type Q: FiniteQO
    :param cache_size: the number of decided pairs kept.
    :type cache_size: int

    Example:
        .. code-block:: python

            from ordwqo.qo.finite import FiniteQO
            from ordwqo.tree.embedding import EmbeddingChecker
            from ordwqo.tree.text import parse_tree

            checker = EmbeddingChecker(FiniteQO.singleton("q"))
            checker.embeds(parse_tree("q[q[]]"), parse_tree("q[q[],q[]]"))  # True
    """

    def __init__(self, Q: FiniteQO, cache_size: int = 100000):
        self.Q = Q
        self._memo = LRUCache(maxsize=cache_size)

    def embeds(self, t: LabelledTree, s: LabelledTree) -> bool:
        _check_labels(t, self.Q)
        _check_labels(s, self.Q)
        return self._embeds(t, s)

    def _embeds(self, t: LabelledTree, s: LabelledTree) -> bool:
        if t.nodes > s.nodes:
            return False
        key = (t, s)
        res = self._memo.get(key)
        if res is None:
            res = any(self._embeds(t, child) for child in s.children) or (
                self.Q.leq(t.label, s.label) and self._match_children(t.children, s.children)
            )
            self._memo[key] = res
        return res

    def _match_children(self, ts: Sequence[LabelledTree], ss: Sequence[LabelledTree]) -> bool:
        j = 0
        for child in ts:
            while j < len(ss) and not self._embeds(child, ss[j]):
                j += 1
            if j == len(ss):
                return False
            j += 1
        return True


def embeds(t: LabelledTree, s: LabelledTree, Q: FiniteQO) -> bool:
    """Kruskal embeddability ``t ⪯ s`` over the label order ``Q``."""
    return EmbeddingChecker(Q).embeds(t, s)


def embeds_oracle(t: LabelledTree, s: LabelledTree, Q: FiniteQO) -> bool:
    """Brute-force ``t ⪯ s``: every strictly increasing index map is tried, nothing is cached."""
    _check_labels(t, Q)
    _check_labels(s, Q)
    return _oracle(t, s, Q)


def _oracle(t: LabelledTree, s: LabelledTree, Q: FiniteQO) -> bool:
    if any(_oracle(t, child, Q) for child in s.children):
        return True
    if not Q.leq(t.label, s.label):
        return False
    n = len(t.children)
    for indices in combinations(range(len(s.children)), n):
        if all(_oracle(t.children[k], s.children[i], Q) for k, i in enumerate(indices)):
            return True
    return False


def embedding_matrix(trees: Sequence[LabelledTree], checker: EmbeddingChecker) -> np.ndarray:
    """Boolean matrix ``M[i, j] = trees[i] ⪯ trees[j]``."""
    res = np.zeros((len(trees), len(trees)), dtype=bool)
    for i, t in enumerate(trees):
        for j, s in enumerate(trees):
            res[i, j] = checker.embeds(t, s)
    return res

