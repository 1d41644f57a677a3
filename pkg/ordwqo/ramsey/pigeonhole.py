from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ordwqo.utils.error import OrdWqoError, ParamError


def _check_bound(seq: Sequence[int], bound: int, name: str):
    if bound < 1:
        raise ParamError(f"{name} must be at least 1, got {bound}")
    for i, x in enumerate(seq):
        if not 0 <= x < bound:
            raise ParamError(f"entry {x} at index {i} is outside 0..{bound - 1}")


def pigeonhole_extract(seq: Sequence[int], k: int) -> Tuple[int, List[int]]:
    """A most frequent colour of ``seq`` with all its occurrence indices.

    Ties go to the smallest colour; the empty sequence gives ``(0, [])``.

    :param seq: colours in ``0..k-1``.
    :param k: the number of colours.
    """
    _check_bound(seq, k, "k")
    counts = [0] * k
    for x in seq:
        counts[x] += 1
    colour = max(range(k), key=lambda c: (counts[c], -c))
    return colour, [i for i, x in enumerate(seq) if x == colour]


@dataclass(frozen=True)
class PigeonholeOrder:
    """The order α on the indices of a bounded prefix, with its bad sequence in ``m × α``.

    ``i <_α j`` iff ``n_i < n_j``, or ``n_i = n_j`` and ``i > j``; the sequence
    has entry ``(m - 1 - n_i, i)`` at index ``i``.
    """

    prefix: Tuple[int, ...]
    m: int

    def less(self, i: int, j: int) -> bool:
        ni, nj = self.prefix[i], self.prefix[j]
        return ni < nj or (ni == nj and i > j)

    @property
    def ranking(self) -> List[int]:
        """The indices listed increasingly in α."""
        return sorted(range(len(self.prefix)), key=lambda i: (self.prefix[i], -i))

    @property
    def sequence(self) -> List[Tuple[int, int]]:
        return [(self.m - 1 - n, i) for i, n in enumerate(self.prefix)]

    def leq_times(self, p: Tuple[int, int], q: Tuple[int, int]) -> bool:
        """``(a, i) ≤_× (b, j)`` in ``m × α``."""
        return p[0] <= q[0] and (p[1] == q[1] or self.less(p[1], q[1]))

    def violations(self) -> List[str]:
        """Failures of strictness, transitivity, totality or badness, empty when the construction is sound."""
        res = []
        idx = range(len(self.prefix))
        for i in idx:
            if self.less(i, i):
                res.append(f"alpha is reflexive at {i}")
            for j in idx:
                if i != j and self.less(i, j) == self.less(j, i):
                    res.append(f"alpha is not total and antisymmetric on {i}, {j}")
                if not self.less(i, j):
                    continue
                for k in idx:
                    if self.less(j, k) and not self.less(i, k):
                        res.append(f"alpha is not transitive on {i}, {j}, {k}")
        seq = self.sequence
        for i in idx:
            for j in range(i + 1, len(seq)):
                if self.leq_times(seq[i], seq[j]):
                    res.append(f"sequence is good at ({i},{j})")
        return res


def pigeonhole_order(prefix: Sequence[int], m: int) -> PigeonholeOrder:
    """Build the order α and the sequence ``((m - 1 - n_i, i))`` for a prefix bounded by ``m``.

    The result is checked: α must be a strict total order on the indices and the
    sequence must be bad for ``≤_×`` on ``m × α``.

    Example:
        .. code-block:: python

            from ordwqo.ramsey.pigeonhole import pigeonhole_order

            res = pigeonhole_order([1, 0], 2)
            res.less(1, 0), res.sequence  # (True, [(0, 0), (1, 1)])
    """
    _check_bound(prefix, m, "m")
    res = PigeonholeOrder(tuple(prefix), m)
    problems = res.violations()
    if problems:
        raise OrdWqoError(f"pigeonhole order postcondition failed: {problems[0]}")
    return res
