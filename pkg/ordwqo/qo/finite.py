from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from ordwqo.utils.error import NotFoundError, ParamError


class FiniteQO:
    """An explicit finite quasi-order, stored as a dense boolean matrix.

    ``le[i, j]`` holds iff ``carrier[i] ≤ carrier[j]``. The relation must be
    reflexive and transitive. :meth:`from_pairs` always adds the diagonal, and with
    ``closure=True`` also takes the transitive closure of arbitrary pairs.

    :param carrier: distinct element names, their order is the carrier enumeration.
    :type carrier: Sequence[str]
    :param le: the relation as an ``n × n`` boolean matrix.
    :type le: numpy.ndarray

    Example:
        .. code-block:: python

            from ordwqo.qo.finite import FiniteQO

            Q = FiniteQO.from_pairs(["a", "b"], [("a", "b")], closure=True)
            Q.leq("a", "b"), Q.leq("b", "a")  # (True, False)
    """

    def __init__(self, carrier: Sequence[str], le):
        self.carrier: Tuple[str, ...] = tuple(str(x) for x in carrier)
        self._index: Dict[str, int] = {x: i for i, x in enumerate(self.carrier)}
        if len(self._index) != len(self.carrier):
            raise ParamError(f"carrier elements must be distinct, got {list(self.carrier)}")
        n = len(self.carrier)
        self.le = np.array(le, dtype=bool).reshape(n, n)
        self.le.setflags(write=False)
        if not np.all(np.diagonal(self.le)):
            i = int(np.argmin(np.diagonal(self.le)))
            raise ParamError(f"relation is not reflexive at {self.carrier[i]}")
        broken = np.argwhere(_compose(self.le) & ~self.le)
        if len(broken):
            i, k = broken[0]
            raise ParamError(
                f"relation is not transitive: {self.carrier[i]} <= ... <= {self.carrier[k]} is missing"
            )

    @classmethod
    def from_pairs(cls, carrier: Sequence[str], pairs: Iterable[Tuple[str, str]], closure: bool = False):
        """Build from ``(p, q)`` pairs meaning ``p ≤ q``.

        Reflexive pairs may be left out, the diagonal is always added.

        :param closure: take the transitive closure, otherwise the pairs must already be transitive.
        """
        carrier = [str(x) for x in carrier]
        index = {x: i for i, x in enumerate(carrier)}
        le = np.eye(len(carrier), dtype=bool)
        for p, q in pairs:
            for x in (p, q):
                if x not in index:
                    raise NotFoundError("element", x)
            le[index[p], index[q]] = True
        if closure:
            le = reflexive_transitive_closure(le)
        return cls(carrier, le)

    @classmethod
    def chain(cls, n: int, names: Optional[Sequence[str]] = None) -> "FiniteQO":
        """``names[0] < names[1] < …``, named ``"0"``, ``"1"``, … by default."""
        names = _names(n, names)
        return cls(names, np.triu(np.ones((n, n), dtype=bool)))

    @classmethod
    def antichain(cls, n: int, names: Optional[Sequence[str]] = None) -> "FiniteQO":
        """The discrete order on ``n`` elements."""
        names = _names(n, names)
        return cls(names, np.eye(n, dtype=bool))

    @classmethod
    def discrete(cls, names: Sequence[str]) -> "FiniteQO":
        return cls.antichain(len(names), names)

    @classmethod
    def singleton(cls, name: str = "q") -> "FiniteQO":
        return cls.antichain(1, [name])

    @property
    def size(self) -> int:
        return len(self.carrier)

    def __len__(self) -> int:
        return len(self.carrier)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __eq__(self, other):
        return (
            isinstance(other, FiniteQO)
            and self.carrier == other.carrier
            and np.array_equal(self.le, other.le)
        )

    def __hash__(self):
        return hash((self.carrier, self.le.tobytes()))

    def __repr__(self):
        return f"FiniteQO({list(self.carrier)!r}, {sorted(self.pairs())!r})"

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise NotFoundError("element", x) from None

    def leq(self, x: str, y: str) -> bool:
        return bool(self.le[self.index(x), self.index(y)])

    def pairs(self) -> Set[Tuple[str, str]]:
        """The relation as a set of ``(p, q)`` name pairs."""
        return {(self.carrier[i], self.carrier[j]) for i, j in np.argwhere(self.le)}

    def is_total(self) -> bool:
        return bool(np.all(self.le | self.le.T))

    def classes(self) -> List[List[str]]:
        """Equivalence classes of mutually related elements, in carrier order."""
        equiv = self.le & self.le.T
        seen: Set[int] = set()
        res = []
        for i in range(self.size):
            if i not in seen:
                members = [int(j) for j in np.flatnonzero(equiv[i])]
                seen.update(members)
                res.append([self.carrier[j] for j in members])
        return res


def _names(n: int, names: Optional[Sequence[str]]) -> List[str]:
    if n < 0:
        raise ParamError(f"the number of elements must be non-negative, got {n}")
    if names is None:
        return [str(i) for i in range(n)]
    if len(names) != n:
        raise ParamError(f"expected {n} names, got {len(names)}")
    return list(names)


def _compose(rel: np.ndarray) -> np.ndarray:
    return (rel.astype(np.int64) @ rel.astype(np.int64)) > 0


def is_transitive(rel) -> bool:
    """Whether a boolean relation matrix is transitive, i.e. ``rel ∘ rel ⊆ rel``."""
    rel = np.asarray(rel, dtype=bool)
    return not np.any(_compose(rel) & ~rel)


def reflexive_transitive_closure(rel) -> np.ndarray:
    """Warshall's algorithm on a boolean matrix, with the diagonal added."""
    res = np.array(rel, dtype=bool) | np.eye(len(rel), dtype=bool)
    for k in range(len(res)):
        res |= np.outer(res[:, k], res[k, :])
    return res
