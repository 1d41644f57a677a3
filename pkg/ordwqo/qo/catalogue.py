from functools import lru_cache
from itertools import product as cartesian
from typing import List, Tuple

import numpy as np

from ordwqo.qo.finite import FiniteQO
from ordwqo.utils.error import ParamError


@lru_cache(maxsize=None)
def quasi_orders(n: int) -> Tuple[FiniteQO, ...]:
    """Every quasi-order on the labelled points ``"0"``, …, ``"n-1"``.

    Reflexive relations are enumerated through their off-diagonal bits and the
    transitive ones kept; there are 1, 1, 4, 29 and 355 of them for n = 0, …, 4.
    """
    if not 0 <= n <= 4:
        raise ParamError(f"the catalogue covers 0 to 4 points, got {n}")
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    names = [str(i) for i in range(n)]
    res = []
    for bits in cartesian((False, True), repeat=len(off)):
        le = np.eye(n, dtype=bool)
        for (i, j), bit in zip(off, bits):
            le[i, j] = bit
        closed = (le.astype(np.int64) @ le.astype(np.int64)) > 0
        if not np.any(closed & ~le):
            res.append(FiniteQO(names, le))
    return tuple(res)


def catalogue(max_points: int = 4, min_points: int = 1) -> List[FiniteQO]:
    """All quasi-orders with ``min_points`` to ``max_points`` elements, smallest first."""
    return [Q for n in range(min_points, max_points + 1) for Q in quasi_orders(n)]
