import random
from functools import lru_cache
from typing import List, Tuple

from ordwqo.ordinal.cnf import ZERO, OrdinalCNF, cnf_key
from ordwqo.utils.error import ParamError


def monomials(a: OrdinalCNF) -> int:
    """Total number of ``(exponent, coefficient)`` pairs, nested exponents included."""
    return sum(1 + monomials(e) for e, _ in a.terms)


@lru_cache(maxsize=None)
def _exact(depth: int, max_coeff: int, count: int) -> Tuple[OrdinalCNF, ...]:
    """Ordinals of depth at most ``depth`` with exactly ``count`` monomials."""
    if count == 0:
        return (ZERO,)
    if depth == 0:
        exps = [ZERO]
    else:
        exps = [e for k in range(count) for e in _exact(depth - 1, max_coeff, k)]
        exps.sort(key=cnf_key, reverse=True)
    costs = [1 + monomials(e) for e in exps]
    res: List[OrdinalCNF] = []

    def build(start: int, left: int, terms):
        if left == 0:
            res.append(OrdinalCNF(tuple(terms)))
            return
        for j in range(start, len(exps)):
            if costs[j] <= left:
                for c in range(1, max_coeff + 1):
                    build(j + 1, left - costs[j], terms + [(exps[j], c)])

    build(0, count, [])
    return tuple(res)


def enumerate_cnf(max_depth: int, max_coeff: int, max_monomials: int) -> List[OrdinalCNF]:
    """Every CNF ordinal with exponent depth ≤ ``max_depth``, coefficients ≤ ``max_coeff``
    and at most ``max_monomials`` monomials in total, sorted increasingly.

    Example:
        .. code-block:: python

            from ordwqo.ordinal.generate import enumerate_cnf

            [str(a) for a in enumerate_cnf(1, 1, 3)]  # ['0', '1', 'w', 'w + 1']
    """
    if max_depth < 0 or max_coeff < 1 or max_monomials < 0:
        raise ParamError("enumerate_cnf needs max_depth >= 0, max_coeff >= 1 and max_monomials >= 0")
    res = [a for n in range(max_monomials + 1) for a in _exact(max_depth, max_coeff, n)]
    return sorted(res, key=cnf_key)


def random_cnf(rng: random.Random, max_depth: int = 3, max_coeff: int = 5, max_terms: int = 3) -> OrdinalCNF:
    """A random canonical ordinal with at most ``max_terms`` terms on every level."""
    if max_depth == 0:
        return OrdinalCNF(((ZERO, rng.randint(1, max_coeff)),)) if rng.random() < 0.8 else ZERO
    exponents = {random_cnf(rng, max_depth - 1, max_coeff, max_terms) for _ in range(rng.randint(0, max_terms))}
    ordered = sorted(exponents, key=cnf_key, reverse=True)
    return OrdinalCNF(tuple((e, rng.randint(1, max_coeff)) for e in ordered))
