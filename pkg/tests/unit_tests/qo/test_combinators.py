import numpy as np
import pytest

from ordwqo.qo.combinators import NFoldMode, disjoint_union, n_fold, ordered_sum, product
from ordwqo.qo.finite import FiniteQO
from ordwqo.utils.error import ParamError

CHAIN = FiniteQO.chain(2)
PAIR = FiniteQO.antichain(2, ["a", "b"])


def test_product():
    Q = product(CHAIN, CHAIN)
    assert Q.carrier == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
    assert not Q.leq("(1,0)", "(0,1)")
    assert Q.leq("(0,1)", "(1,1)")


def test_sum():
    Q = ordered_sum(PAIR, CHAIN)
    assert Q.carrier == ("(0,a)", "(0,b)", "(1,0)", "(1,1)")
    for p in ("(0,a)", "(0,b)"):
        for q in ("(1,0)", "(1,1)"):
            assert Q.leq(p, q) and not Q.leq(q, p)
    assert not Q.leq("(0,a)", "(0,b)")


def test_disjoint_union():
    Q = disjoint_union(PAIR, CHAIN)
    for p in ("(0,a)", "(0,b)"):
        for q in ("(1,0)", "(1,1)"):
            assert not Q.leq(p, q) and not Q.leq(q, p)
    assert Q.leq("(1,0)", "(1,1)")


def test_n_fold():
    plus = n_fold(PAIR, 2, NFoldMode.PLUS)
    assert plus.leq("(0,b)", "(1,a)")
    assert not plus.leq("(1,a)", "(0,a)")
    times = n_fold(PAIR, 2, "times")
    assert times.leq("(0,a)", "(1,a)")
    assert not times.leq("(0,a)", "(1,b)")
    dunion = n_fold(PAIR, 2, "dunion")
    assert not dunion.leq("(0,a)", "(1,a)")
    assert not dunion.leq("(1,a)", "(0,a)")
    assert n_fold(PAIR, 1, "plus") == n_fold(PAIR, 1, "dunion")
    with pytest.raises(ParamError):
        n_fold(PAIR, 0, "plus")
    with pytest.raises(ParamError):
        n_fold(PAIR, 2, "lex")


def test_extension_chain():
    Q = FiniteQO.from_pairs(["a", "b", "c"], [("a", "b")], closure=True)
    for n in range(1, 4):
        dunion, times, plus = (n_fold(Q, n, mode).le for mode in ("dunion", "times", "plus"))
        assert not np.any(dunion & ~times)
        assert not np.any(times & ~plus)
    total = n_fold(FiniteQO.chain(3), 3, "plus")
    assert total.is_total()
