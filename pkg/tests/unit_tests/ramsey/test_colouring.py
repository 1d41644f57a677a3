import pytest

from ordwqo.qo.finite import FiniteQO
from ordwqo.ramsey.colouring import (
    Colouring,
    colour_bad_product_seq,
    homogeneous_subset,
    homogeneous_subsets,
    parse_colouring,
    parse_tuples,
    print_colouring,
)
from ordwqo.utils.error import ParamError, ParseError, PreconditionError


def test_colour_bad_product_seq():
    pair = FiniteQO.antichain(2, ["a", "b"])
    assert colour_bad_product_seq([("a", "b"), ("b", "a")], pair, 2)(0, 1) == 0
    chain = FiniteQO.chain(2, ["a", "b"])
    assert colour_bad_product_seq([("b", "a"), ("a", "b")], chain, 2)(0, 1) == 0
    c = colour_bad_product_seq([("b", "b"), ("b", "a"), ("a", "b")], chain, 2)
    assert c.colours == {(0, 1): 1, (0, 2): 0, (1, 2): 0}
    with pytest.raises(PreconditionError) as info:
        colour_bad_product_seq([("a", "b"), ("b", "b")], chain, 2)
    assert info.value.witness == (0, 1)
    with pytest.raises(ParamError):
        colour_bad_product_seq([("a",)], chain, 2)


def test_colouring_is_total():
    with pytest.raises(ParamError):
        Colouring(3, {(0, 1): 0, (0, 2): 0})
    with pytest.raises(ParamError):
        Colouring(2, {(0, 1): 0, (1, 2): 0})


def test_homogeneous_subset():
    constant = Colouring(4, {(i, j): 0 for i in range(4) for j in range(i + 1, 4)})
    assert homogeneous_subset(constant, 4) == (0, 1, 2, 3)
    parity = Colouring(4, {(i, j): (j - i) % 2 for i in range(4) for j in range(i + 1, 4)})
    assert homogeneous_subset(parity, 2) == (0, 1)
    assert homogeneous_subset(parity, 3) is None
    with pytest.raises(ParamError):
        homogeneous_subset(parity, 1)


def test_homogeneous_subsets():
    c = Colouring(3, {(0, 1): 0, (0, 2): 0, (1, 2): 1})
    assert sorted(homogeneous_subsets(c, 0)) == [(0, 1), (0, 2)]
    assert list(homogeneous_subsets(c, 1)) == [(1, 2)]


def test_text():
    c = Colouring(3, {(0, 1): 1, (0, 2): 0, (1, 2): 0})
    assert print_colouring(c) == "(0,1):1 (0,2):0 (1,2):0"
    assert parse_colouring("(0,1):1 (0,2):0, (1,2):0") == c
    assert parse_tuples("(a,b),(b,a)") == [("a", "b"), ("b", "a")]
    assert parse_tuples("(0, 1) (1, 0)") == [("0", "1"), ("1", "0")]
    with pytest.raises(ParseError):
        parse_colouring("(1,0):0")
    with pytest.raises(ParseError):
        parse_tuples("(a,b")
