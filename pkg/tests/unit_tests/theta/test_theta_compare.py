import pytest

from ordwqo.ordering import Ordering
from ordwqo.theta.compare import compare_g, g_key
from ordwqo.theta.term import ZERO_TERM, BaseOrder, Const, Sum, Theta
from ordwqo.utils.error import IllFormedTermError

X = BaseOrder.chain(2)
TH0, TH1 = Theta("0"), Theta("1")


def test_basic_rules():
    assert compare_g(ZERO_TERM, Const("0"), X) == Ordering.LESS
    assert compare_g(Const("0"), Const("1"), X) == Ordering.LESS
    assert compare_g(TH0, TH1, X) == Ordering.LESS
    assert compare_g(Sum((TH0, TH0)), TH1, X) == Ordering.LESS
    assert compare_g(Const("1"), TH0, X) == Ordering.LESS
    assert compare_g(Const("1"), Sum((TH0, TH0)), X) == Ordering.LESS
    assert compare_g(ZERO_TERM, ZERO_TERM, X) == Ordering.EQUAL


def test_theta_and_sum():
    assert compare_g(TH0, Sum((TH0, TH0)), X) == Ordering.LESS
    assert compare_g(TH1, Sum((TH0, TH0)), X) == Ordering.GREATER
    assert compare_g(Sum((TH1, TH0)), Sum((TH1, TH0, TH0)), X) == Ordering.LESS
    assert compare_g(Sum((TH1, TH0)), Sum((TH0, TH0, TH0)), X) == Ordering.GREATER


def test_coefficients():
    a = Theta("0", ((0, TH1),))
    assert compare_g(a, TH1, X) == Ordering.GREATER
    assert compare_g(TH1, a, X) == Ordering.LESS
    b = Theta("0", ((0, Sum((TH1, TH1))),))
    assert compare_g(a, b, X) == Ordering.LESS
    assert compare_g(Sum((TH1, TH1)), b, X) == Ordering.LESS


def test_arguments():
    assert compare_g(Theta("0", ((1, Const("0")),)), Theta("0", ((0, Const("1")),)), X) == Ordering.GREATER
    assert compare_g(Theta("0", ((0, Const("0")),)), TH0, X) == Ordering.GREATER
    assert compare_g(Theta("0", ((2, Const("0")),)), TH1, X) == Ordering.LESS
    assert compare_g(Theta("0", ((0, Const("0")),)), Theta("0", ((0, Const("1")),)), X) == Ordering.LESS


def test_equal():
    a = Theta("1", ((2, Theta("0")), (0, Const("1"))))
    b = Theta("1", ((2, Theta("0")), (0, Const("1"))))
    assert compare_g(a, b, X) == Ordering.EQUAL


def test_check():
    with pytest.raises(IllFormedTermError) as info:
        compare_g(TH0, Theta("0", ((0, ZERO_TERM),)), X, check=True)
    assert info.value.path == "right.tail[0].coeff"


def test_key():
    terms = [TH1, ZERO_TERM, Sum((TH0, TH0)), Const("1"), TH0, Const("0")]
    assert sorted(terms, key=g_key(X)) == [ZERO_TERM, Const("0"), Const("1"), TH0, Sum((TH0, TH0)), TH1]


def test_arguments_scan_from_highest_degree():
    # a wins at Ω^1 while b wins at Ω^0; the tail is read like a polynomial in Ω,
    # so the Ω^1 coefficients decide and a scan starting at Ω^0 would answer the opposite
    a = Theta("0", ((1, Const("1")), (0, Const("0"))))
    b = Theta("0", ((1, Const("0")), (0, Const("1"))))
    assert compare_g(Const("1"), Const("0"), X) == Ordering.GREATER
    assert compare_g(Const("0"), Const("1"), X) == Ordering.LESS
    assert compare_g(a, b, X) == Ordering.GREATER
    assert compare_g(b, a, X) == Ordering.LESS
