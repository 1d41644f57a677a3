import pytest

from ordwqo.theta.enumerate import enumerate_terms
from ordwqo.theta.term import ZERO_TERM, BaseOrder, Const, Sum, Theta
from ordwqo.theta.text import parse_g, print_g
from ordwqo.utils.error import ParseError

NESTED = Theta("0", ((2, Const("1")), (0, Sum((Theta("1"), Theta("0"))))))
NESTED_TEXT = "th(W^w*c(0) + W^2*c(1) + W^0*th(W^w*c(1)) + th(W^w*c(0)))"


def test_print():
    assert print_g(ZERO_TERM) == "0"
    assert print_g(Const("x")) == "c(x)"
    assert print_g(Theta("x")) == "th(W^w*c(x))"
    assert print_g(NESTED) == NESTED_TEXT
    assert print_g(Sum((Theta("1"), Theta("0")))) == "th(W^w*c(1)) + th(W^w*c(0))"


def test_parse():
    assert parse_g(NESTED_TEXT) == NESTED
    assert parse_g(" th( W^w * c(x) ) ") == Theta("x")
    assert parse_g("th(W^w*c(1)) + th(W^w*c(0))") == Sum((Theta("1"), Theta("0")))
    # parsing is structural, ill-formed terms are left to well_formed
    assert parse_g("th(W^w*c(0) + W^0*0)") == Theta("0", ((0, ZERO_TERM),))


@pytest.mark.parametrize("text", [
    "",
    "c(0) + c(1)",
    "th(W^w*c(0)) + c(1)",
    "0 + th(W^w*c(0))",
    "th(W^w*c(0)",
    "th(W^2*c(0))",
    "th(W^w*c(0) + W^x*c(1))",
    "c()",
])
def test_parse_error(text):
    with pytest.raises(ParseError):
        parse_g(text)


def test_round_trip():
    for t in enumerate_terms(BaseOrder.chain(3), 6):
        text = print_g(t)
        assert parse_g(text) == t
        assert print_g(parse_g(text)) == text
