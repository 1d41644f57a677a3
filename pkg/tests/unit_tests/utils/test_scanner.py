import pytest

from ordwqo.utils.error import ParseError
from ordwqo.utils.scanner import Scanner


def test_tokens():
    scanner = Scanner(" w^(w + 12)*3 ")
    assert [t[1] for t in scanner.tokens] == ["w", "^", "(", "w", "+", "12", ")", "*", "3"]
    assert scanner.tokens[5][0] == "int"
    assert scanner.accept("w")
    assert not scanner.accept("+")
    scanner.expect("^")
    assert scanner.at("w", 1)


def test_errors():
    scanner = Scanner("c(x")
    scanner.expect("c")
    scanner.expect("(")
    assert scanner.name() == "x"
    with pytest.raises(ParseError) as info:
        scanner.expect(")")
    assert info.value.pos == 3
    with pytest.raises(ParseError):
        scanner.next()


def test_integer_and_done():
    scanner = Scanner("7 x")
    assert scanner.integer() == 7
    with pytest.raises(ParseError):
        scanner.integer()
    with pytest.raises(ParseError):
        scanner.done()
    assert scanner.name() == "x"
    scanner.done()
