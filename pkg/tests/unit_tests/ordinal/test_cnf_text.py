import pytest

from ordwqo.ordinal.cnf import OMEGA, ZERO, add, mul, of_int, omega_power, omega_tower
from ordwqo.ordinal.generate import enumerate_cnf
from ordwqo.ordinal.text import parse_cnf, print_cnf
from ordwqo.utils.error import ParseError


def test_print():
    assert print_cnf(ZERO) == "0"
    assert print_cnf(of_int(12)) == "12"
    assert print_cnf(OMEGA) == "w"
    assert print_cnf(omega_tower(2)) == "w^w"
    assert print_cnf(omega_tower(3)) == "w^(w^w)"
    assert print_cnf(omega_power(add(OMEGA, of_int(1)))) == "w^(w + 1)"
    assert print_cnf(add(mul(omega_power(OMEGA), of_int(2)), add(OMEGA, of_int(3)))) == "w^w*2 + w + 3"
    assert str(mul(omega_power(of_int(2)), of_int(5))) == "w^2*5"


def test_parse():
    assert parse_cnf("w^w*2 + w + 3") == add(mul(omega_power(OMEGA), of_int(2)), add(OMEGA, of_int(3)))
    assert parse_cnf(" ( w + 1 ) * 2 ") == parse_cnf("w*2 + 1")
    assert parse_cnf("1 + w") == OMEGA
    assert parse_cnf("w^0") == of_int(1)
    assert parse_cnf("0") == ZERO


@pytest.mark.parametrize("text", ["", "w +", "w^", "(w", "w)", "x", "w^w^w", "2*w", "w**2"])
def test_parse_error(text):
    with pytest.raises(ParseError):
        parse_cnf(text)


def test_round_trip():
    for a in enumerate_cnf(3, 2, 4):
        text = print_cnf(a)
        assert parse_cnf(text) == a
        assert print_cnf(parse_cnf(text)) == text
