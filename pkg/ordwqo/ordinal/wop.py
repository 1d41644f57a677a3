from typing import Optional

from ordwqo.ordinal.cnf import (
    OMEGA,
    ONE,
    OrdinalCNF,
    ZERO,
    add,
    compare_cnf,
    mul,
    of_int,
    omega_power,
)
from ordwqo.ordering import Ordering
from ordwqo.utils.budget import Budget
from ordwqo.utils.error import ParamError


def gamma_plus(a: OrdinalCNF) -> OrdinalCNF:
    """a·ω, the value of ``X ↦ X × ω`` on an order of type ``a``.

    With leading term ω^e the product is ω^(e+1); 0 is mapped to 0.
    """
    if a.is_zero:
        return ZERO
    return omega_power(add(a.leading_exponent, ONE))


def gamma_times(a: OrdinalCNF) -> OrdinalCNF:
    """a^ω, the value of ``X ↦ X^ω``.

    0 and 1 are fixed points, finite a ≥ 2 gives ω, otherwise ω^(e·ω) for the
    leading exponent e.
    """
    if a.is_finite:
        value = a.finite_value
        return a if value < 2 else OMEGA
    return omega_power(mul(a.leading_exponent, OMEGA))


def pow_n(a: OrdinalCNF, n: int) -> OrdinalCNF:
    """a^n by iterated ordinal multiplication, a^0 = 1."""
    if n < 0:
        raise ParamError(f"pow_n expects a non-negative exponent, got {n}")
    res = ONE
    for _ in range(n):
        res = mul(res, a)
    return res


def approx_index(b: OrdinalCNF, a: OrdinalCNF, budget: Optional[Budget] = None) -> int:
    """Least n with b < a^n, the finite stage witnessing b < sup_n a^n = a^ω.

    :param b: the ordinal to approximate, must be below ``gamma_times(a)``.
    :param a: the base, at least 2.
    :param budget: optional bound on the number of powers tried.
    :return: the index n.

    Example:
        .. code-block:: python

            from ordwqo.ordinal.text import parse_cnf
            from ordwqo.ordinal.wop import approx_index

            approx_index(parse_cnf("w*3 + 5"), parse_cnf("w"))  # 2
    """
    if compare_cnf(a, of_int(2)) == Ordering.LESS:
        raise ParamError(f"approx_index needs a base of at least 2, got {a}")
    if compare_cnf(b, gamma_times(a)) != Ordering.LESS:
        raise ParamError(f"{b} is not below {a}^w")
    budget = budget or Budget(None, "approx_index")
    n, power = 0, ONE
    while compare_cnf(b, power) != Ordering.LESS:
        budget.spend()
        n += 1
        power = mul(power, a)
    return n
