import pytest

from ordwqo.utils.budget import Budget
from ordwqo.utils.error import BudgetExceededError, ParamError


def test_spend():
    budget = Budget(3, "unittest")
    budget.spend()
    budget.spend(2)
    assert budget.used == 3
    assert budget.remaining == 0
    with pytest.raises(BudgetExceededError) as info:
        budget.spend()
    assert info.value.what == "unittest"


def test_unbounded():
    budget = Budget()
    budget.spend(10 ** 6)
    assert budget.remaining is None


def test_negative_limit():
    with pytest.raises(ParamError):
        Budget(-1)
