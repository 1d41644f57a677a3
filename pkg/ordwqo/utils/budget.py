from ordwqo.utils.error import BudgetExceededError, ParamError


class Budget:
    """Explicit step counter for searches and enumerations.

    :param limit: the maximal number of steps, ``None`` for unbounded.
    :type limit: Optional[int]
    :param what: a short name used in the error message.
    :type what: str

    Example:
        .. code-block:: python

            from ordwqo.utils.budget import Budget

            budget = Budget(1000, "bad-sequence search")
            budget.spend()
    """

    def __init__(self, limit=None, what="operation"):
        if limit is not None and limit < 0:
            raise ParamError(f"budget must be non-negative, got {limit}")
        self.limit = limit
        self.what = what
        self.used = 0

    def spend(self, steps: int = 1):
        self.used += steps
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceededError(self.what, self.limit)

    @property
    def remaining(self):
        if self.limit is None:
            return None
        return max(self.limit - self.used, 0)
