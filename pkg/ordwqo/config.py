from typing import Optional, Callable

from ordwqo.utils.error import ParamError


class Config:
    """Pass configuration.

    :param log_time_func: optional, customized log time function
    :type log_time_func: Optional[Callable[[str, float], None]]
    :param max_degree: the largest Ω-degree allowed in Theta tails when enumerating terms, defaults to 2.
    :type max_degree: int
    :param enum_budget: the maximal number of terms or trees an enumeration may produce, defaults to 200000.
    :type enum_budget: int
    :param search_budget: the maximal number of nodes a bad-sequence search may visit, defaults to 2000000.
    :type search_budget: int
    :param embed_cache_size: the size of the memo used by the tree embedding checker, defaults to 100000.
    :type embed_cache_size: int
    :param random_cases: the number of randomized cases per law in the property suites, defaults to 10000.
    :type random_cases: int
    :param seed: the seed of the suites' random generators, defaults to 2024.
    :type seed: int
    :param max_violations: how many violation descriptions a suite report keeps, defaults to 20.
    :type max_violations: int
    :param rt2_sequences_per_space: product spaces with at most this many maximal bad sequences are checked
     exhaustively, larger ones on this many seeded random samples; defaults to 40.
    :type rt2_sequences_per_space: int

    Example:
        .. code-block:: python

            from ordwqo import Config

            configs = Config(max_degree=1, random_cases=500)
    """

    def __init__(
            self,
            log_time_func: Optional[Callable[[str, float], None]] = None,
            max_degree: int = 2,
            enum_budget: int = 200000,
            search_budget: int = 2000000,
            embed_cache_size: int = 100000,
            random_cases: int = 10000,
            seed: int = 2024,
            max_violations: int = 20,
            rt2_sequences_per_space: int = 40,
    ):
        if max_degree < 0:
            raise ParamError("Invalid the max_degree param, it should be non-negative")
        for name, value in (
            ("enum_budget", enum_budget),
            ("search_budget", search_budget),
            ("embed_cache_size", embed_cache_size),
            ("rt2_sequences_per_space", rt2_sequences_per_space),
        ):
            if value < 1:
                raise ParamError(f"Invalid the {name} param, it should be positive")
        if random_cases < 0 or max_violations < 0:
            raise ParamError("Invalid the random_cases or max_violations param, reasonable range: >= 0")
        self.log_time_func = log_time_func
        self.max_degree = max_degree
        self.enum_budget = enum_budget
        self.search_budget = search_budget
        self.embed_cache_size = embed_cache_size
        self.random_cases = random_cases
        self.seed = seed
        self.max_violations = max_violations
        self.rt2_sequences_per_space = rt2_sequences_per_space
