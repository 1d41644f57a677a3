import json
from typing import Dict, List, Optional


class OpCounter:
    """Operation counter."""

    count = 0
    """Operation count."""
    total_time = 0
    """Total time."""

    def average(self):
        """Average time."""
        return round(self.total_time / self.count, 4) if self.count != 0 else 0


class SuiteReport:
    """Machine-readable outcome of one property suite.

    :param name: the suite name.
    :type name: str
    :param max_violations: how many violation descriptions are kept, the count is always exact.
    :type max_violations: int
    """

    def __init__(self, name: str, max_violations: int = 20):
        self.name = name
        self.max_violations = max_violations
        self.cases = 0
        self.violation_count = 0
        self.violations: List[str] = []
        self.truncated = False
        self.wall_time: Optional[float] = None

    def case(self, ok: bool = True, description: str = ""):
        """Record one checked case, ``description`` is kept when the case fails."""
        self.cases += 1
        if not ok:
            self.violation(description)

    def violation(self, description: str):
        self.violation_count += 1
        if len(self.violations) < self.max_violations:
            self.violations.append(description)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_dict(self, timing: bool = False) -> Dict:
        res = {
            "suite": self.name,
            "cases": self.cases,
            "violation_count": self.violation_count,
            "violations": list(self.violations),
            "truncated": self.truncated,
        }
        if timing and self.wall_time is not None:
            res["wall_time"] = round(self.wall_time, 4)
        return res

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


class Report:
    """Get the ordwqo report including time and counts for each suite that has been run."""

    def __init__(self):
        self.ops: Dict[str, OpCounter] = {}
        self.suites: List[SuiteReport] = []

    def op(self, name: str):
        """Return the counter of an operation, creating it on first use."""
        if name not in self.ops:
            self.ops[name] = OpCounter()
        return self.ops[name]

    def record(self, name: str, delta_time: float):
        """Operation counts and time.

        :param name: the operation name.
        :param delta_time: additional runtime.
        """
        counter = self.op(name)
        counter.total_time += delta_time
        counter.count += 1

    def add_suite(self, suite_report: SuiteReport):
        self.suites.append(suite_report)

    def average_time(self, name: str):
        """Average time of an operation."""
        return self.op(name).average()

    @property
    def violation_count(self):
        return sum(s.violation_count for s in self.suites)

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(
            {
                "suites": [s.to_dict(timing) for s in self.suites],
                "violation_count": self.violation_count,
            },
            sort_keys=True,
            indent=2,
        )
