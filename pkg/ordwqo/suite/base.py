import random
import time
from abc import ABCMeta, abstractmethod

from ordwqo.config import Config
from ordwqo.report import SuiteReport
from ordwqo.utils.budget import Budget
from ordwqo.utils.log import ordwqo_log
from ordwqo.utils.time import time_cal


class PropertySuite(metaclass=ABCMeta):
    """Property suite interface, a named batch of exhaustive or seeded randomized checks
    whose outcome is a :class:`SuiteReport`.

    Example:
        .. code-block:: python

            from ordwqo import Config
            from ordwqo.suite import Suite

            report = Suite("wop", Config(random_cases=100)).run()
            report.passed
    """

    name = "base"

    def __init__(self, config: Config):
        self.config = config
        self.rng = random.Random(config.seed)

    def enum_budget(self, what: str) -> Budget:
        return Budget(self.config.enum_budget, what)

    def search_budget(self, what: str) -> Budget:
        return Budget(self.config.search_budget, what)

    @abstractmethod
    def check(self, report: SuiteReport):
        """Run every check, recording each case on ``report``.

        :param report: the report of this run.
        :type report: SuiteReport
        """
        pass

    def run(self) -> SuiteReport:
        from ordwqo import workbench  # pylint: disable=C0415

        report = SuiteReport(self.name, self.config.max_violations)
        ordwqo_log.info("suite %s started", self.name)
        start = time.time()
        time_cal(self.check, func_name=f"suite:{self.name}", report_name=self.name)(report)
        report.wall_time = time.time() - start
        if report.truncated:
            ordwqo_log.warning("suite %s was capped, its report is truncated", self.name)
        ordwqo_log.info(
            "suite %s finished: %d cases, %d violations", self.name, report.cases, report.violation_count
        )
        workbench.report.add_suite(report)
        return report
