__all__ = ["Suite", "PropertySuite", "run_suites"]

import importlib
from typing import List, Optional

from ordwqo.config import Config
from ordwqo.report import SuiteReport
from ordwqo.suite.base import PropertySuite


def _manager():
    # the manager imports every suite module, which import this package
    return importlib.import_module("ordwqo.suite.manager")


def Suite(name: str, config: Optional[Config] = None) -> PropertySuite:
    """Generate a property suite with the configuration.

    :param name: the suite name, one of cnf, theta, trees, qo, ramsey, wop, roundtrip.
    :type name: str
    :param config: the configuration, the workbench's one by default.
    :type config: Config

    Example:
        .. code-block:: python

            from ordwqo.suite import Suite

            report = Suite("qo").run()
    """
    if config is None:
        from ordwqo import workbench  # pylint: disable=C0415

        config = workbench.config
    return _manager().Suite.get(name, config)


def run_suites(name: str = "all", config: Optional[Config] = None) -> List[SuiteReport]:
    """Run one suite, or every registered suite for ``all``."""
    names = _manager().Suite.names() if name == "all" else [name]
    return [Suite(n, config).run() for n in names]
