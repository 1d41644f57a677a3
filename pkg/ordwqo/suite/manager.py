# pylint: disable=import-outside-toplevel
from typing import List

from ordwqo.config import Config
from ordwqo.utils.error import NotFoundError

SUITE_NAMES = ["cnf", "theta", "trees", "qo", "ramsey", "wop", "roundtrip"]


class Suite:
    """
    Suite registry, resolves a suite name to a configured property suite.
    """

    def __init__(self):
        raise EnvironmentError(
            "Suite is designed to be instantiated, "
            "please using the `Suite.get(name, config)`."
        )

    @staticmethod
    def names() -> List[str]:
        return list(SUITE_NAMES)

    @staticmethod
    def get(name: str, config: Config):
        if name == "cnf":
            from ordwqo.suite.cnf import CNFSuite

            return CNFSuite(config)
        if name == "theta":
            from ordwqo.suite.theta import ThetaSuite

            return ThetaSuite(config)
        if name == "trees":
            from ordwqo.suite.trees import TreeSuite

            return TreeSuite(config)
        if name == "qo":
            from ordwqo.suite.qo import QOSuite

            return QOSuite(config)
        if name == "ramsey":
            from ordwqo.suite.ramsey import RamseySuite

            return RamseySuite(config)
        if name == "wop":
            from ordwqo.suite.wop import WopSuite

            return WopSuite(config)
        if name == "roundtrip":
            from ordwqo.suite.roundtrip import RoundTripSuite

            return RoundTripSuite(config)
        raise NotFoundError("suite", name)
