from ordwqo.ordinal.text import parse_cnf, print_cnf
from ordwqo.qo.catalogue import catalogue
from ordwqo.qo.io import dumps_qo, loads_qo
from ordwqo.report import SuiteReport
from ordwqo.suite.base import PropertySuite
from ordwqo.suite.cnf import cnf_universe
from ordwqo.theta.enumerate import enumerate_terms
from ordwqo.theta.term import BaseOrder
from ordwqo.theta.text import parse_g, print_g
from ordwqo.tree.labelled import enumerate_trees
from ordwqo.tree.text import parse_tree, print_tree
from ordwqo.utils.error import OrdWqoError

TERM_SIZE = 6
TREE_NODES = 4


class RoundTripSuite(PropertySuite):
    """Every printer followed by its parser is the identity, and printing again gives the same bytes."""

    name = "roundtrip"

    def _round_trip(self, report: SuiteReport, value, printer, parser):
        text = printer(value)
        try:
            back = parser(text)
        except OrdWqoError as e:
            report.case(False, f"{text!r} does not parse back: {e}")
            return
        report.case(back == value and printer(back) == text, f"{text!r} does not round-trip")

    def check(self, report: SuiteReport):
        for a in cnf_universe():
            self._round_trip(report, a, print_cnf, parse_cnf)
        X = BaseOrder.chain(3)
        for t in enumerate_terms(X, TERM_SIZE, self.config.max_degree, self.enum_budget("enumerate_terms")):
            self._round_trip(report, t, print_g, parse_g)
        for t in enumerate_trees(["a", "b"], TREE_NODES, budget=self.enum_budget("enumerate_trees")):
            self._round_trip(report, t, print_tree, parse_tree)
        for Q in catalogue(4):
            self._round_trip(report, Q, dumps_qo, loads_qo)
