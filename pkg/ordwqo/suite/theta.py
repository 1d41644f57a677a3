from typing import Dict, List

import numpy as np

from ordwqo.ordering import Ordering
from ordwqo.qo.finite import is_transitive
from ordwqo.report import SuiteReport
from ordwqo.suite.base import PropertySuite
from ordwqo.theta.compare import compare_g
from ordwqo.theta.enumerate import enumerate_terms
from ordwqo.theta.term import BaseOrder, Const, GTerm, Sum, Theta, ZERO_TERM, well_formed
from ordwqo.theta.text import print_g
from ordwqo.utils.error import TerminationError

UNIVERSE_SIZE = 7
TRANSITIVITY_SIZE = 5
PRINCIPALITY_SIZE = 6
MAX_CARRIER = 20


class ThetaSuite(PropertySuite):
    """Order properties of ≤_G over the 3-chain."""

    name = "theta"

    def check(self, report: SuiteReport):
        X = BaseOrder.chain(3)
        universe = enumerate_terms(
            X, UNIVERSE_SIZE, self.config.max_degree, self.enum_budget("enumerate_terms")
        )
        for t in universe:
            res = well_formed(t, X)
            report.case(bool(res), f"{print_g(t)} rejected at {res.path}: {res.reason}")
        self.check_trichotomy(report, X, universe)
        small = [t for t in universe if t.size <= TRANSITIVITY_SIZE]
        self.check_transitivity(report, X, small)
        self.check_principality(report, X, [t for t in universe if t.size <= PRINCIPALITY_SIZE])
        self.check_coefficients(report, X, universe, small)
        self.check_embedding(report)

    def _compare(self, report: SuiteReport, a: GTerm, b: GTerm, X: BaseOrder):
        try:
            return compare_g(a, b, X)
        except TerminationError as e:
            report.violation(f"{print_g(a)} vs {print_g(b)}: {e}")
            return None

    def check_trichotomy(self, report: SuiteReport, X: BaseOrder, universe: List[GTerm]):
        """``universe`` is sorted, so every later term must be strictly greater, seen from both sides."""
        for t in universe:
            report.case(self._compare(report, t, t, X) == Ordering.EQUAL, f"{print_g(t)} is not equal to itself")
        for i, a in enumerate(universe):
            for b in universe[i + 1:]:
                forward = self._compare(report, a, b, X)
                backward = self._compare(report, b, a, X)
                report.case(
                    forward == Ordering.LESS and backward == Ordering.GREATER,
                    f"{print_g(a)} vs {print_g(b)}: {forward} / {backward}",
                )

    def check_transitivity(self, report: SuiteReport, X: BaseOrder, terms: List[GTerm]):
        less = np.zeros((len(terms), len(terms)), dtype=bool)
        for i, a in enumerate(terms):
            for j, b in enumerate(terms):
                less[i, j] = self._compare(report, a, b, X) == Ordering.LESS
        report.case(is_transitive(less), f"<_G is not transitive on the {len(terms)} terms of size <= 5")
        report.case(not np.any(np.diagonal(less)), "<_G is not irreflexive")

    def check_principality(self, report: SuiteReport, X: BaseOrder, terms: List[GTerm]):
        """Sums of two smaller ϑ-terms stay below a ϑ-term."""
        thetas = [t for t in terms if isinstance(t, Theta)]
        for k, tau in enumerate(thetas):
            below = thetas[:k]
            for i, a in enumerate(below):
                for b in below[:i + 1]:
                    s = Sum((a, b))
                    report.case(
                        self._compare(report, s, tau, X) == Ordering.LESS,
                        f"{print_g(s)} is not below {print_g(tau)}",
                    )

    def check_coefficients(self, report: SuiteReport, X: BaseOrder, universe: List[GTerm], small: List[GTerm]):
        """Every coefficient is below its ϑ-term, and so is everything up to a coefficient."""
        for t in universe:
            if not isinstance(t, Theta):
                continue
            for c in t.coefficients:
                report.case(
                    self._compare(report, c, t, X) == Ordering.LESS,
                    f"coefficient {print_g(c)} is not below {print_g(t)}",
                )
                if t.size > UNIVERSE_SIZE - 1:
                    continue
                for a in small:
                    if self._compare(report, a, c, X) != Ordering.GREATER:
                        report.case(
                            self._compare(report, a, t, X) == Ordering.LESS,
                            f"{print_g(a)} <= coefficient {print_g(c)} but not below {print_g(t)}",
                        )

    def check_embedding(self, report: SuiteReport):
        """x ↦ c_x and x ↦ ϑ(Ω^ω × c_x) embed X for carriers up to 20 elements."""
        for n in range(1, MAX_CARRIER + 1):
            X = BaseOrder.chain(n)
            consts: Dict[str, GTerm] = {x: Const(x) for x in X}
            thetas: Dict[str, GTerm] = {x: Theta(x) for x in X}
            for x in X:
                report.case(compare_g(ZERO_TERM, thetas[x], X) == Ordering.LESS, f"0 is not below th({x})")
                for y in X:
                    expected = X.compare(x, y)
                    report.case(
                        compare_g(consts[x], consts[y], X) == expected
                        and compare_g(thetas[x], thetas[y], X) == expected,
                        f"element order of {x}, {y} is not preserved over {n} elements",
                    )
