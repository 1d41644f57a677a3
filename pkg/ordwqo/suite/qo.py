import numpy as np

from ordwqo.ordering import Ordering
from ordwqo.ordinal.cnf import add, nat_prod, nat_sum
from ordwqo.qo.badseq import (
    BadSeqTree,
    check_reification,
    good_pair,
    kb_compare,
    kb_linearize,
    kb_reification,
    longest_bad,
    maximal_order_type,
)
from ordwqo.qo.catalogue import catalogue
from ordwqo.qo.combinators import NFoldMode, disjoint_union, n_fold, ordered_sum, product
from ordwqo.qo.finite import FiniteQO
from ordwqo.report import SuiteReport
from ordwqo.suite.base import PropertySuite
from ordwqo.utils.error import ParamError

MAX_POINTS = 4
MAX_COPIES = 4


def _included(small: np.ndarray, big: np.ndarray) -> bool:
    return not np.any(small & ~big)


class QOSuite(PropertySuite):
    """Quasi-order combinators, bad sequences and Kleene–Brouwer linearizations over
    the catalogue of every quasi-order on at most four labelled points."""

    name = "qo"

    def check(self, report: SuiteReport):
        orders = catalogue(MAX_POINTS)
        self.check_combinators(report)
        self.check_extension_chain(report, orders)
        self.check_longest_bad(report, orders)
        self.check_kb(report, orders)
        self.check_order_types(report)
        self.check_plus_sequences(report)

    def check_combinators(self, report: SuiteReport):
        small = catalogue(3) + [FiniteQO.chain(5), FiniteQO.antichain(5), FiniteQO.chain(4)]
        for P in small:
            for Q in small:
                for combine in (product, ordered_sum, disjoint_union):
                    try:
                        combine(P, Q)
                        report.case(True)
                    except ParamError as e:
                        report.case(False, f"{combine.__name__}({P!r}, {Q!r}) is not a quasi-order: {e}")

    def check_extension_chain(self, report: SuiteReport, orders):
        for Q in orders:
            for n in range(1, MAX_COPIES + 1):
                dunion, times, plus = (n_fold(Q, n, mode).le for mode in
                                       (NFoldMode.DUNION, NFoldMode.TIMES, NFoldMode.PLUS))
                report.case(_included(dunion, times), f"dunion is not inside times for {n} x {Q!r}")
                report.case(_included(times, plus), f"times is not inside plus for {n} x {Q!r}")
                if Q.is_total():
                    report.case(bool(np.all(plus | plus.T)), f"plus is not total for {n} x {Q!r}")

    def check_longest_bad(self, report: SuiteReport, orders):
        for Q in orders:
            length, witness = longest_bad(Q, self.search_budget("longest_bad"))
            report.case(length == len(Q.classes()), f"longest bad sequence of {Q!r} has length {length}")
            report.case(good_pair(witness, Q) is None, f"witness {witness} of {Q!r} is good")
        square = product(FiniteQO.chain(2), FiniteQO.chain(2))
        report.case(longest_bad(square)[0] == 4, "the square of the 2-chain does not have a bad sequence of length 4")

    def check_kb(self, report: SuiteReport, orders):
        for Q in orders:
            T = BadSeqTree(Q, self.search_budget("bad-sequence tree"))
            order = kb_linearize(T)
            report.case(len(order) == len(T) == len(set(order)), f"linearization of {Q!r} lost nodes")
            for i, s in enumerate(order):
                for t in order[i + 1:]:
                    report.case(
                        kb_compare(s, t) == Ordering.LESS and kb_compare(t, s) == Ordering.GREATER,
                        f"{s} and {t} are not strictly ordered for {Q!r}",
                    )
            position = {node: i for i, node in enumerate(order)}
            for parent, child in T.edges():
                report.case(position[child] < position[parent], f"{child} is not before {parent} for {Q!r}")
            ranks = kb_reification(T)
            report.case(bool(check_reification(T, ranks, strict=True)), f"rank map of {Q!r} is not a reification")

    def check_order_types(self, report: SuiteReport):
        orders = catalogue(2)
        for P in orders:
            for Q in orders:
                p, q = maximal_order_type(P), maximal_order_type(Q)
                report.case(maximal_order_type(product(P, Q)) == nat_prod(p, q), f"o({P!r} x {Q!r})")
                report.case(maximal_order_type(ordered_sum(P, Q)) == add(p, q), f"o({P!r} + {Q!r})")
                report.case(maximal_order_type(disjoint_union(P, Q)) == nat_sum(p, q), f"o({P!r} u {Q!r})")

    def check_plus_sequences(self, report: SuiteReport):
        """Bad sequences of ``n × Q`` under ≤_+ have weakly descending copy indices,
        and the run of the last copy index is bad in ``Q``."""
        for Q in catalogue(3):
            for n in range(1, 4):
                plus = n_fold(Q, n, NFoldMode.PLUS)
                T = BadSeqTree(plus, self.search_budget("bad-sequence tree"))
                for node in T.nodes:
                    copies = [x // Q.size for x in node]
                    report.case(
                        all(a >= b for a, b in zip(copies, copies[1:])),
                        f"copy indices {copies} ascend in a bad sequence",
                    )
                    if node:
                        tail = [Q.carrier[x % Q.size] for x, m in zip(node, copies) if m == copies[-1]]
                        report.case(good_pair(tail, Q) is None, f"tail {tail} of a bad sequence is good in {Q!r}")
