import random
from itertools import product as cartesian
from typing import Iterator, List, Tuple

from ordwqo.qo.badseq import BadSeqTree, good_pair
from ordwqo.qo.catalogue import catalogue
from ordwqo.qo.combinators import NFoldMode, n_fold
from ordwqo.qo.finite import FiniteQO
from ordwqo.ramsey.colouring import colour_bad_product_seq, homogeneous_subsets
from ordwqo.ramsey.pigeonhole import pigeonhole_extract, pigeonhole_order
from ordwqo.report import SuiteReport
from ordwqo.suite.base import PropertySuite
from ordwqo.utils.budget import Budget
from ordwqo.utils.error import BudgetExceededError, OrdWqoError
from ordwqo.utils.log import ordwqo_log

MAX_WIDTH = 3
MAX_POINTS = 3
MAX_PREFIX = 10
RANDOM_PREFIXES = 200
MAX_PREFIX_LENGTH = 50
MAX_BOUND = 5
DUNION_POINTS = 2

ProductSeq = List[Tuple[str, ...]]


def _below(Q: FiniteQO, p: Tuple[int, ...], q: Tuple[int, ...]) -> bool:
    return all(Q.le[a, b] for a, b in zip(p, q))


def _names(Q: FiniteQO, path: List[Tuple[int, ...]]) -> ProductSeq:
    return [tuple(Q.carrier[x] for x in p) for p in path]


def maximal_bad_product_sequences(Q: FiniteQO, n: int, max_length: int, budget: Budget) -> Iterator[ProductSeq]:
    """Bad sequences of ``n``-tuples under the componentwise order that cannot be
    extended, or reach ``max_length``, in depth-first order."""
    points = list(cartesian(range(Q.size), repeat=n))
    path: List[Tuple[int, ...]] = []

    def visit():
        budget.spend()
        extended = False
        if len(path) < max_length:
            for q in points:
                if not any(_below(Q, p, q) for p in path):
                    extended = True
                    path.append(q)
                    yield from visit()
                    path.pop()
        if not extended:
            yield _names(Q, path)

    yield from visit()


def random_maximal_bad_product_sequence(Q: FiniteQO, n: int, max_length: int, rng: random.Random) -> ProductSeq:
    """One maximal bad sequence of ``n``-tuples, each entry drawn uniformly from the
    admissible extensions of the prefix."""
    points = list(cartesian(range(Q.size), repeat=n))
    path: List[Tuple[int, ...]] = []
    while len(path) < max_length:
        admissible = [q for q in points if not any(_below(Q, p, q) for p in path)]
        if not admissible:
            break
        path.append(rng.choice(admissible))
    return _names(Q, path)


def bad_product_sequences(
    Q: FiniteQO, n: int, max_length: int, cap: int, rng: random.Random, budget: Budget
) -> Tuple[List[ProductSeq], bool]:
    """Every maximal bad sequence of the space when there are at most ``cap`` of them,
    otherwise ``cap`` seeded random ones.

    :return: the sequences, and whether they were sampled.
    """
    found = []
    try:
        for seq in maximal_bad_product_sequences(Q, n, max_length, budget):
            found.append(seq)
            if len(found) > cap:
                break
        else:
            return found, False
    except BudgetExceededError:
        ordwqo_log.debug("%d x %r is too large to exhaust, sampling instead", n, Q)
    return [random_maximal_bad_product_sequence(Q, n, max_length, rng) for _ in range(cap)], True


class RamseySuite(PropertySuite):
    """The colouring of bad product sequences, homogeneous sets, and the pigeonhole steps."""

    name = "ramsey"

    def check(self, report: SuiteReport):
        self.check_colourings(report)
        self.check_dunion_pigeonhole(report)
        self.check_pigeonhole_order(report)

    def check_colourings(self, report: SuiteReport):
        """Every homogeneous set of colour ``k`` projects to a bad sequence in component ``k``."""
        cap = self.config.rt2_sequences_per_space
        for Q in catalogue(MAX_POINTS):
            for n in range(1, MAX_WIDTH + 1):
                budget = self.search_budget("bad product sequences")
                sequences, sampled = bad_product_sequences(Q, n, MAX_PREFIX, cap, self.rng, budget)
                report.truncated |= sampled
                for seq in sequences:
                    try:
                        c = colour_bad_product_seq(seq, Q, n)
                    except OrdWqoError as e:
                        report.case(False, f"colouring of {seq} failed: {e}")
                        continue
                    report.case(
                        all(0 <= k < n for k in c.colours.values()),
                        f"colouring of {seq} uses a colour outside 0..{n - 1}",
                    )
                    for k in range(n):
                        for H in homogeneous_subsets(c, k):
                            projected = [seq[i][k] for i in H]
                            report.case(
                                good_pair(projected, Q) is None,
                                f"homogeneous set {H} of colour {k} in {seq} projects to a good sequence",
                            )

    def check_dunion_pigeonhole(self, report: SuiteReport):
        """The most frequent copy of a bad ``n × Q`` sequence under ≤_⊔ carries a bad sequence in ``Q``."""
        for Q in catalogue(DUNION_POINTS):
            for n in range(1, MAX_WIDTH + 1):
                T = BadSeqTree(n_fold(Q, n, NFoldMode.DUNION), self.search_budget("bad-sequence tree"))
                for node in T.nodes:
                    copies = [x // Q.size for x in node]
                    colour, indices = pigeonhole_extract(copies, n)
                    projected = [Q.carrier[node[i] % Q.size] for i in indices]
                    report.case(
                        all(copies[i] == colour for i in indices) and good_pair(projected, Q) is None,
                        f"copy {colour} of {node} is not a bad sequence in {Q!r}",
                    )

    def check_pigeonhole_order(self, report: SuiteReport):
        for _ in range(RANDOM_PREFIXES):
            m = self.rng.randint(1, MAX_BOUND)
            prefix = [self.rng.randrange(m) for _ in range(self.rng.randint(0, MAX_PREFIX_LENGTH))]
            try:
                res = pigeonhole_order(prefix, m)
                report.case(len(res.ranking) == len(prefix), f"ranking of {prefix} lost indices")
            except OrdWqoError as e:
                report.case(False, f"pigeonhole order of {prefix} with m={m}: {e}")
