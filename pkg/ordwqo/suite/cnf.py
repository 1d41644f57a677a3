from ordwqo.ordering import Ordering
from ordwqo.ordinal.cnf import OMEGA, add, compare_cnf, mul, nat_prod, nat_sum, of_int, omega_tower
from ordwqo.ordinal.generate import enumerate_cnf, random_cnf
from ordwqo.report import SuiteReport
from ordwqo.suite.base import PropertySuite
from ordwqo.utils.log import ordwqo_log

UNIVERSE_DEPTH = 3
UNIVERSE_COEFF = 3
UNIVERSE_MONOMIALS = 4


def cnf_universe():
    """The exhaustive CNF universe: depth ≤ 3, coefficients ≤ 3, at most 4 monomials."""
    return enumerate_cnf(UNIVERSE_DEPTH, UNIVERSE_COEFF, UNIVERSE_MONOMIALS)


class CNFSuite(PropertySuite):
    """Order and arithmetic laws of CNF ordinals.

    The comparison is checked for trichotomy and transitivity on the exhaustive
    universe: once the universe is sorted, every pair ``i < j`` must compare
    ``LESS`` one way and ``GREATER`` the other, which makes the order on the
    universe the index order. Arithmetic laws are checked on seeded random inputs.
    """

    name = "cnf"

    def check(self, report: SuiteReport):
        self.check_order(report)
        self.check_laws(report)
        self.check_tower(report)

    def check_order(self, report: SuiteReport):
        universe = cnf_universe()
        ordwqo_log.debug("cnf universe has %d ordinals", len(universe))
        for a in universe:
            report.case(compare_cnf(a, a) == Ordering.EQUAL, f"{a} is not equal to itself")
        for i, a in enumerate(universe):
            for b in universe[i + 1:]:
                forward, backward = compare_cnf(a, b), compare_cnf(b, a)
                report.case(
                    forward == Ordering.LESS and backward == Ordering.GREATER,
                    f"{a} vs {b}: {forward} / {backward}",
                )

    def check_laws(self, report: SuiteReport):
        rng = self.rng
        for _ in range(self.config.random_cases):
            a, b, c = (random_cnf(rng) for _ in range(3))
            report.case(nat_sum(a, b) == nat_sum(b, a), f"nat_sum not commutative on {a}, {b}")
            report.case(nat_prod(a, b) == nat_prod(b, a), f"nat_prod not commutative on {a}, {b}")
            report.case(
                nat_sum(nat_sum(a, b), c) == nat_sum(a, nat_sum(b, c)),
                f"nat_sum not associative on {a}, {b}, {c}",
            )
            report.case(
                nat_prod(nat_prod(a, b), c) == nat_prod(a, nat_prod(b, c)),
                f"nat_prod not associative on {a}, {b}, {c}",
            )
            report.case(
                nat_prod(a, nat_sum(b, c)) == nat_sum(nat_prod(a, b), nat_prod(a, c)),
                f"nat_prod does not distribute over nat_sum on {a}, {b}, {c}",
            )
            report.case(
                compare_cnf(add(a, b), nat_sum(a, b)) != Ordering.GREATER,
                f"{a} + {b} exceeds the natural sum",
            )
            report.case(
                add(add(a, b), c) == add(a, add(b, c)),
                f"add not associative on {a}, {b}, {c}",
            )
            report.case(
                mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
                f"mul does not distribute from the left on {a}, {b}, {c}",
            )
            order = compare_cnf(a, b)
            if order != Ordering.EQUAL:
                low, high = (a, b) if order == Ordering.LESS else (b, a)
                report.case(
                    compare_cnf(nat_sum(low, c), nat_sum(high, c)) == Ordering.LESS,
                    f"nat_sum not strictly monotone on {low} < {high} with {c}",
                )
        report.case(mul(add(OMEGA, of_int(1)), OMEGA) == mul(OMEGA, OMEGA), "(w+1)*w is not w^2")

    def check_tower(self, report: SuiteReport):
        towers = [omega_tower(n) for n in range(1, 7)]
        for n, (low, high) in enumerate(zip(towers, towers[1:]), start=1):
            report.case(
                compare_cnf(low, high) == Ordering.LESS,
                f"omega_tower({n}) is not below omega_tower({n + 1})",
            )
