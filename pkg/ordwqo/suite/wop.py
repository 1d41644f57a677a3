from typing import List

from ordwqo.ordering import Ordering
from ordwqo.ordinal.cnf import OMEGA, OrdinalCNF, compare_cnf, mul, of_int, omega_power
from ordwqo.ordinal.generate import random_cnf
from ordwqo.ordinal.wop import approx_index, gamma_plus, gamma_times, pow_n
from ordwqo.report import SuiteReport
from ordwqo.suite.base import PropertySuite
from ordwqo.utils.error import BudgetExceededError

POWERS = 5


def just_below(a: OrdinalCNF) -> List[OrdinalCNF]:
    """Ordinals below ``a`` obtained by dropping or lowering its trailing terms, and the
    same for the leading exponent; these sit closest to ``a`` among its simple truncations."""
    res = [OrdinalCNF(a.terms[:i]) for i in range(len(a.terms))]
    if a.terms and a.terms[-1][1] > 1:
        exponent, coeff = a.terms[-1]
        res.append(OrdinalCNF(a.terms[:-1] + ((exponent, coeff - 1),)))
    if a.terms and not a.is_finite:
        res.extend(omega_power(e) for e in just_below(a.leading_exponent))
    return res


class WopSuite(PropertySuite):
    """Laws of the evaluators a·ω, a^ω, a^n and the approximation index, on seeded random ordinals."""

    name = "wop"

    def check(self, report: SuiteReport):
        rng = self.rng
        for _ in range(self.config.random_cases):
            a, b = random_cnf(rng, max_depth=2), random_cnf(rng, max_depth=2)
            report.case(gamma_plus(a) == mul(a, OMEGA), f"gamma_plus({a}) is not {a}*w")
            if compare_cnf(a, b) == Ordering.GREATER:
                a, b = b, a
            report.case(
                compare_cnf(gamma_plus(a), gamma_plus(b)) != Ordering.GREATER
                and compare_cnf(gamma_times(a), gamma_times(b)) != Ordering.GREATER,
                f"gamma_plus or gamma_times decreases from {a} to {b}",
            )
            if compare_cnf(b, of_int(2)) == Ordering.LESS:
                continue
            limit = gamma_times(b)
            report.case(
                all(compare_cnf(pow_n(b, n), limit) == Ordering.LESS for n in range(POWERS)),
                f"a power of {b} reaches {limit}",
            )
            # a^ω is the least bound: everything below it is below some a^n
            for c in [a] + just_below(limit):
                if compare_cnf(c, limit) != Ordering.LESS:
                    continue
                try:
                    k = approx_index(c, b, self.search_budget("approx_index"))
                except BudgetExceededError:
                    report.case(False, f"{c} is below {limit} but no power of {b} exceeds it")
                    continue
                below = k == 0 or compare_cnf(pow_n(b, k - 1), c) != Ordering.GREATER
                report.case(
                    below and compare_cnf(c, pow_n(b, k)) == Ordering.LESS,
                    f"approx_index({c}, {b}) = {k} is not the least n with {c} < {b}^n",
                )
