import unittest

from ordwqo.ordering import Ordering
from ordwqo.theta.term import (
    ZERO_TERM,
    BaseOrder,
    Const,
    Sum,
    Theta,
    gamma_omega_term,
    make_sum,
    well_formed,
)
from ordwqo.utils.error import NotFoundError, ParamError


class TestBaseOrder(unittest.TestCase):
    def test_chain(self):
        X = BaseOrder.chain(3)
        self.assertEqual(("0", "1", "2"), X.carrier)
        self.assertEqual(Ordering.LESS, X.compare("0", "2"))
        self.assertEqual(Ordering.EQUAL, X.compare("1", "1"))
        self.assertIn("2", X)
        self.assertEqual(3, len(X))
        with self.assertRaises(NotFoundError):
            X.index("3")

    def test_from_pairs(self):
        X = BaseOrder.from_pairs(["b", "c", "a"], [("a", "b"), ("b", "c"), ("a", "c")])
        self.assertEqual(("a", "b", "c"), X.carrier)
        with self.assertRaises(ParamError):
            BaseOrder.from_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")])
        with self.assertRaises(ParamError):
            BaseOrder.from_pairs(["a", "b"], [("a", "b"), ("b", "a")])
        with self.assertRaises(NotFoundError):
            BaseOrder.from_pairs(["a"], [("a", "z")])
        with self.assertRaises(ParamError):
            BaseOrder(["a", "a"])


class TestTerms(unittest.TestCase):
    def setUp(self):
        self.X = BaseOrder.chain(2)

    def test_size(self):
        self.assertEqual(1, ZERO_TERM.size)
        self.assertEqual(1, Const("0").size)
        self.assertEqual(2, Theta("0").size)
        self.assertEqual(4, Theta("0", ((0, Const("0")),)).size)
        self.assertEqual(7, Theta("1", ((2, Theta("0")), (0, Const("1")))).size)
        self.assertEqual(4, Sum((Theta("1"), Theta("0"))).size)

    def test_well_formed(self):
        self.assertTrue(well_formed(ZERO_TERM, self.X))
        self.assertTrue(well_formed(Theta("1", ((2, Theta("0")), (0, Const("1")))), self.X))

        res = well_formed(Theta("0", ((0, ZERO_TERM),)), self.X)
        self.assertFalse(res)
        self.assertEqual("root.tail[0].coeff", res.path)

        res = well_formed(Sum((Theta("0"), Theta("1"))), self.X)
        self.assertFalse(res)
        self.assertEqual("root.summands[1]", res.path)

        res = well_formed(Theta("0", ((1, Const("0")), (1, Const("1")))), self.X)
        self.assertEqual("root.tail[1].degree", res.path)

        res = well_formed(Theta("0", ((0, Theta("7")),)), self.X)
        self.assertEqual("root.tail[0].coeff.head", res.path)

        self.assertFalse(well_formed(Const("5"), self.X))
        self.assertFalse(well_formed(Sum((Theta("0"),)), self.X))
        self.assertFalse(well_formed(Sum((Theta("0"), Const("0"))), self.X))
        self.assertTrue(well_formed(Sum((Theta("1"), Theta("0"), Theta("0"))), self.X))

    def test_make_sum(self):
        a, b = Theta("0"), Theta("1")
        self.assertEqual(Sum((b, a)), make_sum([a, b], self.X))
        self.assertEqual(Sum((b, b, a)), make_sum([a, ZERO_TERM, Sum((b, b))], self.X))
        self.assertEqual(a, make_sum([ZERO_TERM, a], self.X))
        self.assertEqual(ZERO_TERM, make_sum([], self.X))
        with self.assertRaises(ParamError):
            make_sum([a, Const("0")], self.X)

    def test_gamma_omega_term(self):
        self.assertEqual(Theta("1"), gamma_omega_term("1", self.X))
        with self.assertRaises(NotFoundError):
            gamma_omega_term("2", self.X)
