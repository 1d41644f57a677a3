import unittest

import numpy as np

from ordwqo.qo.finite import FiniteQO
from ordwqo.tree.embedding import EmbeddingChecker, embedding_matrix, embeds, embeds_oracle
from ordwqo.tree.labelled import enumerate_trees
from ordwqo.tree.text import parse_tree
from ordwqo.utils.error import NotFoundError


class TestEmbedding(unittest.TestCase):
    def setUp(self):
        self.single = FiniteQO.singleton("q")
        self.chain = FiniteQO.chain(2, ["a", "b"])

    def test_examples(self):
        t, s = parse_tree("q[q[]]"), parse_tree("q[q[],q[]]")
        self.assertTrue(embeds(t, s, self.single))
        self.assertFalse(embeds(s, t, self.single))
        self.assertTrue(embeds(s, s, self.single))
        self.assertTrue(embeds(parse_tree("q[q[],q[]]"), parse_tree("q[q[q[],q[]]]"), self.single))
        self.assertFalse(embeds(parse_tree("q[q[],q[]]"), parse_tree("q[q[q[]]]"), self.single))

    def test_labels(self):
        self.assertTrue(embeds(parse_tree("a[]"), parse_tree("b[]"), self.chain))
        self.assertFalse(embeds(parse_tree("b[]"), parse_tree("a[]"), self.chain))
        self.assertTrue(embeds(parse_tree("b[]"), parse_tree("a[a[],b[]]"), self.chain))
        self.assertFalse(embeds(parse_tree("b[]"), parse_tree("a[a[],a[]]"), self.chain))
        self.assertTrue(embeds(parse_tree("b[a[],a[]]"), parse_tree("a[b[a[b[]],a[]]]"), self.chain))
        self.assertFalse(embeds(parse_tree("b[b[],a[]]"), parse_tree("b[a[],b[]]"), self.chain))
        with self.assertRaises(NotFoundError):
            embeds(parse_tree("c[]"), parse_tree("a[]"), self.chain)
        with self.assertRaises(NotFoundError):
            embeds_oracle(parse_tree("a[]"), parse_tree("a[z[]]"), self.chain)

    def test_against_oracle(self):
        antichain = FiniteQO.antichain(2, ["a", "b"])
        trees = enumerate_trees(antichain, 4)
        checker = EmbeddingChecker(antichain, cache_size=64)
        rel = embedding_matrix(trees, checker)
        for i, t in enumerate(trees):
            for j, s in enumerate(trees):
                self.assertEqual(embeds_oracle(t, s, antichain), rel[i, j], f"{t} into {s}")
        self.assertTrue(np.all(np.diagonal(rel)))
