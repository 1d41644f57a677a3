import numpy as np

from ordwqo.qo.finite import FiniteQO, is_transitive
from ordwqo.report import SuiteReport
from ordwqo.suite.base import PropertySuite
from ordwqo.tree.embedding import EmbeddingChecker, embedding_matrix, embeds_oracle
from ordwqo.tree.labelled import enumerate_trees

MAX_NODES = 5


def label_orders():
    return {
        "singleton": FiniteQO.singleton("q"),
        "2-chain": FiniteQO.chain(2),
        "2-antichain": FiniteQO.antichain(2),
    }


class TreeSuite(PropertySuite):
    """Kruskal embedding: greedy decision against the brute-force oracle, quasi-order laws,
    size monotonicity and label monotonicity, on all trees with at most 5 nodes."""

    name = "trees"

    def check(self, report: SuiteReport):
        matrices = {}
        for name, Q in label_orders().items():
            trees = enumerate_trees(Q, MAX_NODES, budget=self.enum_budget("enumerate_trees"))
            checker = EmbeddingChecker(Q, self.config.embed_cache_size)
            rel = embedding_matrix(trees, checker)
            matrices[name] = (trees, rel)
            for i, t in enumerate(trees):
                for j, s in enumerate(trees):
                    report.case(
                        rel[i, j] == embeds_oracle(t, s, Q),
                        f"{name}: greedy and oracle disagree on {t} into {s}",
                    )
                    if rel[i, j]:
                        report.case(
                            t.nodes <= s.nodes and t.degree <= s.degree,
                            f"{name}: {t} embeds into the smaller tree {s}",
                        )
            report.case(bool(np.all(np.diagonal(rel))), f"{name}: embedding is not reflexive")
            report.case(is_transitive(rel), f"{name}: embedding is not transitive")
        # the 2-chain coarsens the 2-antichain over the same labels
        trees, discrete = matrices["2-antichain"]
        coarse = matrices["2-chain"][1]
        for i, j in np.argwhere(discrete):
            report.case(bool(coarse[i, j]), f"coarsening the labels lost {trees[i]} into {trees[j]}")
