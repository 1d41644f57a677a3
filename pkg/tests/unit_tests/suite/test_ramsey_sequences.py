import random

from ordwqo.qo.finite import FiniteQO
from ordwqo.suite.ramsey import (
    bad_product_sequences,
    maximal_bad_product_sequences,
    random_maximal_bad_product_sequence,
)
from ordwqo.utils.budget import Budget


def _good(Q, seq):
    return any(
        all(Q.leq(a, b) for a, b in zip(seq[i], seq[j]))
        for i in range(len(seq)) for j in range(i + 1, len(seq))
    )


def _extendable(Q, seq, n):
    points = [(a, b, c)[:n] for a in Q.carrier for b in Q.carrier for c in Q.carrier]
    return any(not _good(Q, seq + [p]) for p in points)


def test_small_spaces_are_exhausted():
    Q = FiniteQO.singleton("q")
    sequences, sampled = bad_product_sequences(Q, 1, 10, 40, random.Random(0), Budget(None))
    assert not sampled
    assert sequences == [[("q",)]]

    chain = FiniteQO.chain(2, ["a", "b"])
    sequences, sampled = bad_product_sequences(chain, 1, 10, 40, random.Random(0), Budget(None))
    assert not sampled
    assert sequences == list(maximal_bad_product_sequences(chain, 1, 10, Budget(None)))
    assert sequences == [[("a",)], [("b",), ("a",)]]


def test_large_spaces_are_sampled():
    Q = FiniteQO.antichain(3, ["a", "b", "c"])
    sequences, sampled = bad_product_sequences(Q, 3, 10, 40, random.Random(2024), Budget(None))
    assert sampled
    assert len(sequences) == 40
    for seq in sequences:
        assert not _good(Q, seq)
        assert len(seq) == 10 or not _extendable(Q, seq, 3)
    assert len({seq[0] for seq in sequences}) > 1


def test_budget_falls_back_to_sampling():
    Q = FiniteQO.chain(3)
    sequences, sampled = bad_product_sequences(Q, 2, 10, 3, random.Random(1), Budget(2))
    assert sampled
    assert len(sequences) == 3


def test_random_sequence_is_seeded():
    Q = FiniteQO.chain(3)
    first = random_maximal_bad_product_sequence(Q, 2, 10, random.Random(7))
    second = random_maximal_bad_product_sequence(Q, 2, 10, random.Random(7))
    assert first == second
    assert not _good(Q, first)
    assert not _extendable(Q, first, 2)
