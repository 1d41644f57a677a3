from ordwqo.qo.finite import FiniteQO
from ordwqo.tree.text import parse_tree
from ordwqo.tree.whistle import Whistle


def test_whistle():
    whistle = Whistle(FiniteQO.singleton("q"))
    assert whistle.feed(parse_tree("q[]")) is None
    assert whistle.feed(parse_tree("q[q[]]")) == (0, 1)
    assert whistle.blown
    assert whistle.feed(parse_tree("q[]")) == (0, 1)
    assert len(whistle.history) == 3


def test_no_pair_yet():
    whistle = Whistle(FiniteQO.singleton("q"))
    assert whistle.feed(parse_tree("q[q[],q[]]")) is None
    assert whistle.feed(parse_tree("q[q[]]")) is None
    assert not whistle.blown
    assert whistle.feed(parse_tree("q[q[]]")) == (1, 2)


def test_same_tree():
    whistle = Whistle(FiniteQO.antichain(2, ["a", "b"]))
    t = parse_tree("a[b[]]")
    assert whistle.feed(parse_tree("b[a[]]")) is None
    assert whistle.feed(t) is None
    assert whistle.feed(t) == (1, 2)
