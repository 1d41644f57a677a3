import pytest

from ordwqo.qo.finite import FiniteQO
from ordwqo.tree.labelled import LabelledTree, enumerate_trees
from ordwqo.tree.text import parse_tree, parse_trees, print_tree
from ordwqo.utils.error import ParseError


def test_print_and_parse():
    t = LabelledTree("a", (LabelledTree("b"), LabelledTree("c", (LabelledTree("a"),))))
    assert print_tree(t) == "a[b[],c[a[]]]"
    assert str(t) == "a[b[],c[a[]]]"
    assert parse_tree("a[ b, c[a] ]") == t
    assert parse_tree("q") == LabelledTree("q")
    assert parse_trees("q[]; q[q[]]") == [LabelledTree("q"), LabelledTree("q", (LabelledTree("q"),))]


@pytest.mark.parametrize("text", ["", "a[", "a[b,]", "[a]", "a[]]", "a b"])
def test_parse_error(text):
    with pytest.raises(ParseError):
        parse_tree(text)


def test_round_trip():
    for t in enumerate_trees(FiniteQO.antichain(2, ["a", "b"]), 4):
        text = print_tree(t)
        assert parse_tree(text) == t
        assert print_tree(parse_tree(text)) == text
