"""Tree DSL: ``x`` and ``x[]`` are leaves labelled ``x``, ``x[t1,t2,...]`` is an inner node.
Whitespace is insignificant; printing always writes leaves as ``x[]`` without spaces."""
from typing import List

from ordwqo.tree.labelled import LabelledTree
from ordwqo.utils.scanner import Scanner


def print_tree(t: LabelledTree) -> str:
    return f"{t.label}[{','.join(print_tree(c) for c in t.children)}]"


def parse_tree(text: str) -> LabelledTree:
    """Parse one tree.

    :raises ParseError: on malformed text.
    """
    scanner = Scanner(text)
    res = _parse(scanner)
    scanner.done()
    return res


def parse_trees(text: str) -> List[LabelledTree]:
    """Parse a ``;``-separated list of trees."""
    scanner = Scanner(text)
    res = [_parse(scanner)]
    while scanner.accept(";"):
        res.append(_parse(scanner))
    scanner.done()
    return res


def _parse(scanner: Scanner) -> LabelledTree:
    label = scanner.name()
    children = []
    if scanner.accept("["):
        if not scanner.accept("]"):
            children.append(_parse(scanner))
            while scanner.accept(","):
                children.append(_parse(scanner))
            scanner.expect("]")
    return LabelledTree(label, tuple(children))
