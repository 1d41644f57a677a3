from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from ordwqo.utils.budget import Budget
from ordwqo.utils.error import ParamError
from ordwqo.utils.log import ordwqo_log


@dataclass(frozen=True)
class LabelledTree:
    """A finite ordered tree ``label[children...]``.

    :param label: the name of a carrier element of the label order.
    :type label: str
    :param children: the ordered subtrees.
    :type children: Tuple[LabelledTree, ...]

    Example:
        .. code-block:: python

            from ordwqo.tree.labelled import LabelledTree

            leaf = LabelledTree("q")
            t = LabelledTree("q", (leaf, leaf))
            t.nodes, t.degree  # (3, 2)
    """

    label: str
    children: Tuple["LabelledTree", ...] = ()
    nodes: int = field(default=1, init=False, repr=False, compare=False)
    degree: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        children = tuple(self.children)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "nodes", 1 + sum(c.nodes for c in children))
        object.__setattr__(self, "degree", max([len(children)] + [c.degree for c in children]))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def labels(self) -> Iterator[str]:
        yield self.label
        for child in self.children:
            yield from child.labels()

    def __str__(self):
        from ordwqo.tree.text import print_tree  # pylint: disable=C0415

        return print_tree(self)


def degree(t: LabelledTree) -> int:
    """Branching degree: 0 for a leaf, else the max of the child count and the children's degrees."""
    return t.degree


def enumerate_trees(
    labels,
    max_nodes: int,
    max_degree: Optional[int] = None,
    budget: Optional[Budget] = None,
) -> List[LabelledTree]:
    """All ordered trees with at most ``max_nodes`` nodes and degree at most ``max_degree``.

    :param labels: the label carrier, a sequence of names or any object with a ``carrier``.
    :param max_nodes: the node bound, at least 1.
    :param max_degree: the degree bound, ``None`` for unbounded.
    :param budget: bound on the number of generated trees and forests.
    :return: the trees, ordered by node count and then by generation order.
    """
    if max_nodes < 1:
        raise ParamError(f"max_nodes must be at least 1, got {max_nodes}")
    if max_degree is not None and max_degree < 0:
        raise ParamError(f"max_degree must be non-negative, got {max_degree}")
    carrier = list(getattr(labels, "carrier", labels))
    budget = budget or Budget(None, "enumerate_trees")
    width = max_nodes if max_degree is None else max_degree
    trees: Dict[int, List[LabelledTree]] = {}
    forests: Dict[Tuple[int, int], List[Tuple[LabelledTree, ...]]] = {}

    def forest(n: int, k: int) -> List[Tuple[LabelledTree, ...]]:
        """Forests of exactly ``n`` nodes made of at most ``k`` trees."""
        key = (n, k)
        if key not in forests:
            res: List[Tuple[LabelledTree, ...]] = [()] if n == 0 else []
            if n > 0 and k > 0:
                for first in range(1, n + 1):
                    for t in trees[first]:
                        for rest in forest(n - first, k - 1):
                            res.append((t,) + rest)
            budget.spend(len(res))
            forests[key] = res
        return forests[key]

    for n in range(1, max_nodes + 1):
        trees[n] = [LabelledTree(label, f) for label in carrier for f in forest(n - 1, width)]
        budget.spend(len(trees[n]))
    res = [t for n in range(1, max_nodes + 1) for t in trees[n]]
    ordwqo_log.debug("enumerated %d trees with <= %d nodes", len(res), max_nodes)
    return res
