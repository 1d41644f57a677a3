from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ordwqo.ordering import Ordering
from ordwqo.ordinal.cnf import OrdinalCNF, compare_cnf, of_int
from ordwqo.qo.finite import FiniteQO
from ordwqo.utils.budget import Budget
from ordwqo.utils.error import NotFoundError
from ordwqo.utils.log import ordwqo_log

Node = Tuple[int, ...]


def good_pair(seq: Sequence[str], Q: FiniteQO) -> Optional[Tuple[int, int]]:
    """The lexicographically least ``(i, j)``, ``i < j``, with ``seq[i] ≤_Q seq[j]``,
    or ``None`` when the sequence is bad."""
    idx = [Q.index(x) for x in seq]
    for i, p in enumerate(idx):
        for j in range(i + 1, len(idx)):
            if Q.le[p, idx[j]]:
                return i, j
    return None


def _extensions(Q: FiniteQO, node: Node) -> Iterator[int]:
    """Carrier indices that keep ``node`` bad when appended, in carrier order."""
    for x in range(Q.size):
        if not any(Q.le[y, x] for y in node):
            yield x


class BadSeqTree:
    """The finite tree of bad sequences of ``Q`` ordered by end-extension.

    Nodes are tuples of carrier indices, the root is the empty sequence and the
    parent of a node is its immediate prefix. ``nodes`` lists them in preorder,
    children in carrier order.

    :param Q: the quasi-order.
    :type Q: FiniteQO
    :param budget: bound on the number of nodes.
    :type budget: Budget

    Example:
        .. code-block:: python

            from ordwqo.qo.badseq import BadSeqTree
            from ordwqo.qo.finite import FiniteQO

            T = BadSeqTree(FiniteQO.antichain(2, ["a", "b"]))
            [T.names(node) for node in T.nodes]  # [[], ['a'], ['a', 'b'], ['b'], ['b', 'a']]
    """

    def __init__(self, Q: FiniteQO, budget: Optional[Budget] = None):
        self.Q = Q
        budget = budget or Budget(None, "bad-sequence tree")
        self.nodes: List[Node] = []
        self._children: Dict[Node, List[Node]] = {}
        stack: List[Node] = [()]
        while stack:
            node = stack.pop()
            budget.spend()
            self.nodes.append(node)
            children = [node + (x,) for x in _extensions(Q, node)]
            self._children[node] = children
            stack.extend(reversed(children))
        ordwqo_log.debug("bad-sequence tree of %d elements has %d nodes", Q.size, len(self.nodes))

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, node) -> bool:
        return node in self._children

    def __iter__(self) -> Iterator[Node]:
        return iter(self.nodes)

    def children(self, node: Node) -> List[Node]:
        try:
            return self._children[node]
        except KeyError:
            raise NotFoundError("node", node) from None

    @staticmethod
    def parent(node: Node) -> Optional[Node]:
        return node[:-1] if node else None

    def names(self, node: Node) -> List[str]:
        return [self.Q.carrier[x] for x in node]

    def edges(self) -> Iterator[Tuple[Node, Node]]:
        """``(parent, child)`` pairs in preorder."""
        for node in self.nodes:
            for child in self._children[node]:
                yield node, child


def longest_bad(Q: FiniteQO, budget: Optional[Budget] = None) -> Tuple[int, List[str]]:
    """Length of a longest bad sequence of ``Q`` with a witness.

    The depth-first search tries candidates from the last carrier element down and
    keeps the first longest sequence it meets.

    :param Q: the quasi-order.
    :param budget: bound on the number of visited nodes.
    :return: ``(length, witness)``, the witness as element names.
    """
    budget = budget or Budget(None, "longest_bad")
    best: List[int] = []
    path: List[int] = []

    def visit():
        nonlocal best
        budget.spend()
        if len(path) > len(best):
            best = list(path)
        if len(best) == Q.size:
            return
        for x in reversed(list(_extensions(Q, path))):
            path.append(x)
            visit()
            path.pop()
            if len(best) == Q.size:
                return

    visit()
    ordwqo_log.debug("longest bad sequence has length %d after %d nodes", len(best), budget.used)
    return len(best), [Q.carrier[x] for x in best]


def kb_compare(s: Node, t: Node) -> Ordering:
    """Kleene–Brouwer order: a proper extension comes first, otherwise the first
    differing entry decides by carrier index."""
    for x, y in zip(s, t):
        if x != y:
            return Ordering.of(x, y)
    return Ordering.of(len(t), len(s))


def kb_linearize(T: BadSeqTree) -> List[Node]:
    """The nodes of ``T`` listed increasingly in the Kleene–Brouwer order."""
    return sorted(T.nodes, key=cmp_to_key(kb_compare))


@dataclass(frozen=True)
class ReificationCheck:
    """Outcome of :func:`check_reification`; ``edge`` is the first violating ``(parent, child)``."""

    ok: bool
    edge: Optional[Tuple[Node, Node]] = None

    def __bool__(self):
        return self.ok


def check_reification(
    T: BadSeqTree,
    f: Mapping[Node, object],
    compare: Callable[[object, object], Ordering] = compare_cnf,
    strict: bool = False,
) -> ReificationCheck:
    """Check that ``f`` is antitone along end-extension: ``f(child) ≤ f(parent)``.

    :param T: the bad-sequence tree.
    :param f: the map, total on the nodes of ``T``.
    :param compare: three-way comparison of the values, :func:`compare_cnf` by default.
     Pass ``lambda a, b: compare_g(a, b, X)`` for G_ω(X) values.
    :param strict: require ``f(child) < f(parent)`` instead.
    :return: a :class:`ReificationCheck`.
    """
    for node in T.nodes:
        if node not in f:
            raise NotFoundError("node", node)
    for parent, child in T.edges():
        res = compare(f[child], f[parent])
        if res == Ordering.GREATER or (strict and res == Ordering.EQUAL):
            return ReificationCheck(False, (parent, child))
    return ReificationCheck(True)


def kb_reification(T: BadSeqTree) -> Dict[Node, OrdinalCNF]:
    """Send every node to its rank in the Kleene–Brouwer order, a strict reification."""
    return {node: of_int(rank) for rank, node in enumerate(kb_linearize(T))}


def maximal_order_type(Q: FiniteQO, budget: Optional[Budget] = None) -> OrdinalCNF:
    """The maximal order type of a finite quasi-order, the length of its longest bad sequence."""
    return of_int(longest_bad(Q, budget)[0])
