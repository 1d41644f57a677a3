from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ordwqo.qo.finite import FiniteQO
from ordwqo.utils.error import ParamError, PreconditionError
from ordwqo.utils.scanner import Scanner


@dataclass
class Colouring:
    """A colouring of the pairs ``(i, j)``, ``i < j < length``.

    :param length: the number of indices.
    :type length: int
    :param colours: the colour of every pair.
    :type colours: Dict[Tuple[int, int], int]
    """

    length: int
    colours: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for i, j in combinations(range(self.length), 2):
            if (i, j) not in self.colours:
                raise ParamError(f"colouring is not total, pair ({i},{j}) has no colour")
        extra = set(self.colours) - set(combinations(range(self.length), 2))
        if extra:
            raise ParamError(f"pairs outside the domain: {sorted(extra)}")

    def __call__(self, i: int, j: int) -> int:
        return self.colours[(i, j)]

    def is_homogeneous(self, indices: Sequence[int]) -> bool:
        return len({self.colours[pair] for pair in combinations(indices, 2)}) <= 1


def colour_bad_product_seq(seq: Sequence[Sequence[str]], Q: FiniteQO, n: int) -> Colouring:
    """Colour ``(i, j)`` with the least component ``k`` where ``seq[i][k] ≰_Q seq[j][k]``.

    :param seq: a bad sequence of ``n``-tuples under the componentwise order.
    :param Q: the component order.
    :param n: the tuple width.
    :raises PreconditionError: when ``seq`` has a good pair, reported as the witness.

    Example:
        .. code-block:: python

            from ordwqo.qo.finite import FiniteQO
            from ordwqo.ramsey.colouring import colour_bad_product_seq

            Q = FiniteQO.antichain(2, ["a", "b"])
            colour_bad_product_seq([("a", "b"), ("b", "a")], Q, 2)(0, 1)  # 0
    """
    if n < 1:
        raise ParamError(f"tuple width must be at least 1, got {n}")
    rows = []
    for entry in seq:
        if len(entry) != n:
            raise ParamError(f"expected {n}-tuples, got {tuple(entry)}")
        rows.append([Q.index(x) for x in entry])
    colours = {}
    for i, j in combinations(range(len(rows)), 2):
        k = next((k for k in range(n) if not Q.le[rows[i][k], rows[j][k]]), None)
        if k is None:
            raise PreconditionError(f"sequence is good at ({i},{j})", witness=(i, j))
        colours[(i, j)] = k
    return Colouring(len(rows), colours)


def homogeneous_subset(c: Colouring, size: int) -> Optional[Tuple[int, ...]]:
    """The first index set of ``size`` elements, in lexicographic order, with all pairs one colour."""
    if size < 2:
        raise ParamError(f"homogeneous sets are searched from size 2, got {size}")
    for indices in combinations(range(c.length), size):
        if c.is_homogeneous(indices):
            return indices
    return None


def homogeneous_subsets(c: Colouring, colour: int) -> Iterator[Tuple[int, ...]]:
    """Every index set of at least two elements whose pairs all have ``colour``."""

    def grow(chosen: List[int], start: int):
        if len(chosen) >= 2:
            yield tuple(chosen)
        for j in range(start, c.length):
            if all(c(i, j) == colour for i in chosen):
                chosen.append(j)
                yield from grow(chosen, j + 1)
                chosen.pop()

    yield from grow([], 0)


def print_colouring(c: Colouring) -> str:
    return " ".join(f"({i},{j}):{k}" for (i, j), k in sorted(c.colours.items()))


def parse_colouring(text: str) -> Colouring:
    """Parse ``(i,j):k`` triples separated by whitespace or commas."""
    scanner = Scanner(text)
    colours = {}
    while scanner.peek() is not None:
        scanner.expect("(")
        i = scanner.integer()
        scanner.expect(",")
        j = scanner.integer()
        scanner.expect(")")
        scanner.expect(":")
        if i >= j:
            raise scanner.error(f"pair ({i},{j}) is not increasing")
        colours[(i, j)] = scanner.integer()
        scanner.accept(",")
    length = 1 + max(j for _, j in colours) if colours else 0
    return Colouring(length, colours)


def parse_tuples(text: str) -> List[Tuple[str, ...]]:
    """Parse comma-separated tuples such as ``(a,b),(b,a)``."""
    scanner = Scanner(text)
    res = []
    while scanner.peek() is not None:
        scanner.expect("(")
        entry = [scanner.name()]
        while scanner.accept(","):
            entry.append(scanner.name())
        scanner.expect(")")
        res.append(tuple(entry))
        scanner.accept(",")
    return res
