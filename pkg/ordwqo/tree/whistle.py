from typing import List, Optional, Tuple

from ordwqo.qo.finite import FiniteQO
from ordwqo.tree.embedding import EmbeddingChecker
from ordwqo.tree.labelled import LabelledTree


class Whistle:
    """Online detector of the first good pair ``t_i ⪯ t_j``, ``i < j``, in a stream of trees.

    The whistle blows on the first fed tree that completes a good pair; the pair
    is the one with the smallest ``j`` and then the smallest ``i``, and it stays
    reported for the rest of the stream.

    :param Q: the label order.
    :type Q: FiniteQO
    :param checker: an embedding checker to share its cache, optional.
    :type checker: EmbeddingChecker

    Example:
        .. code-block:: python

            from ordwqo.qo.finite import FiniteQO
            from ordwqo.tree.text import parse_tree
            from ordwqo.tree.whistle import Whistle

            whistle = Whistle(FiniteQO.singleton("q"))
            whistle.feed(parse_tree("q[]"))      # None
            whistle.feed(parse_tree("q[q[]]"))   # (0, 1)
    """

    def __init__(self, Q: FiniteQO, checker: Optional[EmbeddingChecker] = None):
        self.checker = checker or EmbeddingChecker(Q)
        self.history: List[LabelledTree] = []
        self.pair: Optional[Tuple[int, int]] = None

    @property
    def blown(self) -> bool:
        return self.pair is not None

    def feed(self, t: LabelledTree) -> Optional[Tuple[int, int]]:
        j = len(self.history)
        if self.pair is None:
            for i, earlier in enumerate(self.history):
                if self.checker.embeds(earlier, t):
                    self.pair = (i, j)
                    break
        self.history.append(t)
        return self.pair
