from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ordwqo.ordering import Ordering
from ordwqo.utils.error import NotFoundError, ParamError


class BaseOrder:
    """A finite strict total order ``(X, <_X)`` given by the order of its carrier.

    :param carrier: distinct element names, listed from the least to the greatest.
    :type carrier: Sequence[str]

    Example:
        .. code-block:: python

            from ordwqo.theta.term import BaseOrder

            X = BaseOrder.chain(3)  # carrier "0" < "1" < "2"
            X.compare("0", "2")     # Ordering.LESS
    """

    def __init__(self, carrier: Sequence[str]):
        self.carrier: Tuple[str, ...] = tuple(str(x) for x in carrier)
        self._index: Dict[str, int] = {x: i for i, x in enumerate(self.carrier)}
        if len(self._index) != len(self.carrier):
            raise ParamError(f"carrier elements must be distinct, got {list(self.carrier)}")

    @classmethod
    def chain(cls, n: int) -> "BaseOrder":
        if n < 0:
            raise ParamError(f"chain length must be non-negative, got {n}")
        return cls([str(i) for i in range(n)])

    @classmethod
    def from_pairs(cls, carrier: Sequence[str], less: Iterable[Tuple[str, str]]) -> "BaseOrder":
        """Build the order from an explicit strict relation, checking it is a strict total order."""
        carrier = [str(x) for x in carrier]
        known = set(carrier)
        if len(known) != len(carrier):
            raise ParamError(f"carrier elements must be distinct, got {carrier}")
        rel = set()
        for x, y in less:
            for z in (x, y):
                if z not in known:
                    raise NotFoundError("element", z)
            rel.add((x, y))
        for x in carrier:
            if (x, x) in rel:
                raise ParamError(f"relation is not irreflexive at {x}")
            for y in carrier:
                if x != y and ((x, y) in rel) == ((y, x) in rel):
                    raise ParamError(f"relation is not a strict total order on {x}, {y}")
                for z in carrier:
                    if (x, y) in rel and (y, z) in rel and (x, z) not in rel:
                        raise ParamError(f"relation is not transitive on {x}, {y}, {z}")
        below = {x: sum(1 for y in carrier if (y, x) in rel) for x in carrier}
        return cls(sorted(carrier, key=below.__getitem__))

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise NotFoundError("element", x) from None

    def compare(self, x: str, y: str) -> Ordering:
        return Ordering.of(self.index(x), self.index(y))

    def __contains__(self, x) -> bool:
        return x in self._index

    def __len__(self) -> int:
        return len(self.carrier)

    def __iter__(self) -> Iterator[str]:
        return iter(self.carrier)

    def __repr__(self):
        return f"BaseOrder({list(self.carrier)!r})"


@dataclass(frozen=True)
class Zero:
    size: int = field(default=1, init=False, repr=False, compare=False)


@dataclass(frozen=True)
class Const:
    """The constant ``c_x``."""

    x: str
    size: int = field(default=1, init=False, repr=False, compare=False)


@dataclass(frozen=True)
class Theta:
    """``ϑ(Ω^ω × c_head + Ω^d_1 × a_1 + … + Ω^d_k × a_k)``.

    ``tail`` holds the ``(degree, coefficient)`` pairs, highest degree first.
    """

    head: str
    tail: Tuple[Tuple[int, "GTerm"], ...] = ()
    size: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        tail = tuple(tuple(entry) for entry in self.tail)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "size", 2 + sum(1 + coeff.size for _, coeff in tail))

    @property
    def coefficients(self) -> Tuple["GTerm", ...]:
        return tuple(coeff for _, coeff in self.tail)


@dataclass(frozen=True)
class Sum:
    """A sum of at least two ϑ-terms, non-increasing from left to right."""

    summands: Tuple[Theta, ...]
    size: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        summands = tuple(self.summands)
        object.__setattr__(self, "summands", summands)
        object.__setattr__(self, "size", sum(s.size for s in summands))


GTerm = Union[Zero, Const, Theta, Sum]

ZERO_TERM = Zero()


@dataclass(frozen=True)
class Diagnosis:
    """Outcome of :func:`well_formed`; falsy when the term is rejected."""

    ok: bool
    path: str = ""
    reason: str = ""

    def __bool__(self):
        return self.ok


_OK = Diagnosis(True)


def well_formed(t, X: BaseOrder, path: str = "root") -> Diagnosis:
    """Check the formation rules of G_ω(X) recursively.

    :param t: the candidate term.
    :param X: the base order.
    :param path: the name of ``t`` in the diagnostic path.
    :return: a :class:`Diagnosis`, with the path of the first violation when it fails.

    Example:
        .. code-block:: python

            from ordwqo.theta.term import BaseOrder, Theta, ZERO_TERM, well_formed

            res = well_formed(Theta("0", ((0, ZERO_TERM),)), BaseOrder.chain(1))
            res.path  # 'root.tail[0].coeff'
    """
    from ordwqo.theta.compare import compare_g  # pylint: disable=C0415

    if isinstance(t, Zero):
        return _OK
    if isinstance(t, Const):
        if t.x not in X:
            return Diagnosis(False, path, f"unknown element {t.x!r}")
        return _OK
    if isinstance(t, Theta):
        if t.head not in X:
            return Diagnosis(False, f"{path}.head", f"unknown element {t.head!r}")
        prev: Optional[int] = None
        for i, entry in enumerate(t.tail):
            where = f"{path}.tail[{i}]"
            if len(entry) != 2:
                return Diagnosis(False, where, "tail entries are (degree, coefficient) pairs")
            degree, coeff = entry
            if isinstance(degree, bool) or not isinstance(degree, int) or degree < 0:
                return Diagnosis(False, f"{where}.degree", f"degree must be a natural number, got {degree!r}")
            if prev is not None and degree >= prev:
                return Diagnosis(False, f"{where}.degree", "degrees must be strictly decreasing")
            prev = degree
            if isinstance(coeff, Zero):
                return Diagnosis(False, f"{where}.coeff", "coefficients must be non-zero")
            res = well_formed(coeff, X, f"{where}.coeff")
            if not res:
                return res
        return _OK
    if isinstance(t, Sum):
        if len(t.summands) < 2:
            return Diagnosis(False, path, "a sum needs at least two summands")
        for i, summand in enumerate(t.summands):
            where = f"{path}.summands[{i}]"
            if not isinstance(summand, Theta):
                return Diagnosis(False, where, "summands must start with a theta")
            res = well_formed(summand, X, where)
            if not res:
                return res
        for i in range(1, len(t.summands)):
            if compare_g(t.summands[i - 1], t.summands[i], X) == Ordering.LESS:
                return Diagnosis(False, f"{path}.summands[{i}]", "summands must be non-increasing")
        return _OK
    return Diagnosis(False, path, f"not a term: {t!r}")


def make_sum(summands: Iterable[GTerm], X: BaseOrder) -> GTerm:
    """Canonical sum of ϑ-terms: nested sums are flattened, zeros dropped, the
    summands sorted non-increasingly, and a single summand returned as is."""
    from ordwqo.theta.compare import g_key  # pylint: disable=C0415

    flat: List[Theta] = []
    for s in summands:
        if isinstance(s, Zero):
            continue
        if isinstance(s, Sum):
            flat.extend(s.summands)
        elif isinstance(s, Theta):
            flat.append(s)
        else:
            raise ParamError(f"only theta terms can be summed, got {s!r}")
    if not flat:
        return ZERO_TERM
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(sorted(flat, key=g_key(X), reverse=True)))


def gamma_omega_term(x: str, X: BaseOrder) -> Theta:
    """The image ``ϑ(Ω^ω × c_x)`` of ``x`` under γ_ω."""
    X.index(x)
    return Theta(x)
