"""QO file format: ``{"carrier": [names...], "le": [[p, q], ...], "closure": bool}``."""
import json
from typing import List, Tuple

from ordwqo.qo.finite import FiniteQO
from ordwqo.utils import import_pydantic
from ordwqo.utils.error import ParseError

import_pydantic()

from pydantic import BaseModel, ValidationError  # pylint: disable=C0413


class QOFile(BaseModel):
    carrier: List[str]
    le: List[Tuple[str, str]] = []
    closure: bool = False


def loads_qo(text: str) -> FiniteQO:
    """Parse the JSON text of a quasi-order.

    :raises ParseError: when the text is not a valid QO file.
    :raises ParamError: when the pairs do not form a quasi-order and ``closure`` is off.
    """
    try:
        data = QOFile.parse_raw(text)
    except ValidationError as e:
        raise ParseError(f"invalid QO file: {e}") from e
    return FiniteQO.from_pairs(data.carrier, data.le, closure=data.closure)


def load_qo(path: str) -> FiniteQO:
    with open(path, "r", encoding="utf-8") as f:
        return loads_qo(f.read())


def dumps_qo(Q: FiniteQO) -> str:
    """Serialize with the full relation listed and ``closure`` off."""
    pairs = sorted(Q.pairs(), key=lambda pair: (Q.index(pair[0]), Q.index(pair[1])))
    data = QOFile(carrier=list(Q.carrier), le=pairs, closure=False)
    return json.dumps(data.dict(), separators=(",", ":"))


def dump_qo(Q: FiniteQO, path: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_qo(Q))
