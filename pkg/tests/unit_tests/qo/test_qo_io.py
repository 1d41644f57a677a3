import json

import pytest

from ordwqo.qo.catalogue import catalogue
from ordwqo.qo.finite import FiniteQO
from ordwqo.qo.io import dump_qo, dumps_qo, load_qo, loads_qo
from ordwqo.utils.error import NotFoundError, ParamError, ParseError


def test_loads():
    Q = loads_qo('{"carrier": ["a", "b"], "le": [["a", "b"]], "closure": true}')
    assert Q == FiniteQO.chain(2, ["a", "b"])
    assert loads_qo('{"carrier": ["q"]}') == FiniteQO.singleton("q")
    assert loads_qo('{"carrier": ["a", "b"], "le": [["a", "b"]]}') == FiniteQO.chain(2, ["a", "b"])


def test_dumps():
    text = dumps_qo(FiniteQO.chain(2, ["a", "b"]))
    assert json.loads(text) == {"carrier": ["a", "b"], "le": [["a", "a"], ["a", "b"], ["b", "b"]], "closure": False}


def test_errors():
    with pytest.raises(ParseError):
        loads_qo("{not json")
    with pytest.raises(ParseError):
        loads_qo('{"le": []}')
    with pytest.raises(ParseError):
        loads_qo('{"carrier": ["a"], "le": [["a"]]}')
    with pytest.raises(ParamError):
        loads_qo('{"carrier": ["a", "b", "c"], "le": [["a", "b"], ["b", "c"]]}')
    with pytest.raises(NotFoundError):
        loads_qo('{"carrier": ["a"], "le": [["a", "z"]], "closure": true}')


def test_files(tmp_path):
    path = str(tmp_path / "q.json")
    for Q in catalogue(3):
        dump_qo(Q, path)
        assert load_qo(path) == Q
        assert dumps_qo(load_qo(path)) == dumps_qo(Q)
