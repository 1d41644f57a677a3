__all__ = ["import_ruamel", "import_pydantic"]

import importlib.util

from ordwqo.utils.error import OrdWqoError


def _check_library(libname: str, package: str = None):
    try:
        is_avail = importlib.util.find_spec(libname) is not None
    except ModuleNotFoundError:
        is_avail = False
    if not is_avail:
        raise OrdWqoError(
            f"No module named {libname}, please install it with `pip install {package or libname}`"
        )
    return is_avail


def import_ruamel():
    _check_library("ruamel.yaml", package="ruamel.yaml")


def import_pydantic():
    _check_library("pydantic")
