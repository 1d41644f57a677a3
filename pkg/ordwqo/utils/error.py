class OrdWqoError(Exception):
    """ordwqo base error"""


class ParamError(OrdWqoError):
    """Raise when receiving an invalid param."""


class NotFoundError(OrdWqoError):
    """Raise when looking up an unknown element, suite or node."""
    def __init__(self, kind, name):
        super().__init__(f"Unknown {kind}: {name}")
        self.kind = kind
        self.name = name


class IllFormedTermError(OrdWqoError):
    """Raise when a term is rejected by the well-formedness check."""
    def __init__(self, path, reason):
        super().__init__(f"ill-formed term at {path}: {reason}")
        self.path = path
        self.reason = reason


class PreconditionError(OrdWqoError):
    """Raise when a structural precondition fails; ``witness`` holds the offending data."""
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(OrdWqoError):
    """Raise when a textual or JSON input cannot be parsed."""
    text = ""
    pos = None

    def __init__(self, message, text="", pos=None):
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}: {text!r}" if text else f"{message}{where}")
        self.text = text
        self.pos = pos


class BudgetExceededError(OrdWqoError):
    """Raise when an explicit resource budget is exhausted."""
    def __init__(self, what, limit):
        super().__init__(f"{what} exceeded its budget of {limit}")
        self.what = what
        self.limit = limit


class TerminationError(OrdWqoError):
    """Raise when a recursive comparison exceeds its structural depth bound."""


def wrap_error(e: Exception, base: type = OrdWqoError) -> Exception:
    """Add the type `base` to exception `e` while ensuring that the original type is not changed

    Example:
        .. code-block:: python

            from pydantic import ValidationError

            from ordwqo.utils.error import wrap_error, ParseError


            def load(text):
                try:
                    return QOFile.parse_raw(text)
                except ValidationError as e:
                    raise wrap_error(e, ParseError)


            try:
                load("{}")
            except ParseError as e:
                print(e)
    """
    e.__class__ = type(e.__class__.__name__, (base, e.__class__), {})
    return e
