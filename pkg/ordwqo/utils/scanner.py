import re
from typing import List, Optional, Tuple

from ordwqo.utils.error import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class Scanner:
    """Whitespace-insensitive token stream shared by the text grammars.

    Tokens are integers, identifiers (``[A-Za-z_][A-Za-z0-9_]*``) or single
    punctuation characters; each token remembers its offset for error messages.

    :param text: the input text.
    :type text: str
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        for match in _TOKEN.finditer(text):
            number, name, punct = match.groups()
            if number is not None:
                self.tokens.append(("int", number, match.start(1)))
            elif name is not None:
                self.tokens.append(("name", name, match.start(2)))
            elif punct is not None and not punct.isspace():
                self.tokens.append(("punct", punct, match.start(3)))
        self.index = 0

    def peek(self, offset: int = 0) -> Optional[Tuple[str, str, int]]:
        pos = self.index + offset
        return self.tokens[pos] if pos < len(self.tokens) else None

    def at(self, value: str, offset: int = 0) -> bool:
        token = self.peek(offset)
        return token is not None and token[1] == value

    def position(self) -> int:
        token = self.peek()
        return token[2] if token else len(self.text)

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.position())

    def next(self) -> Tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise self.error("unexpected end of input")
        self.index += 1
        return token

    def expect(self, value: str):
        if not self.at(value):
            raise self.error(f"expected {value!r}")
        self.index += 1

    def accept(self, value: str) -> bool:
        if self.at(value):
            self.index += 1
            return True
        return False

    def integer(self) -> int:
        token = self.peek()
        if token is None or token[0] != "int":
            raise self.error("expected an integer")
        self.index += 1
        return int(token[1])

    def name(self) -> str:
        token = self.peek()
        if token is None or token[0] not in ("name", "int"):
            raise self.error("expected a name")
        self.index += 1
        return token[1]

    def done(self):
        if self.peek() is not None:
            raise self.error("unexpected trailing input")
