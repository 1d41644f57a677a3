from enum import IntEnum


class Ordering(IntEnum):
    """Result of a three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1

    def reverse(self) -> "Ordering":
        return Ordering(-int(self))

    @classmethod
    def of(cls, left, right) -> "Ordering":
        """Compare two natively ordered values, e.g. ints or carrier indices."""
        if left < right:
            return cls.LESS
        if left == right:
            return cls.EQUAL
        return cls.GREATER

    def __str__(self):
        return self.name.lower()
