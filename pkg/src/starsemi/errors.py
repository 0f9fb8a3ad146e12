"""Exception types shared across the library."""


class StarSemiError(Exception):
    """Base class for all library-specific errors."""


class EmptyInput(StarSemiError):
    """A constructor was handed an empty generating set."""


class NotNumerical(StarSemiError):
    """The generators do not span a numerical semigroup (gcd is not 1)."""


class NotClosed(StarSemiError):
    """A claimed gap set whose complement is not closed under addition."""

    def __init__(self, a: int, b: int):
        self.witness = (a, b)
        super().__init__(f"complement not closed under addition: {a} + {b} = {a + b} is a gap")


class NotAnIdeal(StarSemiError):
    """A set of integers that fails the ideal property, with a witness pair."""

    def __init__(self, a: int, s: int):
        self.witness = (a, s)
        super().__init__(f"not an ideal: {a} is a member and {s} a semigroup element, but {a + s} is missing")


class LimitExceeded(StarSemiError):
    """A computation would exceed its configured search budget."""
