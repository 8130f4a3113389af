"""Exception types raised across the package."""


class SemigroupError(ValueError):
    pass


class OutOfRangeEntry(SemigroupError):
    def __init__(self, x, y, value, order):
        self.x, self.y, self.value = x, y, value
        super().__init__(f"table[{x}][{y}] = {value!r} is not an element id in 0..{order - 1}")


class NotAssociative(SemigroupError):
    def __init__(self, x, y, z, left, right):
        self.triple = (x, y, z)
        super().__init__(
            f"associativity fails at ({x}, {y}, {z}): ({x}*{y})*{z} = {left} but {x}*({y}*{z}) = {right}"
        )


class MalformedTable(SemigroupError):
    pass


class EmptyGeneratorSet(SemigroupError):
    pass


class NotClosed(SemigroupError):
    pass


class NotIdempotent(SemigroupError):
    pass


class InvalidParameters(SemigroupError):
    pass


class ConstructSyntaxError(SemigroupError):
    pass


class SourceMismatch(ValueError):
    pass


class UnknownFormat(ValueError):
    pass


class TooLargeForExhaustive(ValueError):
    def __init__(self, order, bound):
        self.order, self.bound = order, bound
        super().__init__(f"exhaustive subsemigroup search needs order <= {bound}, got {order}")


class OrderTooLarge(ValueError):
    pass


class InconsistentFormulations(AssertionError):
    """Two formulations that must agree returned different answers."""
