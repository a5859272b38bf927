"""Exception hierarchy shared by every nsring module."""


class SemigroupError(ValueError):
    """Base class for all invalid-input and inapplicable-method failures."""


class GcdNotOne(SemigroupError):
    def __init__(self, gcd: int):
        self.gcd = gcd
        super().__init__(f"gcd is {gcd}, not a numerical semigroup")


class Overflow(SemigroupError):
    """A generator or derived quantity exceeds the configured magnitude cap."""


class TooLarge(SemigroupError):
    """A table-based operation would exceed the configured Frobenius cap."""


class NotAnElement(SemigroupError):
    pass


class NotGorenstein(SemigroupError):
    pass


class NotCiEdim3(SemigroupError):
    pass


class WrongEdim(SemigroupError):
    pass


class InvalidStructure(SemigroupError):
    pass


class InvalidGluing(SemigroupError):
    pass


class InvalidFamily(SemigroupError):
    pass
