"""Exception types shared across the package.

The CLI maps these onto exit codes: input errors exit 2, cap violations
exit 3 and theorem discrepancies exit 1.
"""


class NZCError(Exception):
    """Base class for every error raised by nzcgraph."""


class NotPrimePower(NZCError, ValueError):
    pass


class CapExceeded(NZCError):
    """An instance is larger than a configured size cap."""

    def __init__(self, cap: str, limit: int, value: int):
        self.cap = cap
        self.limit = limit
        self.value = value
        super().__init__(f"{cap} cap exceeded: {value} > {limit}")


class DimensionCap(CapExceeded):
    pass


class ZeroInverse(NZCError, ZeroDivisionError):
    pass


class NullVector(NZCError, ValueError):
    pass


class SingularBasis(NZCError, ValueError):
    pass


class BadSupportSize(NZCError, ValueError):
    pass


class FieldMismatch(NZCError, ValueError):
    pass


class TheoremDiscrepancy(NZCError):
    """A computed value disagrees with the closed-form claim it is checked against."""

    def __init__(self, check: str, witness, message: str = ""):
        self.check = check
        self.witness = witness
        super().__init__(f"{check}: {message or 'discrepancy'} (witness: {witness!r})")
