"""Exception types shared across the package."""


class StructureError(Exception):
    """Malformed input tables: wrong shape, out-of-range index, broken group."""


class InvariantViolation(Exception):
    """A theory-guaranteed invariant failed; carries a counterexample certificate."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate if certificate is not None else {}
