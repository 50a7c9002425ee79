"""Exception types shared across the package."""


class FinringError(Exception):
    """Base class for all finring errors."""


class SizeExceeded(FinringError):
    """A construction would exceed the configured element or ideal cap."""


class NotAnIdeal(FinringError):
    """A membership set fails the two-sided ideal closure laws."""


class NotIdempotent(FinringError):
    """Corner construction was asked at a non-idempotent element."""


class NotCommutative(FinringError):
    """An operation defined only for commutative rings got a noncommutative one."""


class PreconditionFailed(FinringError):
    """An operation's stated precondition does not hold for the inputs."""


class NotFound(FinringError):
    """An exhaustive search guaranteed to succeed came up empty (internal fault)."""


class RingSyntaxError(FinringError):
    """Parse failure in the ring-expression grammar; carries the byte offset."""

    def __init__(self, offset: int, expected: tuple[str, ...]):
        self.offset = offset
        self.expected = expected
        alts = " or ".join(expected)
        super().__init__(f"syntax error at offset {offset}: expected {alts}")
