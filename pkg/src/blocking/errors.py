"""Exceptions raised by the blocking strategy and its certificates."""


class BlockingError(Exception):
    """Base class for blocking-strategy errors."""


class BetaTooLarge(BlockingError):
    """The constants ladder needs beta < 1/12."""

    def __init__(self, beta):
        self.beta = beta
        super().__init__(f"blocking strategy requires 0 < beta < 1/12, got {beta}")


class UnknownBob(BlockingError):
    """A Bob kind the command line does not know."""
