"""Exception types shared across the package."""

from __future__ import annotations


class ParitySpecError(Exception):
    """Base class for all errors raised by this package."""


class DisconnectedGraphError(ParitySpecError):
    pass


class SizeGuardError(ParitySpecError):
    """A construction or search would exceed a configured size cap."""


class NotASpecError(ParitySpecError):
    """An operation that requires a strong parity edge-coloring got something else."""

    def __init__(self, message: str, collision: tuple[int, int] | None = None):
        super().__init__(message)
        self.collision = collision


class HypothesisError(ParitySpecError):
    """Input violates a precondition of the underlying combinatorial statement."""


class BudgetExceeded(ParitySpecError):
    """An exact search ran out of time or nodes.

    ``lower`` and ``upper`` bracket the true optimum; ``upper`` may be None when
    no feasible solution was seen.
    """

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None, witness=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.witness = witness
