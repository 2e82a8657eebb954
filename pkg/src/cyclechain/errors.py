"""Exception types shared across the package."""


class CycleChainError(Exception):
    """Base class for all package-specific errors."""


class CapacityExceeded(CycleChainError):
    """A ground set or intermediate object grew past a hard capacity limit."""


class InvalidLength(CycleChainError):
    """Cycle length list or forest size violates the family constraints."""


class BadAttachment(CycleChainError):
    """A forest edge names an attachment vertex that does not exist."""


class IndexOutOfRange(CycleChainError):
    """A cycle index pair (i, k) falls outside 1 <= i <= i+k <= r."""


class SearchSpaceTooLarge(CycleChainError):
    """A brute-force search would exceed its configured cap."""


class EmptyIdeal(CycleChainError):
    """An operation that needs at least one generator got none."""


class CertificateFails(CycleChainError):
    """A colon step in a quasi-linear quotient check had minimum degree != 1.

    step is the 1-based position in the ordering whose colon failed,
    mindeg the minimum generator degree actually found there.
    """

    def __init__(self, step: int, mindeg: int, message: str | None = None):
        self.step = step
        self.mindeg = mindeg
        super().__init__(
            message
            or f"colon at ordering step {step} has minimum degree {mindeg}, expected 1"
        )
