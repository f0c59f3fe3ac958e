"""Exception types for RainbowForge."""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from rainbowforge.models.assignment import RainbowAssignment


class RainbowForgeError(Exception):
    """Base class for all RainbowForge errors."""


class ParameterDomainError(RainbowForgeError):
    """A parameter (n, k, c, t, ...) lies outside the domain an operation accepts."""


class FormatError(RainbowForgeError, ValueError):
    """Malformed graph or assignment text."""

    def __init__(self, message: str, position: str | None = None) -> None:
        self.position = position  # "line 3, column 7" or a field path like "edges.4.1"
        super().__init__(f"{message} (at {position})" if position else message)


class ContractError(RainbowForgeError, ValueError):
    """An input violates the contract of a certified operation."""

    def __init__(self, message: str, violations: list[str] | None = None) -> None:
        self.violations = violations or []
        detail = "; ".join(self.violations[:8])
        if len(self.violations) > 8:
            detail += f"; ... ({len(self.violations)} total)"
        super().__init__(f"{message}: {detail}" if detail else message)


class SearchBudgetExceeded(RainbowForgeError):
    """Branch-and-bound ran out of nodes or time before proving optimality."""

    def __init__(
        self,
        message: str,
        incumbent: "RainbowAssignment | None",
        lower_bound: int,
        nodes: int,
    ) -> None:
        self.incumbent = incumbent
        self.lower_bound = lower_bound
        self.nodes = nodes
        super().__init__(message)

    @property
    def incumbent_weight(self) -> int | None:
        return self.incumbent.weight() if self.incumbent is not None else None


class StateSpaceRefused(RainbowForgeError):
    """The profile DP refuses to start because its state-space estimate is too large."""

    def __init__(self, message: str, estimate: int) -> None:
        self.estimate = estimate
        super().__init__(message)
