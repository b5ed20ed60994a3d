"""Evaluation budgets.

Most quantities in this package grow like Ackermann's functions, so every
evaluator takes an :class:`EvalBudget` and raises :class:`BudgetExceeded`
instead of attempting to allocate a tower of exponentials.
"""

from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_MAX_BITS = 1_000_000
DEFAULT_MAX_STEPS = 10_000_000


class BudgetExceeded(Exception):
    """Raised when a computation would exceed one of the caps of its budget."""

    def __init__(self, cap: str, limit: int, detail: str = ""):
        self.cap = cap
        self.limit = limit
        self.detail = detail
        msg = f"{cap} budget of {limit} exceeded"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


@dataclass
class EvalBudget:
    """Caps on integer size (in bits) and on work (in steps).

    A budget is a meter: every call sharing the same instance draws on the
    same step allowance.  Use :meth:`fresh` to get an unused copy.
    """

    max_bits: int = DEFAULT_MAX_BITS
    max_steps: int = DEFAULT_MAX_STEPS
    steps: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.max_bits < 1 or self.max_steps < 1:
            raise ValueError("budget caps must be >= 1")

    def fresh(self) -> "EvalBudget":
        return EvalBudget(self.max_bits, self.max_steps)

    @property
    def remaining(self) -> int:
        return self.max_steps - self.steps

    def charge(self, n: int = 1, detail: str = "") -> None:
        self.steps += n
        if self.steps > self.max_steps:
            raise BudgetExceeded("steps", self.max_steps, detail)

    def check_cost(self, cost: int, detail: str = "") -> None:
        """Fail without charging if ``cost`` more steps would not fit."""
        if cost > self.max_steps - self.steps:
            raise BudgetExceeded("steps", self.max_steps, detail)

    def check_bitlen(self, nbits: int, detail: str = "") -> None:
        if nbits > self.max_bits:
            raise BudgetExceeded("bits", self.max_bits, detail)

    def check_value(self, value: int, detail: str = "") -> int:
        self.check_bitlen(abs(value).bit_length(), detail)
        return value


def resolve(budget: EvalBudget | None) -> EvalBudget:
    return EvalBudget() if budget is None else budget
