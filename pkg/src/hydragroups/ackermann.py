"""Ackermann's functions A_k and their iterates, evaluated exactly under a budget.

The hierarchy is the one fixed by

    A_0(n) = n + 2,
    A_1(0) = 0,  A_k(0) = 1 for k >= 2,
    A_{k+1}(n + 1) = A_k(A_{k+1}(n)),

so that A_1(n) = 2n, A_2(n) = 2**n and A_3(n) is a tower of n twos.
"""

from __future__ import annotations

import threading

from .budget import EvalBudget, resolve

__all__ = ["ack", "ack_iter"]

_lock = threading.RLock()
# k -> list of (value, cost) for A_k(0), A_k(1), ... ; only used for k >= 4.
_memo: dict[int, list[tuple[int, int]]] = {}


def _tower(n: int, budget: EvalBudget) -> tuple[int, int]:
    value = 1
    for _ in range(n):
        # 2**value has value + 1 bits; refuse before allocating it
        budget.check_bitlen(value + 1, "A_3 tower")
        value = 1 << value
    return value, n


def _entry(k: int, n: int, budget: EvalBudget) -> tuple[int, int]:
    """Return (A_k(n), cost) where cost is the number of recursion steps a cold
    evaluation performs.  Nothing is charged here; callers charge ``cost``."""
    if k == 0:
        return budget.check_value(n + 2), 1
    if k == 1:
        return budget.check_value(2 * n), 1
    if k == 2:
        budget.check_bitlen(n + 1, "A_2")
        return 1 << n, 1
    if k == 3:
        return _tower(n, budget)
    with _lock:
        table = _memo.setdefault(k, [(1, 1)])
        if n < len(table):
            value, cost = table[n]
            budget.check_value(value)
            budget.check_cost(cost)
            return value, cost
        value, cost = table[-1]
        budget.check_value(value)
        for _ in range(len(table), n + 1):
            inner, inner_cost = _entry(k - 1, value, budget)
            value, cost = inner, cost + 1 + inner_cost
            budget.check_cost(cost, f"A_{k}")
            table.append((value, cost))
        return value, cost


def ack(k: int, n: int, budget: EvalBudget | None = None) -> int:
    """Exact value of A_k(n).

    Raises BudgetExceeded when any intermediate value would exceed
    ``budget.max_bits`` or the recursion would exceed ``budget.max_steps``.
    """
    if k < 0 or n < 0:
        raise ValueError("ack is defined for k, n >= 0")
    budget = resolve(budget)
    value, cost = _entry(k, n, budget)
    budget.charge(cost)
    return value


def ack_iter(k: int, l: int, n: int, budget: EvalBudget | None = None) -> int:
    """A_k applied l times to n."""
    if k < 0 or l < 0 or n < 0:
        raise ValueError("ack_iter is defined for k, l, n >= 0")
    budget = resolve(budget)
    for _ in range(l):
        n = ack(k, n, budget)
    return n
