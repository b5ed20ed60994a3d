"""Recursive upper bounds for the membership procedure.

For t^r w in H t^s with w of rank k and length l:

* kappa_bound(k, l, n) bounds |s| when w is a single piece and |r| <= n,
* K_bound(k, l, p, n) bounds |s| for a word of p pieces,
* psi_bound / Psi_bound bound the length of the reduced witness the same way.

The true functions are minima over all such words; these are their
recursive over-approximations, so only ``value <= bound`` is meaningful.

K_bound iterates kappa_bound(k, l, .) p times with l the full length instead
of maximising over all splittings of l into p parts.  Since every bound is
monotone in l this is still an upper bound, and it avoids an exponential
enumeration.
"""

from __future__ import annotations

from functools import lru_cache

from .budget import EvalBudget, resolve
from .hydra import phi

__all__ = ["kappa_bound", "K_bound", "psi_bound", "Psi_bound", "ackermann_constants"]


def _check(k: int, *args: int) -> None:
    if k < 1 or any(a < 0 for a in args):
        raise ValueError("bounds need k >= 1 and nonnegative arguments")


def kappa_bound(k: int, l: int, n: int, budget: EvalBudget | None = None) -> int:
    _check(k, l, n)
    budget = resolve(budget)
    if k == 1:
        return n + 1
    budget.charge(1, "kappa")
    return budget.check_value(2 * K_bound(k - 1, l, l, 2 * phi(k, n, budget), budget))


def K_bound(k: int, l: int, p: int, n: int, budget: EvalBudget | None = None) -> int:
    _check(k, l, p, n)
    budget = resolve(budget)
    if k == 1:
        return n + p
    for _ in range(p):
        n = kappa_bound(k, l, n, budget)
    return n


def psi_bound(k: int, l: int, n: int, budget: EvalBudget | None = None) -> int:
    _check(k, l, n)
    budget = resolve(budget)
    if k == 1:
        return 1
    budget.charge(1, "psi")
    m = 2 * phi(k, n, budget)
    value = 3 * K_bound(k - 1, l, l, m, budget) + Psi_bound(k - 1, l, l, m, budget)
    return budget.check_value(value)


def Psi_bound(k: int, l: int, p: int, n: int, budget: EvalBudget | None = None) -> int:
    _check(k, l, p, n)
    budget = resolve(budget)
    if p == 0:
        return 0
    return budget.check_value(p * psi_bound(k, l, K_bound(k, l, p, n, budget), budget))


@lru_cache(maxsize=None)
def ackermann_constants(k: int) -> tuple[int, int, int]:
    """(D_k, E_k, F_k): kappa_bound(k, l, n) <= A_{k-1}(D_k n + D_k l) and
    psi_bound(k, l, n) <= A_{k-1}(E_k n + E_k l) for l >= 1."""
    if k < 1:
        raise ValueError("k >= 1")
    if k == 1:
        return 1, 1, 1
    d, _, f = ackermann_constants(k - 1)
    dk = max(2 * (d + 1) + 4 * d * k, 1)
    ek = 3 * (2 * k + 1) * d + (2 * k + 1) * f + 4
    return dk, ek, (dk + 1) * ek
