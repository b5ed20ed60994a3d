"""Hercules versus the hydra.

A hydra is a positive word on a_1, a_2, ...  Each strike removes the first
letter, after which every remaining a_i with i > 1 becomes a_i a_{i-1}.
Hydra are stored run-length encoded as tuples of ``(index, multiplicity)``
pairs since battles breed long runs of a_1.

Durations of battles against a_k^n and theta^n(a_k) are the hydra functions
H_k(n) and phi_k(n); those are evaluated by their recursions, never by
fighting the battle.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .budget import EvalBudget, resolve
from .freewords import _expand

__all__ = [
    "NotInDomain",
    "BattleResult",
    "to_runs",
    "from_runs",
    "strike",
    "battle",
    "hydra_H",
    "phi",
    "phi_capped",
    "transcript_to_hword",
    "theta_transcript",
]

Runs = tuple  # tuple[tuple[int, int], ...]

# Above these arguments the k = 2 and k = 3 recursions are replaced by their
# closed forms 2^n - 1 and 3 * 2^n - n - 2 (quadratic cost otherwise).
_RECURSION_LIMIT = 4096


class NotInDomain(ValueError):
    """phi_k(n) is undefined: theta^n(a_k) lies in no coset H t^s."""


@dataclass(frozen=True)
class BattleResult:
    duration: int
    transcript: Runs | None = None  # runs of struck indices, i.e. of x-letters

    def hword(self) -> tuple:
        if self.transcript is None:
            raise ValueError("battle was fought without a transcript")
        return from_runs(self.transcript)


def to_runs(word: Iterable[int]) -> Runs:
    runs: list[list[int]] = []
    for x in word:
        if x < 1:
            raise ValueError("hydra are positive words")
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    return tuple((i, c) for i, c in runs)


def from_runs(runs: Iterable[tuple[int, int]]) -> tuple:
    out: list[int] = []
    for i, c in runs:
        out.extend([i] * c)
    return tuple(out)


def _push(runs: list, index: int, count: int) -> None:
    if count <= 0:
        return
    if runs and runs[-1][0] == index:
        runs[-1][1] += count
    else:
        runs.append([index, count])


def _regenerate(runs: Sequence, times: int = 1) -> list:
    """theta^times applied to a run-length encoded positive word."""
    out: list[list[int]] = []
    for i, c in runs:
        if i == 1:
            _push(out, 1, c)
        elif i == 2:
            for _ in range(c):
                _push(out, 2, 1)
                _push(out, 1, times)
        else:
            image = to_runs(_expand(i, times, 1))
            for _ in range(c):
                for j, d in image:
                    _push(out, j, d)
    return out


def strike(w: Runs) -> Runs:
    """One strike: drop the first letter, then regenerate the rest."""
    if not w:
        raise ValueError("the hydra is already defeated")
    (i, c), rest = w[0], list(w[1:])
    if c > 1:
        rest.insert(0, (i, c - 1))
    return tuple((j, d) for j, d in _regenerate(rest))


def battle(w: Runs | Sequence[int], budget: EvalBudget | None = None,
           want_transcript: bool = False) -> BattleResult:
    """Fight the hydra ``w`` to the end and count the strikes.

    ``w`` may be run-length encoded or a flat tuple of positive letters.
    One step of the budget is charged per strike.
    """
    budget = resolve(budget)
    if w and not isinstance(w[0], tuple):
        w = to_runs(w)
    runs = [list(r) for r in w]
    strikes = 0
    transcript: list[list[int]] = []
    while runs:
        i, c = runs[0]
        if i == 1:
            # a whole run of a_1 is struck in one go; the rest sees theta^c
            budget.charge(c, "battle")
            strikes += c
            _push(transcript, 1, c)
            runs = _regenerate(runs[1:], c) if len(runs) > 1 else []
        else:
            budget.charge(1, "battle")
            strikes += 1
            _push(transcript, i, 1)
            if c > 1:
                runs[0][1] -= 1
            else:
                runs.pop(0)
            runs = _regenerate(runs)
        budget.check_cost(len(runs), "hydra size")
    return BattleResult(strikes, tuple((i, c) for i, c in transcript) if want_transcript else None)


def _emit(k: int, m: int, out: list) -> None:
    """Append the transcript of theta^m(a_k), m >= 0.

    theta^m(a_k) = a_k theta^0(a_{k-1}) ... theta^{m-1}(a_{k-1}).  A block is
    defeated before Hercules touches the next one, and every strike applies
    theta to what is still waiting, so after D strikes the j-th block has
    become theta^{j+D}(a_{k-1}).
    """
    out.append(k)
    if k == 1:
        return
    if k == 2:
        out.extend([1] * m)
        return
    done = 1
    for j in range(m):
        n = j + done
        _emit(k - 1, n, out)
        done += phi(k - 1, n, EvalBudget(max_bits=1 << 40, max_steps=1 << 62))


def _transcript_length(k: int, m: int, budget: EvalBudget) -> int:
    return phi(k, m, EvalBudget(budget.max_bits, 1 << 62))


def transcript_to_hword(w: Sequence[int], budget: EvalBudget | None = None) -> tuple:
    """Positive word on the x_i = a_i t equal to w t^{H(w)} in G.

    It is the battle transcript: x_i for each strike on a_i.  Pairing each
    struck letter with one t works for every hydra, not only for a_k^n.  The
    j-th letter of w is theta^D(a_i) by the time it comes to the front, D
    being the number of strikes so far, so the transcript is assembled block
    by block instead of strike by strike.
    """
    budget = resolve(budget)
    if any(x < 1 for x in w):
        raise ValueError("hydra are positive words")
    lengths = []
    done = 0
    for i in w:
        n = _transcript_length(i, done, budget)
        lengths.append((i, done))
        done += n
        budget.check_cost(done, "transcript")
    budget.charge(done, "transcript")
    out: list[int] = []
    for i, n in lengths:
        _emit(i, n, out)
    return tuple(out)


_lock = threading.RLock()
_transcripts: dict[tuple[int, int], tuple] = {}


def theta_transcript(k: int, m: int, budget: EvalBudget | None = None) -> tuple:
    """Battle transcript of theta^m(a_k), m >= 0 (memoized)."""
    budget = resolve(budget)
    with _lock:
        cached = _transcripts.get((k, m))
    if cached is None:
        budget.check_cost(_transcript_length(k, m, budget), "transcript")
        out: list[int] = []
        _emit(k, m, out)
        cached = tuple(out)
        with _lock:
            _transcripts[(k, m)] = cached
    budget.charge(len(cached), "transcript")
    return cached


# --- the hydra functions -----------------------------------------------------

_phi_memo: dict[int, list[tuple[int, int]]] = {}
_h_memo: dict[int, list[tuple[int, int]]] = {}


def _phi3_closed(n: int, budget: EvalBudget) -> int:
    budget.check_bitlen(n + 2, "phi_3")
    return budget.check_value(3 * (1 << n) - n - 2)


def _phi_entry(k: int, n: int, budget: EvalBudget) -> tuple[int, int]:
    """(phi_k(n), cold cost) for n >= 0; nothing is charged."""
    if k == 1:
        return 1, 1
    if k == 2:
        return budget.check_value(n + 1), 1
    if k == 3 and n > _RECURSION_LIMIT:
        return _phi3_closed(n, budget), 1
    if k > 3:
        # phi_k(n) >= phi_3(n) >= 2^n
        budget.check_bitlen(n + 1, f"phi_{k}")
    with _lock:
        table = _phi_memo.setdefault(k, [(1, 1)])
        if n < len(table):
            value, cost = table[n]
            budget.check_value(value)
            budget.check_cost(cost)
            return value, cost
        value, cost = table[-1]
        for j in range(len(table) - 1, n):
            # phi_k(j+1) = phi_k(j) + phi_{k-1}(phi_k(j) + j)
            inner, inner_cost = _phi_entry(k - 1, value + j, budget)
            value = budget.check_value(value + inner, f"phi_{k}")
            cost += 1 + inner_cost
            budget.check_cost(cost, f"phi_{k}")
            table.append((value, cost))
        return value, cost


def phi(k: int, n: int, budget: EvalBudget | None = None) -> int:
    """phi_k(n): the unique s with theta^n(a_k) t^s in H.

    For n >= 0 this is the number of strikes needed against theta^n(a_k).
    phi_1 = 1 and phi_2(n) = n + 1 on all of Z; for k >= 3 only n >= 0 is in
    the domain.
    """
    if k < 1:
        raise ValueError("phi_k needs k >= 1")
    budget = resolve(budget)
    if k == 1:
        return 1
    if k == 2:
        return budget.check_value(n + 1)
    if n < 0:
        raise NotInDomain(f"phi_{k}({n}) is undefined for k >= 3 and n < 0")
    value, cost = _phi_entry(k, n, budget)
    budget.charge(cost)
    return value


def phi_capped(k: int, n: int, cap: int) -> int:
    """min(phi_k(n), cap) for n >= 0, without ever building values above cap.

    The recursion is monotone, so saturating every partial sum at ``cap`` is
    exact below the cap.
    """
    if k == 1:
        return min(1, cap)
    if k == 2:
        return min(n + 1, cap)
    if k == 3:
        if n + 1 > cap.bit_length():
            return cap
        return min(3 * (1 << n) - n - 2, cap)
    value = 1
    for j in range(n):
        if value >= cap:
            return cap
        value += phi_capped(k - 1, value + j, cap)
    return min(value, cap)


def _h_entry(k: int, n: int, budget: EvalBudget) -> tuple[int, int]:
    if k == 1:
        return n, 1
    if k == 2 and n > _RECURSION_LIMIT:
        budget.check_bitlen(n, "H_2")
        return (1 << n) - 1, 1
    # H_k(n) >= 2^n - 1 for k >= 2
    budget.check_bitlen(n, f"H_{k}")
    with _lock:
        table = _h_memo.setdefault(k, [(0, 1)])
        if n < len(table):
            value, cost = table[n]
            budget.check_value(value)
            budget.check_cost(cost)
            return value, cost
        value, cost = table[-1]
        for _ in range(len(table) - 1, n):
            # H_k(j+1) = H_k(j) + phi_k(H_k(j))
            inner, inner_cost = _phi_entry(k, value, budget)
            value = budget.check_value(value + inner, f"H_{k}")
            cost += 1 + inner_cost
            budget.check_cost(cost, f"H_{k}")
            table.append((value, cost))
        return value, cost


def hydra_H(k: int, n: int, budget: EvalBudget | None = None) -> int:
    """H_k(n), the number of strikes needed to defeat a_k^n."""
    if k < 1 or n < 0:
        raise ValueError("H_k(n) is defined for k >= 1, n >= 0")
    budget = resolve(budget)
    value, cost = _h_entry(k, n, budget)
    budget.charge(cost)
    return value
