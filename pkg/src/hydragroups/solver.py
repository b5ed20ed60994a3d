"""Deciding t^r w in H t^s, with witnesses.

Write Lambda for the union of the cosets H t^s.  Given r and a reduced word
w, :func:`solve` decides whether t^r w lies in Lambda; if it does, it returns
the (unique) s together with an H-word sigma such that t^r w = sigma t^s.

The word is cut into pieces of rank k = rank(w).  Passing t^r through a
piece either fails or yields the exponent for the next piece, so the pieces
are handled left to right.  Pieces of rank k >= 3 are reduced to queries of
rank k - 1 by moving t across the a_k at each end.  On the right end two
things can happen: s <= 0, where the exponent is pinned down by phi_k, and
s > 0, where a bounded list of candidate exponents is tried one by one.

Every Member answer is checked against :func:`eval_hword` before it is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .budget import BudgetExceeded, EvalBudget
from .freewords import (
    apply_theta,
    concat,
    count_letter,
    expand_theta_letter,
    inverse,
    partition_pieces,
    rank_of,
    reduce,
    split_piece,
)
from .group import eval_hword
from .hydra import phi, phi_capped, theta_transcript

__all__ = [
    "Member",
    "NotInLambda",
    "Undecided",
    "SolverBudget",
    "SolverError",
    "OvercomeLeft",
    "solve",
    "solve_piece",
    "overcome_left",
    "resolve_right",
    "theta_run_exponent",
]

BUDGET_EXCEEDED = "BudgetExceeded"
CANDIDATE_CAP = "CandidateCapReached"


@dataclass(frozen=True)
class Member:
    s: int
    sigma: tuple


@dataclass(frozen=True)
class NotInLambda:
    pass


@dataclass(frozen=True)
class Undecided:
    reason: str
    detail: str = ""


@dataclass
class SolverBudget:
    eval: EvalBudget = field(default_factory=EvalBudget)
    max_candidate_s: int = 4096
    max_depth: int = 64

    def __post_init__(self):
        if self.max_candidate_s < 1 or self.max_depth < 1:
            raise ValueError("solver caps must be >= 1")


class SolverError(AssertionError):
    """A witness failed verification.  This is a bug, never an answer."""


class _Undecidable(Exception):
    def __init__(self, reason: str, detail: str = ""):
        super().__init__(detail)
        self.reason = reason
        self.detail = detail


class OvercomeLeft(NamedTuple):
    h1: tuple
    n_prime: int
    u1: tuple


# --- moving t past a_k at either end of a piece ------------------------------


def overcome_left(k: int, n: int, eps: int, budget: EvalBudget) -> OvercomeLeft:
    """Rewrite t^n a_k^eps as h1 t^n' u1 with h1 in H (k >= 3)."""
    if k < 3 or eps not in (0, 1):
        raise ValueError("overcome_left needs k >= 3 and eps in {0, 1}")
    if eps == 0:
        return OvercomeLeft((), n, ())
    if n <= 0:
        m = -n
        return OvercomeLeft(theta_transcript(k, m, budget), n - phi(k, m, budget), ())
    # theta^{n-1}(a_{k-1}^-1) ... theta^0(a_{k-1}^-1)
    u1: tuple = ()
    for j in range(n - 1, -1, -1):
        u1 = concat(u1, expand_theta_letter(k - 1, j, -1, budget))
    return OvercomeLeft((k,), n - 1, u1)


def _match_phi(k: int, s_inner: int) -> int | None:
    """The m >= 0 with -m - phi_k(m) = s_inner, if any (k >= 3)."""
    cap = max(2, -s_inner + 2)
    m = 0
    while True:
        value = -m - phi_capped(k, m, cap)
        if value == s_inner:
            return m
        if value < s_inner:
            return None
        m += 1


def resolve_right(k: int, s_inner: int, budget: EvalBudget):
    """Exponent and H-word for a trailing a_k^-1.

    ``s_inner`` is the exponent reached just before the a_k^-1.  Returns
    ``(s, h2)`` with t^s_inner a_k^-1 = h2 t^s (for k >= 3 only the s <= 0
    solutions are found here), or NotInLambda().
    """
    if k == 1:
        return s_inner + 1, (-1,)
    if k == 2:
        if s_inner % 2 == 0:
            return NotInLambda()
        s = (s_inner + 1) // 2
        return s, _k2_h2(s)
    m = _match_phi(k, s_inner)
    if m is None:
        return NotInLambda()
    return -m, inverse(theta_transcript(k, m, budget))


def _k2_h2(s: int) -> tuple:
    # x_1^s x_2^-1 for any sign of s
    return ((1,) * s if s >= 0 else (-1,) * (-s)) + (-2,)


def theta_run_exponent(r: int, a: int, b: int, budget: EvalBudget | None = None):
    """Closed-form s for t^r theta^a(a_3^-1) theta^b(a_3).

    The element lies in Lambda exactly when s = 2^(b-a) (r-a-2) + b + 2 is an
    integer, and then it lies in H t^s.
    """
    if budget is not None:
        budget.check_bitlen(abs(b - a) + abs(r).bit_length() + 2, "theta run")
    s = Fraction(2) ** (b - a) * (r - a - 2) + b + 2
    if s.denominator != 1:
        return NotInLambda()
    return int(s)


# --- the recursion -------------------------------------------------------------


def _solve(r: int, w: tuple, sb: SolverBudget, depth: int):
    """(s, sigma) or None; w must be reduced."""
    if depth > sb.max_depth:
        raise _Undecidable(BUDGET_EXCEEDED, "recursion depth")
    k = rank_of(w)
    if k == 0:
        return r, ()
    sigma: list[int] = []
    for piece in partition_pieces(w, k):
        found = _solve_piece(r, piece, k, sb, depth)
        if found is None:
            return None
        r, h = found
        sigma.extend(h)
    return r, reduce(sigma)


def _solve_piece(r: int, piece: tuple, k: int, sb: SolverBudget, depth: int):
    budget = sb.eval
    budget.charge(1, "solver")
    e1, middle, e2 = split_piece(piece, k)
    if k == 1:
        # a_1 commutes with t
        letter = piece[0]
        return (r - 1, (1,)) if letter > 0 else (r + 1, (-1,))
    if k == 2:
        h: list[int] = []
        if e1:
            # t^r a_2 = x_2 x_1^-r t^(2r-1)
            h = [2] + ([-1] * r if r >= 0 else [1] * (-r))
            r = 2 * r - 1
        m = sum(1 if x > 0 else -1 for x in middle)
        h += [1] * m if m >= 0 else [-1] * (-m)
        r -= m
        if e2:
            right = resolve_right(2, r, budget)
            if isinstance(right, NotInLambda):
                return None
            r, h2 = right
            h += h2
        return r, tuple(h)

    h1, r1, u1 = overcome_left(k, r, e1, budget)
    inner_word = concat(u1, middle)
    if not e2:
        inner = _solve(r1, inner_word, sb, depth + 1)
        if inner is None:
            return None
        return inner[0], h1 + inner[1]

    # right end, s <= 0
    inner = _solve(r1, inner_word, sb, depth + 1)
    if inner is not None:
        right = resolve_right(k, inner[0], budget)
        if not isinstance(right, NotInLambda):
            s, h2 = right
            return s, h1 + inner[1] + h2

    # right end, s > 0: t^s a_k = x_k t^(s-1) u(s), so t^r1 W u(s)^-1 must
    # land in H t^(s-1).  Each positive theta^j(a_{k-1}) head of u(s)^-1 has
    # to be absorbed by its own a_{k-1}^-1 of W unless s equals the incoming
    # exponent, which bounds the candidates.
    c = count_letter(inner_word, -(k - 1))
    candidates = sorted({x for x in (r, r1) if x >= 1} | set(range(1, c + 2)))
    tail: tuple = ()
    built = 0
    for s in candidates:
        if s > sb.max_candidate_s:
            raise _Undecidable(CANDIDATE_CAP, f"s > {sb.max_candidate_s}")
        while built < s:
            tail = concat(tail, expand_theta_letter(k - 1, built, 1, budget))
            built += 1
        found = _solve(r1, concat(inner_word, tail), sb, depth + 1)
        if found is not None and found[0] == s - 1:
            return s, h1 + found[1] + (-k,)
    return None


def _verify(r: int, w: tuple, s: int, sigma: tuple, budget: EvalBudget) -> None:
    got = eval_hword(sigma, budget)
    want_v = apply_theta(w, -r, budget)
    if got.v != want_v or got.r != r - s:
        raise SolverError(f"witness for t^{r} {w} fails verification")


def solve(r: int, w, budget: SolverBudget | None = None):
    """Decide t^r w in H t^s for some s.

    Returns Member(s, sigma), NotInLambda() or Undecided(reason).
    """
    sb = SolverBudget() if budget is None else budget
    w = reduce(w)
    try:
        found = _solve(r, w, sb, 0)
        if found is None:
            return NotInLambda()
        s, sigma = found
        _verify(r, w, s, sigma, sb.eval)
        return Member(s, sigma)
    except BudgetExceeded as exc:
        return Undecided(BUDGET_EXCEEDED, str(exc))
    except _Undecidable as exc:
        return Undecided(exc.reason, exc.detail)


def solve_piece(r: int, piece, k: int, budget: SolverBudget | None = None):
    """The answer for a single piece of rank k (unverified search, verified result)."""
    sb = SolverBudget() if budget is None else budget
    piece = tuple(piece)
    try:
        found = _solve_piece(r, piece, k, sb, 0)
        if found is None:
            return NotInLambda()
        s, sigma = found
        sigma = reduce(sigma)
        _verify(r, piece, s, sigma, sb.eval)
        return Member(s, sigma)
    except BudgetExceeded as exc:
        return Undecided(BUDGET_EXCEEDED, str(exc))
    except _Undecidable as exc:
        return Undecided(exc.reason, exc.detail)
