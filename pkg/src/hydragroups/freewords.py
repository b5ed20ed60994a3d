"""Words in the free group F(a_1, a_2, ...) and the automorphism theta.

A word is a tuple of nonzero ints: ``i`` stands for a_i and ``-i`` for its
inverse.  The same encoding is used for words on the subgroup generators
x_i = a_i t (see :mod:`hydragroups.group`).

theta is the automorphism a_1 -> a_1, a_i -> a_i a_{i-1} (i > 1); in G it is
conjugation t^-1 (.) t.
"""

from __future__ import annotations

import threading
from math import comb
from typing import Iterable, Sequence

from .budget import EvalBudget, resolve

Word = tuple

__all__ = [
    "Word",
    "reduce",
    "concat",
    "inverse",
    "is_reduced",
    "is_positive",
    "rank_of",
    "count_letter",
    "theta_once",
    "theta_inverse_once",
    "theta_letter_length",
    "expand_theta_letter",
    "apply_theta",
    "partition_pieces",
    "split_piece",
    "is_piece",
]


def reduce(w: Iterable[int]) -> Word:
    """Freely reduce ``w``."""
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def concat(u: Sequence[int], v: Sequence[int]) -> Word:
    """Reduced form of u v, for reduced u and v (cancellation only at the seam)."""
    j = 0
    n = min(len(u), len(v))
    while j < n and u[-1 - j] == -v[j]:
        j += 1
    return tuple(u[: len(u) - j]) + tuple(v[j:])


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def is_reduced(w: Sequence[int]) -> bool:
    return all(w[i] != -w[i + 1] for i in range(len(w) - 1))


def is_positive(w: Sequence[int]) -> bool:
    return all(x > 0 for x in w)


def rank_of(w: Sequence[int]) -> int:
    """Highest index occurring in ``w``; 0 for the empty word."""
    return max((abs(x) for x in w), default=0)


def count_letter(w: Sequence[int], letter: int) -> int:
    return sum(1 for x in w if x == letter)


# --- theta by its definition (one application at a time) -------------------


def _theta_gen(i: int) -> Word:
    return (1,) if i == 1 else (i, i - 1)


def _theta_inv_gen(i: int) -> Word:
    # theta^-1(a_1) = a_1, theta^-1(a_i) = a_i theta^-1(a_{i-1})^-1
    w: Word = (1,)
    for j in range(2, i + 1):
        w = reduce((j,) + inverse(w))
    return w


def theta_once(w: Sequence[int]) -> Word:
    """theta(w), applied letter by letter straight from the definition."""
    out: list[int] = []
    for x in w:
        img = _theta_gen(abs(x))
        out.extend(img if x > 0 else inverse(img))
    return reduce(out)


def theta_inverse_once(w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        img = _theta_inv_gen(abs(x))
        out.extend(img if x > 0 else inverse(img))
    return reduce(out)


# --- closed-form expansions of theta^n(a_k^{+-1}) ---------------------------


def theta_letter_length(k: int, n: int) -> int:
    """Length of theta^n(a_k^{+-1}).

    For n >= 0 this is sum_{i<k} C(n, i); for n = -N < 0 it is
    1 + sum_{i=1}^{k-1} C(N+i-1, i).
    """
    if n >= 0:
        return sum(comb(n, i) for i in range(k))
    m = -n
    return 1 + sum(comb(m + i - 1, i) for i in range(1, k))


_lock = threading.RLock()
_expansions: dict[tuple[int, int, int], Word] = {}


def _expand(k: int, n: int, sign: int) -> Word:
    if k == 1 or n == 0:
        return (sign * k,)
    if k == 2:
        # theta^n(a_2) = a_2 a_1^n; cheap to build, too many n to cache
        run = (1,) * n if n > 0 else (-1,) * -n
        return (2,) + run if sign > 0 else inverse(run) + (-2,)
    key = (k, n, sign)
    w = _expansions.get(key)
    if w is not None:
        return w
    if sign > 0 and n > 0:
        # a_k theta^0(a_{k-1}) theta^1(a_{k-1}) ... theta^{n-1}(a_{k-1})
        parts = [(k,)] + [_expand(k - 1, j, 1) for j in range(n)]
        w = _join(parts)
    elif sign > 0:
        # a_k theta^-1(a_{k-1}^-1) theta^-2(a_{k-1}^-1) ... theta^n(a_{k-1}^-1)
        parts = [(k,)] + [_expand(k - 1, j, -1) for j in range(-1, n - 1, -1)]
        w = _join(parts)
    elif n > 0:
        # theta^{n-1}(a_{k-1}^-1) ... theta^0(a_{k-1}^-1) a_k^-1
        parts = [_expand(k - 1, j, -1) for j in range(n - 1, -1, -1)] + [(-k,)]
        w = _join(parts)
    else:
        # theta^n(a_{k-1}) theta^{n+1}(a_{k-1}) ... theta^-1(a_{k-1}) a_k^-1
        parts = [_expand(k - 1, j, 1) for j in range(n, 0)] + [(-k,)]
        w = _join(parts)
    with _lock:
        _expansions[key] = w
    return w


def _join(parts: Iterable[Word]) -> Word:
    out: list[int] = []
    for p in parts:
        for x in p:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def expand_theta_letter(k: int, n: int, sign: int = 1,
                        budget: EvalBudget | None = None) -> Word:
    """theta^n(a_k^sign) built from its recursive closed form."""
    if k < 1 or sign not in (1, -1):
        raise ValueError("need k >= 1 and sign in {1, -1}")
    budget = resolve(budget)
    budget.charge(theta_letter_length(k, n), f"theta^{n}(a_{k})")
    return _expand(k, n, sign)


def apply_theta(w: Sequence[int], n: int, budget: EvalBudget | None = None) -> Word:
    """Reduced form of theta^n(w), for any integer n."""
    budget = resolve(budget)
    if n == 0:
        return reduce(w)
    budget.charge(sum(theta_letter_length(abs(x), n) for x in w), f"theta^{n}")
    out: list[int] = []
    for x in w:
        for y in _expand(abs(x), n, 1 if x > 0 else -1):
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


# --- pieces ----------------------------------------------------------------


def partition_pieces(w: Sequence[int], k: int | None = None) -> list[Word]:
    """The partition of a reduced word into pieces of rank ``k``.

    A new piece starts at every a_k and after every a_k^-1; no other cut is
    needed, so the partition is minimal (and unique).
    """
    if k is None:
        k = rank_of(w)
    if k < rank_of(w):
        raise ValueError("k must be at least the rank of w")
    pieces: list[Word] = []
    current: list[int] = []
    for x in w:
        if x == k and current:
            pieces.append(tuple(current))
            current = []
        current.append(x)
        if x == -k:
            pieces.append(tuple(current))
            current = []
    if current:
        pieces.append(tuple(current))
    return pieces


def split_piece(piece: Sequence[int], k: int) -> tuple[int, Word, int]:
    """Write a piece of rank k as a_k^e1 middle a_k^-e2; returns (e1, middle, e2)."""
    piece = tuple(piece)
    e1 = 1 if piece and piece[0] == k else 0
    rest = piece[e1:]
    e2 = 1 if rest and rest[-1] == -k else 0
    middle = rest[: len(rest) - e2]
    if any(abs(x) >= k for x in middle):
        raise ValueError(f"{piece} is not a piece of rank {k}")
    return e1, middle, e2


def is_piece(w: Sequence[int], k: int) -> bool:
    if not is_reduced(w):
        return False
    try:
        split_piece(w, k)
    except ValueError:
        return False
    return True
