"""Witness words, a brute-force membership oracle, and distortion tables.

The oracle knows every element of H of length at most L over x_1..x_k.  A
full ball of radius 18 has about 10^9 elements, so it is split: the ball of
radius ``L - b`` is stored as a dict keyed by the free part of the normal
form, and queries try every prefix of length <= b from a second, small
ball.  Since H is free, each element of H has exactly one reduced spelling
and the reduced witness found is a geodesic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

from .budget import BudgetExceeded, EvalBudget, resolve
from .freewords import _expand, apply_theta, concat, inverse
from .group import collect, eval_hword, hword_reduce
from .hydra import transcript_to_hword
from .notation import Term, format_terms, format_word, parse_free_word, parse_hword
from .solver import Member, SolverBudget, Undecided, solve

__all__ = [
    "witness_u",
    "WitnessPair",
    "witness_pair",
    "OracleIndex",
    "OracleVerdict",
    "enumerate_ball",
    "build_oracle",
    "oracle_member",
    "save_oracle",
    "load_oracle",
    "extend_oracle",
    "DistortionTable",
    "distortion_table",
]


# --- witnesses -----------------------------------------------------------------


def witness_u(k: int, n: int, budget: EvalBudget | None = None) -> tuple:
    """u_{k,n}: the positive H-word equal to a_k^n t^{H_k(n)}."""
    if k < 1 or n < 0:
        raise ValueError("witness_u needs k >= 1, n >= 0")
    return transcript_to_hword((k,) * n, budget)


@dataclass(frozen=True)
class WitnessPair:
    v: tuple  # Terms of a word on a_i, t
    w: tuple  # reduced H-word
    verified: bool

    def v_text(self) -> str:
        return format_terms(self.v)

    def w_text(self) -> str:
        return format_word(self.w, "x")

    @property
    def v_length(self) -> int:
        return sum(abs(t.power) for t in self.v)


def witness_pair(k: int, n: int, budget: EvalBudget | None = None) -> WitnessPair:
    """a_k^n a_2 t a_1 a_2^-1 a_k^-n, short in G, and the same element as a
    reduced H-word of length 2 H_k(n) + 3."""
    if k < 2 or n < 1:
        raise ValueError("witness_pair needs k >= 2, n >= 1")
    budget = resolve(budget)
    v = (Term("a", k, n), Term("a", 2, 1), Term("t", 0, 1), Term("a", 1, 1),
         Term("a", 2, -1), Term("a", k, -n))
    u = witness_u(k, n, budget)
    w = hword_reduce(u + (2, 1, -2) + inverse(u))
    return WitnessPair(v, w, collect(v, budget) == eval_hword(w, budget))


# --- the oracle -------------------------------------------------------------------


def _key(v) -> bytes:
    return bytes(x & 0xFF for x in v)


def _unkey(b: bytes) -> tuple:
    return tuple(x if x < 128 else x - 256 for x in b)


def enumerate_ball(k: int, radius: int, budget: EvalBudget | None = None
                   ) -> Iterator[tuple[tuple, tuple, int]]:
    """Every reduced H-word sigma over x_1..x_k with |sigma| <= radius, as
    (sigma, v, r) with eval(sigma) = v t^r, in depth-first order."""
    budget = resolve(budget)
    letters = [i for i in range(1, k + 1)] + [-i for i in range(1, k + 1)]
    stack: list[tuple[tuple, tuple, int]] = [((), (), 0)]
    while stack:
        sigma, v, r = stack.pop()
        budget.charge(1, "ball")
        yield sigma, v, r
        if len(sigma) == radius:
            continue
        for x in reversed(letters):
            if sigma and sigma[-1] == -x:
                continue
            if x > 0:
                stack.append((sigma + (x,), concat(v, _expand(x, -r, 1)), r + 1))
            else:
                stack.append((sigma + (x,), concat(v, _expand(-x, 1 - r, -1)), r - 1))


@dataclass
class OracleIndex:
    """Membership in H for elements of length <= L = radius + split."""

    k: int
    radius: int  # of the stored ball
    split: int  # length of the prefixes tried at query time
    ball: dict = field(default_factory=dict)  # key(v) -> (r, witness)
    _prefixes: list = field(default_factory=list, repr=False)

    @property
    def L(self) -> int:
        return self.radius + self.split

    def _prefix_table(self) -> list:
        if not self._prefixes:
            rows = []
            for sigma, v, r in enumerate_ball(self.k, self.split, EvalBudget(max_steps=10**9)):
                # eval(sigma)^-1 = theta^r(v^-1) t^-r
                rows.append((sigma, r, apply_theta(inverse(v), r, EvalBudget(max_steps=10**9))))
            self._prefixes = rows
        return self._prefixes

    def find(self, v, q: int | None = None):
        """Shortest witness for v t^q (any q when None) with length <= L.

        Returns (q, witness) or None.
        """
        best = None
        images: dict[int, tuple] = {}
        for sigma, r1, p in self._prefix_table():
            if r1 not in images:
                images[r1] = apply_theta(v, r1, EvalBudget(max_steps=10**9))
            hit = self.ball.get(_key(concat(p, images[r1])))
            if hit is None:
                continue
            r2, tail = hit
            if q is not None and r1 + r2 != q:
                continue
            witness = hword_reduce(sigma + _unkey(tail))
            if best is None or len(witness) < len(best[1]):
                best = (r1 + r2, witness)
        return best

    def lookup(self, v, r: int):
        """(min_length, witness) if v t^r lies in H within radius L."""
        hit = self.find(tuple(v), r)
        return None if hit is None else (len(hit[1]), hit[1])


def build_oracle(k: int, L: int, budget: EvalBudget | None = None,
                 split: int | None = None) -> OracleIndex:
    if k < 1 or L < 0:
        raise ValueError("build_oracle needs k >= 1, L >= 0")
    if split is None:
        split = max(0, (L - 4) // 2)
    split = min(split, L)
    idx = OracleIndex(k, L - split, split)
    for sigma, v, r in enumerate_ball(k, idx.radius, budget):
        idx.ball[_key(v)] = (r, _key(sigma))
    return idx


@dataclass(frozen=True)
class OracleVerdict:
    found: bool
    s: int | None = None
    witness: tuple | None = None


def oracle_member(idx: OracleIndex, r: int, w) -> OracleVerdict:
    """t^r w = theta^-r(w) t^r, so t^r w in H t^s iff theta^-r(w) t^(r-s) in H."""
    hit = idx.find(apply_theta(tuple(w), -r, EvalBudget(max_steps=10**9)))
    if hit is None:
        return OracleVerdict(False)
    q, witness = hit
    return OracleVerdict(True, r - q, witness)


def save_oracle(idx: OracleIndex, path: str | os.PathLike) -> None:
    """Write the stored ball as sorted ``v \\t r \\t length \\t witness`` lines."""
    lines = []
    for key, (r, tail) in idx.ball.items():
        witness = _unkey(tail)
        lines.append(f"{format_word(_unkey(key))}\t{r}\t{len(witness)}\t{format_word(witness, 'x')}\n")
    lines.sort()
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(lines)


def load_oracle(path: str | os.PathLike, k: int, split: int = 0) -> OracleIndex:
    """Reload a saved ball; its radius is the longest stored witness."""
    idx = OracleIndex(k, 0, split)
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            v, r, length, witness = line.rstrip("\n").split("\t")
            idx.ball[_key(parse_free_word(v))] = (int(r), _key(parse_hword(witness)))
            idx.radius = max(idx.radius, int(length))
    return idx


def extend_oracle(idx: OracleIndex, extra: int = 1,
                  budget: EvalBudget | None = None) -> OracleIndex:
    """Grow the stored ball by ``extra`` from its frontier."""
    budget = resolve(budget)
    letters = [i for i in range(1, idx.k + 1)] + [-i for i in range(1, idx.k + 1)]
    frontier = [(_unkey(key), r, _unkey(tail)) for key, (r, tail) in idx.ball.items()
                if len(tail) == idx.radius]
    for _ in range(extra):
        grown = []
        for v, r, sigma in frontier:
            for x in letters:
                if sigma and sigma[-1] == -x:
                    continue
                budget.charge(1, "ball")
                if x > 0:
                    nv, nr = concat(v, _expand(x, -r, 1)), r + 1
                else:
                    nv, nr = concat(v, _expand(-x, 1 - r, -1)), r - 1
                grown.append((nv, nr, sigma + (x,)))
        for v, r, sigma in grown:
            idx.ball[_key(v)] = (r, _key(sigma))
        frontier = grown
        idx.radius += 1
    idx._prefixes = []
    return idx


# --- distortion ---------------------------------------------------------------------


@dataclass(frozen=True)
class DistortionTable:
    k: int
    rows: tuple  # (n, Dist(n)) for n = 0..n_max

    def to_csv(self) -> str:
        return "n,dist\n" + "".join(f"{n},{d}\n" for n, d in self.rows)


def distortion_table(k: int, n_max: int, budget: EvalBudget | None = None) -> DistortionTable:
    """Exact Dist(n) for n <= n_max: the largest d_H(1, g) over g in H with
    d_G(1, g) <= n, where d_G uses the generators a_1..a_k, t."""
    budget = resolve(budget)
    gens = [(i, 0) for i in range(1, k + 1)] + [(-i, 0) for i in range(1, k + 1)] + [(0, 1), (0, -1)]
    answers: dict[tuple, object] = {}
    seen = {((), 0)}
    layer = [((), 0)]
    rows = [(0, 0)]
    best = 0
    for n in range(1, n_max + 1):
        nxt = []
        for v, r in layer:
            for a, dt in gens:
                if a:
                    g = (concat(v, _expand(abs(a), -r, 1 if a > 0 else -1)), r)
                else:
                    g = (v, r + dt)
                if g in seen:
                    continue
                seen.add(g)
                nxt.append(g)
                budget.charge(1, "distortion")
                # v t^r in H  iff  t^0 v in H t^-r
                answer = answers.get(g[0])
                if answer is None:
                    answer = answers[g[0]] = solve(0, g[0], SolverBudget(eval=budget.fresh()))
                if isinstance(answer, Undecided):
                    raise BudgetExceeded("steps", budget.max_steps, f"membership of {g} undecided")
                if isinstance(answer, Member) and answer.s == -g[1]:
                    best = max(best, len(answer.sigma))
        layer = nxt
        rows.append((n, best))
    return DistortionTable(k, tuple(rows))
