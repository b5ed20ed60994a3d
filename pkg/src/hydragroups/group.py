"""Elements of G = F(a_1, a_2, ...) x| <t> and words on x_i = a_i t.

Every element has a unique normal form v t^r with v a reduced free word.
Moving a letter past t^r uses t^r a t^-r = theta^-r(a).

An H-word is a tuple of nonzero ints, ``i`` for x_i and ``-i`` for x_i^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .budget import EvalBudget, resolve
from .freewords import apply_theta, concat, expand_theta_letter, inverse, reduce
from .notation import Term, format_word

__all__ = [
    "NormalForm",
    "IDENTITY",
    "collect",
    "eval_hword",
    "nf_multiply",
    "nf_invert",
    "hword_reduce",
]


@dataclass(frozen=True)
class NormalForm:
    v: tuple
    r: int

    def to_json(self) -> dict:
        return {"v": format_word(self.v), "r": self.r}

    def __str__(self) -> str:
        if self.r == 0:
            return format_word(self.v)
        t = "t" if self.r == 1 else f"t^{self.r}"
        return t if not self.v else f"{format_word(self.v)} {t}"


IDENTITY = NormalForm((), 0)


def _push_letter(v: list, r: int, letter: int, budget: EvalBudget) -> None:
    """v <- v . t^r a t^-r = v theta^-r(a), reduced in place."""
    sign = 1 if letter > 0 else -1
    for y in expand_theta_letter(abs(letter), -r, sign, budget):
        if v and v[-1] == -y:
            v.pop()
        else:
            v.append(y)


def collect(u: Iterable[Term], budget: EvalBudget | None = None) -> NormalForm:
    """Normal form of a word on a_i, t (and, for convenience, x_i)."""
    budget = resolve(budget)
    v: list[int] = []
    r = 0
    for term in u:
        if term.kind == "t":
            r += term.power
            continue
        letters = [term.index if term.power > 0 else -term.index] * abs(term.power)
        if term.kind == "a":
            for x in letters:
                _push_letter(v, r, x, budget)
        else:
            r = _eval_into(v, r, letters, budget)
    return NormalForm(tuple(v), r)


def _eval_into(v: list, r: int, sigma: Iterable[int], budget: EvalBudget) -> int:
    ones = 0  # a_1 commutes with t; those letters are charged in bulk
    for x in sigma:
        if x == 1 or x == -1:
            r += x
            ones += 1
            if v and v[-1] == -x:
                v.pop()
            else:
                v.append(x)
            continue
        if ones:
            budget.charge(ones, "eval")
            ones = 0
        if x > 0:
            _push_letter(v, r, x, budget)
            r += 1
        else:
            r -= 1
            _push_letter(v, r, x, budget)
    if ones:
        budget.charge(ones, "eval")
    return r


def eval_hword(sigma: Sequence[int], budget: EvalBudget | None = None) -> NormalForm:
    """Normal form of the H-word ``sigma`` as an element of G."""
    v: list[int] = []
    r = _eval_into(v, 0, sigma, resolve(budget))
    return NormalForm(tuple(v), r)


def nf_multiply(g: NormalForm, h: NormalForm, budget: EvalBudget | None = None) -> NormalForm:
    # v t^r . w t^s = v theta^-r(w) t^(r+s)
    return NormalForm(concat(g.v, apply_theta(h.v, -g.r, resolve(budget))), g.r + h.r)


def nf_invert(g: NormalForm, budget: EvalBudget | None = None) -> NormalForm:
    return NormalForm(apply_theta(inverse(g.v), g.r, resolve(budget)), -g.r)


def hword_reduce(sigma: Iterable[int]) -> tuple:
    """Free reduction in the x-letters; the result is a geodesic of H."""
    return reduce(sigma)
