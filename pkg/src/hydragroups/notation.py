"""Text form of words, shared by every command.

    word := "e" | term (WS term)*
    term := ("a" INT | "t" | "x" INT) ["^" SIGNED_INT]

``a2^4 t^15`` is a_2^4 t^15, ``x2 x1^-3`` is (a_2 t)(a_1 t)^-3.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Sequence

__all__ = [
    "ParseError",
    "Term",
    "parse",
    "parse_free_word",
    "parse_hword",
    "format_word",
    "format_terms",
]

_TERM = re.compile(r"(?:(a|x)([1-9][0-9]*)|(t))(?:\^(-?[0-9]+))?\Z")


class ParseError(ValueError):
    pass


class Term(NamedTuple):
    kind: str  # "a", "t" or "x"
    index: int  # 0 for t
    power: int


def parse(text: str) -> tuple[Term, ...]:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty input; write 'e' for the empty word")
    if tokens == ["e"]:
        return ()
    terms = []
    for tok in tokens:
        m = _TERM.match(tok)
        if m is None:
            raise ParseError(f"bad term {tok!r}")
        power = int(m.group(4)) if m.group(4) is not None else 1
        if m.group(3):
            terms.append(Term("t", 0, power))
        else:
            terms.append(Term(m.group(1), int(m.group(2)), power))
    return tuple(terms)


def _letters(terms: Sequence[Term], kind: str) -> tuple:
    out: list[int] = []
    for term in terms:
        if term.kind != kind:
            raise ParseError(f"unexpected {term.kind!r} letter in a word on {kind!r} letters")
        letter = term.index if term.power > 0 else -term.index
        out.extend([letter] * abs(term.power))
    return tuple(out)


def parse_free_word(text: str) -> tuple:
    """Parse a word on the a_i (unreduced, exactly as written)."""
    return _letters(parse(text), "a")


def parse_hword(text: str) -> tuple:
    """Parse a word on the x_i = a_i t."""
    return _letters(parse(text), "x")


def format_word(w: Sequence[int], letter: str = "a") -> str:
    """Text form of a letter tuple, e.g. ``a2^4 a1^-1`` or ``x2 x2 x1^3``.

    Runs of three or more equal letters are written as powers; shorter runs
    are spelled out.
    """
    if not w:
        return "e"
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        x, run = w[i], j - i
        base = f"{letter}{abs(x)}"
        if run < 3:
            out.extend([base if x > 0 else f"{base}^-1"] * run)
        else:
            out.append(f"{base}^{run if x > 0 else -run}")
        i = j
    return " ".join(out)


def format_terms(terms: Sequence[Term]) -> str:
    if not terms:
        return "e"
    out = []
    for term in terms:
        base = "t" if term.kind == "t" else f"{term.kind}{term.index}"
        out.append(base if term.power == 1 else f"{base}^{term.power}")
    return " ".join(out)
