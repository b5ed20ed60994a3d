import pytest
from hypothesis import given, strategies as st

from hydragroups.notation import ParseError, Term, format_word, parse, parse_free_word, parse_hword


def test_grammar_examples():
    assert parse("a2^4 t^15") == (Term("a", 2, 4), Term("t", 0, 15))
    assert parse_hword("x2 x1^-3") == (2, -1, -1, -1)
    assert parse("e") == ()


@pytest.mark.parametrize("bad", ["", "b2", "a0", "x", "a2^", "a2^+1", "t2", "e e"])
def test_rejects(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_kind_mismatch():
    with pytest.raises(ParseError):
        parse_free_word("a1 x2")


def test_run_formatting():
    assert format_word((2, 2, 1, 2, 1, 1, 1), "x") == "x2 x2 x1 x2 x1^3"
    assert format_word((3, 2, 2, 1)) == "a3 a2 a2 a1"
    assert format_word((-1, -1, -1, 2)) == "a1^-3 a2"
    assert format_word(()) == "e"


@given(st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), max_size=30))
def test_round_trip(w):
    w = tuple(w)
    assert parse_free_word(format_word(w)) == w
    assert parse_hword(format_word(w, "x")) == w
