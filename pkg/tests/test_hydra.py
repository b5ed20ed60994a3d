import pytest
from hypothesis import given, settings, strategies as st

from hydragroups.ackermann import ack
from hydragroups.budget import BudgetExceeded, EvalBudget
from hydragroups.freewords import expand_theta_letter
from hydragroups.group import eval_hword
from hydragroups.hydra import (
    NotInDomain,
    battle,
    from_runs,
    hydra_H,
    phi,
    phi_capped,
    strike,
    theta_transcript,
    to_runs,
    transcript_to_hword,
)
from hydragroups.notation import format_word, parse_free_word as W, parse_hword


def R(text):
    return to_runs(W(text))


def test_strike_examples():
    assert strike(R("a2 a3 a1")) == R("a3 a2 a1")
    assert strike(R("a1")) == ()
    assert strike(R("a2 a2")) == R("a2 a1")
    with pytest.raises(ValueError):
        strike(())


def test_five_strikes():
    seen = [R("a2 a3 a1")]
    while seen[-1]:
        seen.append(strike(seen[-1]))
    assert [format_word(from_runs(w)) for w in seen] == [
        "a2 a3 a1", "a3 a2 a1", "a2 a1 a1", "a1 a1", "a1", "e"]
    assert battle(W("a2 a3 a1")).duration == 5


def test_battle_examples():
    assert battle(()).duration == 0
    assert battle(W("a2^3")).duration == 7


def test_hydra_H_examples():
    assert hydra_H(2, 10) == 1023
    assert hydra_H(3, 3) == 46
    assert hydra_H(3, 4) == 3 * 2 ** 46 - 2
    assert hydra_H(5, 2) == 6


def test_phi_examples():
    assert phi(2, -3) == -2
    assert phi(4, 0) == 1
    assert phi(3, 5) == 89
    with pytest.raises(NotInDomain):
        phi(3, -1)


def test_transcript_examples():
    assert transcript_to_hword(W("a2^4")) == parse_hword("x2 x2 x1 x2 x1^3 x2 x1^7")
    assert transcript_to_hword(W("a1^6")) == (1,) * 6
    assert transcript_to_hword(W("a3")) == (3,)


def test_closed_form_thresholds():
    # recursion below the switch, closed form above; both must agree across it
    for n in (4095, 4096, 4097, 4100):
        assert phi(3, n) == 3 * 2 ** n - n - 2
        assert hydra_H(2, n) == 2 ** n - 1


def test_battle_matches_recursions():
    for k in range(1, 4):
        for n in range(5 if k < 3 else 4):
            assert battle((k,) * n).duration == hydra_H(k, n)
        for n in range(7):
            assert battle(expand_theta_letter(k, n)).duration == phi(k, n)
    assert battle(expand_theta_letter(4, 1)).duration == phi(4, 1) == 4


def test_transcript_matches_battle():
    for k in range(1, 5):
        for m in range(6 if k < 4 else 2):
            assert theta_transcript(k, m) == battle(expand_theta_letter(k, m), want_transcript=True).hword()


positive = st.lists(st.integers(1, 3), max_size=5).map(tuple)


@settings(max_examples=60, deadline=None)
@given(positive)
def test_length_law(w):
    if not w:
        return
    runs = to_runs(w)
    grown = sum(1 for x in w[1:] if x >= 2)
    assert len(from_runs(strike(runs))) == len(w) - 1 + grown


@settings(max_examples=60, deadline=None)
@given(positive)
def test_transcript_evaluates(w):
    budget = EvalBudget(max_steps=200_000)
    try:
        sigma = transcript_to_hword(w, budget)
        duration = battle(w, EvalBudget(max_steps=200_000), want_transcript=True)
    except BudgetExceeded:
        return
    assert sigma == duration.hword()
    g = eval_hword(sigma)
    assert (g.v, g.r) == (w, len(sigma))


def test_inequalities():
    grid = [(k, n) for k in range(1, 4) for n in range(7)]
    for k, n in [(3, 2), (3, 3), (3, 4), (4, 2)]:
        assert hydra_H(k, n) >= ack(k, n)
    for k, n in grid:
        try:
            h, a = hydra_H(k, n), ack(k, n + k)
        except BudgetExceeded:
            continue
        assert h <= a
    for k, n in grid:
        if k >= 2:
            assert phi(k, n) <= ack(k - 1, n + k) - n - k
        if k >= 3:
            assert phi(k, n) >= ack(k - 1, n)


def test_phi_capped():
    for k in range(1, 5):
        for n in range(5):
            for cap in (1, 5, 50, 10 ** 6):
                try:
                    exact = phi(k, n)
                except BudgetExceeded:
                    continue
                assert phi_capped(k, n, cap) == min(exact, cap)


def test_budget_trips():
    with pytest.raises(BudgetExceeded):
        hydra_H(4, 3)
    with pytest.raises(BudgetExceeded):
        battle(W("a2^30"), EvalBudget(max_steps=1000))
    with pytest.raises(BudgetExceeded):
        hydra_H(2, 2_000_000)


def test_memo_does_not_change_outcome():
    hydra_H(3, 4)
    with pytest.raises(BudgetExceeded):
        hydra_H(3, 4, EvalBudget(max_steps=10))
