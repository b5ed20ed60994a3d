import itertools
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from hydragroups.ackermann import ack, ack_iter
from hydragroups.budget import BudgetExceeded, EvalBudget


@lru_cache(maxsize=None)
def naive(k, n):
    # the defining recursion unrolled, no closed forms
    if k == 0:
        return n + 2
    value = 0 if k == 1 else 1
    for _ in range(n):
        value = naive(k - 1, value)
    return value


def test_examples():
    assert ack(1, 5) == 10
    assert ack(4, 2) == 4
    assert ack(3, 3) == 16
    assert ack(1, 0) == 0
    assert ack_iter(2, 0, 7) == 7
    assert ack_iter(1, 3, 1) == 8
    assert ack_iter(2, 2, 3) == 256


def test_matches_naive_recursion():
    for k, n in itertools.product(range(4), range(5)):
        assert ack(k, n) == naive(k, n), (k, n)
    for n in range(4):
        assert ack(4, n) == naive(4, n)


def test_budget_trips():
    with pytest.raises(BudgetExceeded) as info:
        ack(4, 4)
    assert info.value.cap == "bits"
    with pytest.raises(BudgetExceeded):
        ack(2, 100, EvalBudget(max_bits=50))
    assert ack(2, 49, EvalBudget(max_bits=50)) == 2 ** 49


def test_steps_cap():
    with pytest.raises(BudgetExceeded) as info:
        ack(5, 3, EvalBudget(max_steps=5))
    assert info.value.cap in ("steps", "bits")


def test_memo_does_not_change_outcome():
    # a warm memo must not let a tight budget succeed where a cold one fails
    budget = EvalBudget(max_steps=3)
    ack(4, 3)
    with pytest.raises(BudgetExceeded):
        ack(4, 3, budget)


@given(st.integers(0, 3), st.integers(0, 4))
def test_pure(k, n):
    assert ack(k, n) == ack(k, n) == naive(k, n)
