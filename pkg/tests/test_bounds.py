import pytest

from hydragroups.ackermann import ack
from hydragroups.bounds import K_bound, Psi_bound, ackermann_constants, kappa_bound, psi_bound
from hydragroups.budget import BudgetExceeded, EvalBudget


def test_examples():
    assert kappa_bound(1, 5, 7) == 8
    for n in range(6):
        assert kappa_bound(2, 0, n) == 4 * n + 4
        assert kappa_bound(3, 0, n) >= n
        assert K_bound(1, 3, 4, n) == n + 4
        assert K_bound(2, 3, 0, n) == n
        assert Psi_bound(2, 3, 0, n) == 0
        assert Psi_bound(1, 3, 5, n) == 5
    assert K_bound(2, 1, 2, 1) == kappa_bound(2, 1, kappa_bound(2, 1, 1))
    assert psi_bound(1, 3, 9) == 1


def test_constants():
    assert ackermann_constants(1) == (1, 1, 1)
    assert ackermann_constants(2) == (12, 24, 312)
    d2, e2, f2 = ackermann_constants(2)
    d3, e3, f3 = ackermann_constants(3)
    assert d3 == 2 * (d2 + 1) + 4 * d2 * 3
    assert e3 == 3 * 7 * d2 + 7 * f2 + 4
    assert f3 == (d3 + 1) * e3


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ackermann_dominance(k):
    d, e, _ = ackermann_constants(k)
    checked = 0
    for l in range(1, 4):
        for n in range(4):
            budget = EvalBudget(max_bits=200_000)
            try:
                kb, pb = kappa_bound(k, l, n, budget), psi_bound(k, l, n, budget)
                assert kb <= ack(k - 1, d * n + d * l, budget)
                assert pb <= ack(k - 1, e * n + e * l, budget)
                checked += 1
            except BudgetExceeded:
                continue
    assert checked > 0


def test_monotone_in_n_and_p():
    for k in (1, 2, 3):
        for n in range(4):
            assert kappa_bound(k, 2, n) <= kappa_bound(k, 2, n + 1)
            assert K_bound(k, 2, 1, n) <= K_bound(k, 2, 2, n)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        kappa_bound(0, 1, 1)
    with pytest.raises(ValueError):
        K_bound(2, 1, -1, 1)


def test_budget():
    with pytest.raises(BudgetExceeded):
        K_bound(3, 3, 3, 3, EvalBudget(max_bits=1000))
