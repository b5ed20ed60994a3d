"""Hydra battles, Ackermann functions and the membership problem in the
hydra groups G_k = F(a_1..a_k) x| <t> with subgroup H_k = <a_1 t, ..., a_k t>."""

from .ackermann import ack, ack_iter
from .budget import BudgetExceeded, EvalBudget
from .group import NormalForm, collect, eval_hword, hword_reduce, nf_invert, nf_multiply
from .hydra import NotInDomain, battle, hydra_H, phi, strike, transcript_to_hword
from .solver import Member, NotInLambda, SolverBudget, Undecided, solve

__all__ = [
    "ack", "ack_iter", "BudgetExceeded", "EvalBudget", "NormalForm", "collect",
    "eval_hword", "hword_reduce", "nf_invert", "nf_multiply", "NotInDomain", "battle",
    "hydra_H", "phi", "strike", "transcript_to_hword", "Member", "NotInLambda",
    "SolverBudget", "Undecided", "solve",
]
