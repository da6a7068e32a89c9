"""Cyclic, phi_n-symmetric hamiltonian cycle systems of K_{m x n} with m even."""

from .constructor import BaseCycleSet, ConstructionPlan, Outcome, construct
from .trail import ClosedTrail, DifferenceMultiset
from .zmod import Params

__all__ = [
    "BaseCycleSet",
    "ClosedTrail",
    "ConstructionPlan",
    "DifferenceMultiset",
    "Outcome",
    "Params",
    "construct",
]
