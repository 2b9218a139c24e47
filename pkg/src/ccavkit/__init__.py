"""Constructive control by adding voters (CCAV) under positional scoring rules.

Scoring vectors and elections with exact rational scores, a dichotomy
classifier for symbolic scoring-rule families, exact CCAV solvers, and
3DM reductions that can be checked against brute-force oracles.
"""

from .core import (
    CCAVInstance, Election, ElectionError, ScoringVector, VoteMultiset, as_vector, evaluate,
    is_winner, winners,
)
from .generators import (
    Builtin, BuiltinKind, Classification, GeneratorError, HardCase, Pattern, PolyCase, Tabulated,
    borda, classify, dowdall, expand, k_approval, k_veto, validate,
)
from .kernels import BACKEND
from .solvers import SolveResult, solve, solve_brute_force
from .vectors import check_flexible_pure, check_pure, distinguish, equivalent, normalize

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Builtin", "BuiltinKind", "CCAVInstance", "Classification", "Election",
    "ElectionError", "GeneratorError", "HardCase", "Pattern", "PolyCase", "ScoringVector",
    "SolveResult", "Tabulated", "VoteMultiset", "as_vector", "borda", "check_flexible_pure",
    "check_pure", "classify", "distinguish", "dowdall", "equivalent", "evaluate", "expand",
    "is_winner", "k_approval", "k_veto", "normalize", "solve", "solve_brute_force", "validate",
    "winners",
]
