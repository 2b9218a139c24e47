"""3DM tools, score-realization gadgets and reductions to CCAV."""

from .gadgets import RealizationResult, realize_scores, transfer_votes
from .reductions import (
    Reduction, ReductionError, reduce_approval_style, reduce_auto, reduce_case1, reduce_case2,
    reduce_case3, reduce_case4, reduce_three_coeff, reduce_veto_style,
)
from .threedm import ThreeDMError, ThreeDMInstance, gen_3dm, solve_3dm_brute

__all__ = [
    "RealizationResult", "Reduction", "ReductionError", "ThreeDMError", "ThreeDMInstance",
    "gen_3dm", "realize_scores", "reduce_approval_style", "reduce_auto", "reduce_case1",
    "reduce_case2", "reduce_case3", "reduce_case4", "reduce_three_coeff", "reduce_veto_style",
    "solve_3dm_brute", "transfer_votes",
]
