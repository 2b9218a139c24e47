"""Exact CCAV decision procedures."""

from .approval import solve_k_approval, solve_k_veto
from .approve_veto import solve_approve_veto
from .brute import BoundExceeded, SolveResult, WitnessError, solve_brute_force
from .dispatch import METHODS, route, solve
from .flow import Arc, FlowNetwork, NetworkError, min_cost_flow
from .two_top import solve_two_top

__all__ = [
    "Arc", "BoundExceeded", "FlowNetwork", "METHODS", "NetworkError", "SolveResult",
    "WitnessError", "min_cost_flow", "route", "solve", "solve_approve_veto",
    "solve_brute_force", "solve_k_approval", "solve_k_veto", "solve_two_top",
]
