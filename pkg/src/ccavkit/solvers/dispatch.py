"""Pick a CCAV algorithm for a generator family and run it."""

from __future__ import annotations

from typing import Optional, Tuple

from ..core import CCAVInstance, ElectionError, VoteMultiset
from ..generators import GeneratorSpec, Tabulated, classify, expand
from ..vectors import normalize
from .approval import solve_k_approval, solve_k_veto
from .approve_veto import solve_approve_veto
from .brute import SolveResult, solve_brute_force, verified
from .two_top import solve_two_top

METHODS = ("auto", "brute", "k-approval", "k-veto", "two-top", "approve-veto")


def route(vector) -> Optional[Tuple[str, tuple]]:
    """Polynomial algorithm (name, args) that handles this exact vector, if any."""
    vec = normalize(vector)
    m = len(vec)
    if not any(vec):
        return ("trivial", ())
    if set(vec) == {0, 1}:
        ones = vec.count(1)
        if ones <= 3:
            return ("k-approval", (ones,))
        if m - ones <= 2:
            return ("k-veto", (m - ones,))
        return None
    if m >= 3 and not any(vec[2:]):
        return ("two-top", (vec[0], vec[1]))
    if m >= 3 and vec[0] == 2 and vec[-1] == 0 and all(x == 1 for x in vec[1:-1]):
        return ("approve-veto", ())
    return None


def _run(name: str, args: tuple, inst: CCAVInstance, vector) -> SolveResult:
    if name == "trivial":
        return verified(inst, vector, VoteMultiset(), "trivial")
    if name == "k-approval":
        return solve_k_approval(inst, args[0], vector)
    if name == "k-veto":
        return solve_k_veto(inst, args[0], vector)
    if name == "two-top":
        return solve_two_top(inst, *args)
    if name == "approve-veto":
        return solve_approve_veto(inst, vector)
    raise ElectionError(f"unknown method {name!r}")


def solve(inst: CCAVInstance, spec: GeneratorSpec, method: str = "auto", **brute_options) -> SolveResult:
    """Decide CCAV for ``inst`` under the family's vector at ``len(candidates)``.

    ``auto`` uses the classification of the family: hard families go to
    exhaustive search, polynomial ones to the matching algorithm.  Because the
    classification is asymptotic, the concrete vector is checked too and
    exhaustive search is used when no algorithm fits it.
    """
    if method not in METHODS:
        raise ElectionError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    vector = expand(spec, inst.m)
    if method == "brute":
        return solve_brute_force(inst, vector, **brute_options)
    found = route(vector)
    if method == "auto":
        poly = isinstance(spec, Tabulated) or classify(spec).is_poly
        if found is None or not (poly or found[0] == "trivial"):
            return solve_brute_force(inst, vector, **brute_options)
        return _run(found[0], found[1], inst, vector)
    if found is None or found[0] not in (method, "trivial"):
        raise ElectionError(f"method {method} does not apply to vector {normalize(vector)}")
    return _run(found[0], found[1], inst, vector)
