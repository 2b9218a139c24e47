"""Exhaustive CCAV oracle over sub-multisets of the unregistered votes."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Optional

from .. import kernels
from ..core import CCAVInstance, ElectionError, VoteMultiset, as_vector, evaluate, is_winner

DEFAULT_MAX_DISTINCT = 20
DEFAULT_MAX_SUBSETS = 10 ** 7


class BoundExceeded(ElectionError):
    """The enumeration would exceed the configured size limits."""


@dataclass(frozen=True)
class SolveResult:
    decision: bool
    witness: Optional[VoteMultiset]
    method: str

    def __post_init__(self):
        if self.decision and self.witness is None:
            raise ValueError("a positive result needs a witness")
        if not self.decision and self.witness is not None:
            raise ValueError("a negative result carries no witness")


class WitnessError(RuntimeError):
    """A solver produced a witness that does not make the preferred candidate win."""


def verified(inst: CCAVInstance, vector, witness: Optional[VoteMultiset], method: str) -> SolveResult:
    """Wrap a solver outcome, re-checking any witness by evaluation."""
    if witness is None:
        return SolveResult(False, None, method)
    if witness.size > inst.budget or not witness.issubset(inst.unregistered):
        raise WitnessError(f"{method}: witness is not a sub-multiset of U within budget")
    if not inst.wins_with(witness, vector):
        raise WitnessError(f"{method}: witness does not make {inst.preferred} a winner")
    return SolveResult(True, witness, method)


def count_submultisets(caps, budget: int) -> int:
    """Number of count vectors ``x <= caps`` with ``sum(x) <= budget``."""
    ways = [1] + [0] * budget
    for cap in caps:
        new = [0] * (budget + 1)
        running = 0
        for s in range(budget + 1):
            running += ways[s]
            if s - cap - 1 >= 0:
                running -= ways[s - cap - 1]
            new[s] = running
        ways = new
    return sum(ways)


def _integer_weights(vector):
    scale = lcm(*(c.denominator for c in vector))
    return [int(c * scale) for c in vector]


def solve_brute_force(inst: CCAVInstance, vector, *, max_distinct: int = DEFAULT_MAX_DISTINCT,
                      max_subsets: int = DEFAULT_MAX_SUBSETS, backend: str | None = None) -> SolveResult:
    """Decide CCAV by trying every sub-multiset of U, smallest first.

    The returned witness is the first success in size-then-lexicographic
    order over per-vote counts, so it has minimum size.
    """
    vector = as_vector(vector)
    if len(vector) != inst.m:
        raise ElectionError(f"vector length {len(vector)} != {inst.m} candidates")
    distinct = inst.unregistered.entries
    budget = min(inst.budget, inst.unregistered.size)
    if len(distinct) > max_distinct:
        raise BoundExceeded(f"{len(distinct)} distinct unregistered votes > {max_distinct}")
    caps = [min(c, budget) for _, c in distinct]
    total = count_submultisets(caps, budget)
    if total > max_subsets:
        raise BoundExceeded(f"{total} sub-multisets to enumerate > {max_subsets}")

    weights = _integer_weights(vector)
    index = {c: i for i, c in enumerate(inst.candidates)}
    base = [0] * inst.m
    for vote, count in inst.registered:
        for pos, cand in enumerate(vote):
            base[index[cand]] += count * weights[pos]
    deltas = []
    for vote, _ in distinct:
        row = [0] * inst.m
        for pos, cand in enumerate(vote):
            row[index[cand]] = weights[pos]
        deltas.append(row)

    counts = kernels.search(base, deltas, caps, index[inst.preferred], budget, backend=backend)
    if counts is None:
        return SolveResult(False, None, "brute")
    witness = VoteMultiset((vote, n) for (vote, _), n in zip(distinct, counts) if n)
    return verified(inst, vector, witness, "brute")


def solve_naive(inst: CCAVInstance, vector) -> bool:
    """Slow reference used only to cross-check the kernel in tests."""
    from itertools import product

    vector = as_vector(vector)
    distinct = inst.unregistered.entries
    for counts in product(*(range(c + 1) for _, c in distinct)):
        if sum(counts) > inst.budget:
            continue
        added = VoteMultiset((v, n) for (v, _), n in zip(distinct, counts) if n)
        scores = evaluate(inst.registered + added, vector, inst.candidates)
        if is_winner(inst.preferred, scores):
            return True
    return False
