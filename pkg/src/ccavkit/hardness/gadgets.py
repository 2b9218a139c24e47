"""Registered-vote gadgets that produce prescribed relative scores.

A *transfer* is a block of ``m`` votes: one vote and its ``m - 1`` cyclic
shifts, with two candidates swapped in the first vote.  Every candidate
gets the row sum ``A`` except the swapped pair, which moves
``alpha_k - alpha_l`` points from one to the other.  Stacking transfers
from a dummy candidate realizes any integer combination of coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence

from ..core import ElectionError, VoteMultiset, as_vector, evaluate

Targets = Sequence[Mapping[int, int]]


def default_candidates(m: int) -> tuple:
    return tuple(f"c{i}" for i in range(1, m + 1))


def transfer_votes(vector, i: int, j: int, kpos: int, lpos: int,
                   candidates: Optional[Sequence[str]] = None, times: int = 1) -> VoteMultiset:
    """``m`` votes (each ``times`` times) in which candidate ``i`` gains
    ``alpha_kpos - alpha_lpos`` over the common score and candidate ``j`` loses it.

    Indices are 1-based.
    """
    vector = as_vector(vector)
    m = len(vector)
    cands = tuple(candidates) if candidates is not None else default_candidates(m)
    if len(cands) != m:
        raise ElectionError(f"{len(cands)} candidates for a length-{m} vector")
    for val in (i, j, kpos, lpos):
        if isinstance(val, bool) or not isinstance(val, int) or not 1 <= val <= m:
            raise ElectionError(f"index {val!r} outside 1..{m}")
    if i == j or kpos == lpos:
        raise ElectionError("transfer needs i != j and kpos != lpos")
    ci, cj = cands[i - 1], cands[j - 1]
    others = [c for c in cands if c not in (ci, cj)]
    first: List[Optional[str]] = [None] * m
    first[lpos - 1], first[kpos - 1] = ci, cj
    fill = iter(others)
    first = [c if c is not None else next(fill) for c in first]
    votes = []
    current = first
    for _ in range(m):
        votes.append(tuple(current))
        current = [current[-1]] + current[:-1]
    swapped = list(votes[0])
    swapped[kpos - 1], swapped[lpos - 1] = ci, cj
    votes[0] = tuple(swapped)
    return VoteMultiset((v, times) for v in votes)


@dataclass(frozen=True)
class RealizationResult:
    votes: VoteMultiset
    offset: Fraction


def target_value(vector, target: Mapping[int, int]) -> Fraction:
    """``sum a_i * (alpha_i - alpha_m)`` for a position -> multiplier map."""
    vector = as_vector(vector)
    last = vector[-1]
    return sum((a * (vector[pos - 1] - last) for pos, a in target.items()), Fraction(0))


def realize_scores(vector, targets: Targets, guard_k: int,
                   candidates: Optional[Sequence[str]] = None) -> RealizationResult:
    """Votes whose scores are ``offset + sum a^c_i (alpha_i - alpha_m)`` for every
    non-dummy candidate ``c``, with the dummy (last candidate) trailing every
    other candidate by more than ``guard_k * alpha_1``.

    ``targets[c]`` maps 1-based positions to signed multipliers for the
    ``c``-th candidate; there is one map per candidate except the dummy.
    """
    vector = as_vector(vector)
    m = len(vector)
    if m < 3:
        raise ElectionError("score realization needs at least 3 candidates")
    if vector.is_trivial():
        raise ElectionError("a trivial vector cannot separate the dummy")
    cands = tuple(candidates) if candidates is not None else default_candidates(m)
    if len(cands) != m:
        raise ElectionError(f"{len(cands)} candidates for a length-{m} vector")
    if len(targets) != m - 1:
        raise ElectionError(f"need targets for {m - 1} candidates, got {len(targets)}")
    if isinstance(guard_k, bool) or not isinstance(guard_k, int) or guard_k < 0:
        raise ElectionError("guard_k must be a non-negative integer")

    # number of times alpha_pos - alpha_m is moved from the dummy to each candidate
    moves: Dict[tuple, int] = {}
    for c, target in enumerate(targets, start=1):
        for pos, a in target.items():
            if isinstance(a, bool) or not isinstance(a, int) or not 1 <= pos <= m:
                raise ElectionError(f"bad target entry {pos}: {a!r}")
            if a == 0 or pos == m:
                continue
            receivers = [c] if a > 0 else [d for d in range(1, m) if d != c]
            for d in receivers:
                moves[(d, pos)] = moves.get((d, pos), 0) + abs(a)
    want = [target_value(vector, t) for t in targets]
    margin = guard_k * vector[0]

    guard = guard_k + 1
    while True:
        plan = dict(moves)
        for c in range(1, m):
            plan[(c, 1)] = plan.get((c, 1), 0) + guard
        parts = []
        for (c, pos), times in sorted(plan.items()):
            parts.extend(transfer_votes(vector, c, m, pos, m, cands, times))
        votes = VoteMultiset(parts)
        scores = evaluate(votes, vector, cands)
        if all(scores[c] > scores[cands[-1]] + margin for c in cands[:-1]):
            break
        # only reachable when alpha_m > 0: each extra transfer widens the gap
        guard *= 2

    offset = scores[cands[0]] - want[0]
    for c, w in zip(cands[:-1], want):
        if scores[c] != offset + w:
            raise ElectionError(f"realized score of {c} is off; construction bug")
    return RealizationResult(votes, offset)
