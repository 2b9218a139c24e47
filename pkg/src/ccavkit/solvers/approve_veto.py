"""Polynomial CCAV for the vector (2, 1, ..., 1, 0) via min-cost flow.

Scores are taken under the equivalent vector (1, 0, ..., 0, -1), so a vote
approves its first candidate and vetoes its last.  Votes ranking ``p`` first
are added up front (greedily when there are more than the budget allows);
votes ranking ``p`` last never help.  Every other vote ``c2 > ... > c1``
moves one point from ``c1`` to ``c2``, which is a unit of flow on the arc
``c1 -> c2``.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from ..core import CCAVInstance, ElectionError, VoteMultiset, evaluate
from ..vectors import equivalent
from .brute import SolveResult, verified
from .flow import Arc, FlowNetwork, min_cost_flow


def approve_veto_vector(m: int) -> List[int]:
    return [1] + [0] * (m - 2) + [-1]


def _greedy_first(candidates: list, scores: Dict[str, int], take: int) -> list:
    """Pick ``take`` votes one at a time, each time the one whose last-ranked
    candidate has the highest current score (ties: smallest vote)."""
    pool = {}
    for vote, count in candidates:
        pool[vote] = pool.get(vote, 0) + count
    scores = dict(scores)
    picks = []
    for _ in range(take):
        vote = min((v for v, n in pool.items() if n), key=lambda v: (-scores[v[-1]], v))
        pool[vote] -= 1
        scores[vote[0]] += 1
        scores[vote[-1]] -= 1
        picks.append(vote)
    return picks


def solve_approve_veto(inst: CCAVInstance, vector=None, offset: Optional[int] = None) -> SolveResult:
    m, p = inst.m, inst.preferred
    if m < 3:
        raise ElectionError("approve-veto solver needs at least 3 candidates")
    own = approve_veto_vector(m)
    if vector is not None and not equivalent(vector, own):
        raise ElectionError(f"vector {tuple(vector)} is not equivalent to (2,1,...,1,0)")
    scores = {c: int(s) for c, s in evaluate(inst.registered, own, inst.candidates).items()}

    leading = [(v, n) for v, n in inst.unregistered if v[0] == p]
    available = sum(n for _, n in leading)
    if available <= inst.budget:
        first = [(v, n) for v, n in leading]
    else:
        first = _greedy_first(leading, scores, inst.budget)
    first_ms = VoteMultiset(first)
    for vote, n in first_ms:
        scores[vote[0]] += n
        scores[vote[-1]] -= n
    room = inst.budget - first_ms.size

    rivals = [c for c in inst.candidates if c != p]
    lowest = min(scores[c] for c in inst.candidates)
    floor_offset = max(0, room - lowest)
    if offset is None:
        offset = floor_offset
    elif offset < floor_offset:
        raise ElectionError(f"offset {offset} too small; need at least {floor_offset}")

    movers: Dict[tuple, list] = {}
    for vote, n in inst.unregistered:
        if p in (vote[0], vote[-1]):
            continue
        movers.setdefault((vote[-1], vote[0]), []).append((vote, n))
    arcs = [Arc("s", c, scores[c] + offset, 0) for c in rivals]
    arcs += [Arc(c, "t", scores[p] + offset, 0) for c in rivals]
    pairs = sorted(movers)
    arcs += [Arc(a, b, sum(n for _, n in movers[(a, b)]), 1) for a, b in pairs]
    net = FlowNetwork(["s", "t"] + rivals, arcs, "s", "t")
    target = sum(scores[c] + offset for c in rivals)
    result = min_cost_flow(net, target)
    if result is None or result[0] > room:
        return SolveResult(False, None, "approve-veto")

    picks = list(first_ms)
    flows = result[1][2 * len(rivals):]
    for pair, amount in zip(pairs, flows):
        for vote, n in movers[pair]:
            if amount <= 0:
                break
            use = min(n, amount)
            picks.append((vote, use))
            amount -= use
    return verified(inst, own, VoteMultiset(picks), "approve-veto")
