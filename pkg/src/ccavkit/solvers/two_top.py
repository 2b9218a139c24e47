"""Polynomial CCAV for vectors (alpha, beta, 0, ..., 0) with alpha > beta > 0.

Only voters ranking ``p`` first (group V1) or second (group V2) matter, and
within each group a voter is determined by the one rival it scores.  With
``ell`` the least integer such that ``ell * (alpha - beta) >= beta``,
swapping ``ell`` V2 voters for ``ell`` V1 voters with distinct rivals never
hurts ``p``.  So some solution either uses fewer than ``ell`` V2 voters, or
leaves fewer than ``ell`` distinct V1 rivals with unused voters.  Both
families are small for fixed coefficients and each member is completed
greedily from a single group.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import ceil, floor
from typing import Dict, List, Optional

from ..core import CCAVInstance, ElectionError, VoteMultiset, as_fraction, evaluate
from .approval import solve_k_approval
from .brute import SolveResult, solve_brute_force, verified


def threshold(alpha, beta) -> int:
    """Least ``ell`` with ``ell * (alpha - beta) >= beta``."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    if not alpha > beta > 0:
        raise ElectionError("threshold needs alpha > beta > 0")
    return max(1, ceil(beta / (alpha - beta)))


def two_top_vector(alpha, beta, m: int) -> List[Fraction]:
    return ([as_fraction(alpha), as_fraction(beta)] + [Fraction(0)] * m)[:m]


class _Groups:
    """Useful voters grouped by the rival they score."""

    def __init__(self, inst: CCAVInstance):
        p = inst.preferred
        self.first: Dict[str, list] = {}   # p first, keyed by second place
        self.second: Dict[str, list] = {}  # p second, keyed by first place
        for vote, count in inst.unregistered:
            if len(vote) < 2:
                continue
            if vote[0] == p:
                self.first.setdefault(vote[1], []).append((vote, count))
            elif vote[1] == p:
                self.second.setdefault(vote[0], []).append((vote, count))

    @staticmethod
    def avail(group) -> Dict[str, int]:
        return {c: sum(n for _, n in votes) for c, votes in group.items()}

    @staticmethod
    def take(group, amounts: Dict[str, int]) -> list:
        out = []
        for c, need in amounts.items():
            for vote, count in group.get(c, ()):
                if need <= 0:
                    break
                use = min(need, count)
                out.append((vote, use))
                need -= use
        return out


def _extend(scores, p, gain_p, gain_rival, avail, room) -> Optional[Dict[str, int]]:
    """Greedy completion from one group: add ``j <= room`` voters, each giving
    ``gain_p`` to ``p`` and ``gain_rival`` to the rival it is keyed by."""
    for j in range(room + 1):
        final = scores[p] + j * gain_p
        slack = {}
        ok = True
        for c, s in scores.items():
            if c == p:
                continue
            if s > final:
                ok = False
                break
            slack[c] = min(avail.get(c, 0), floor((final - s) / gain_rival))
        if not ok or sum(slack.values()) < j:
            continue
        plan, left = {}, j
        for c, n in slack.items():
            if left == 0:
                break
            use = min(n, left)
            if use:
                plan[c] = use
                left -= use
        return plan
    return None


def _add(scores, amounts, p, gain_p, rival_gain):
    out = dict(scores)
    out[p] += sum(amounts.values()) * gain_p
    for c, cnt in amounts.items():
        out[c] += cnt * rival_gain
    return out


def solve_two_top(inst: CCAVInstance, alpha, beta) -> SolveResult:
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    if not alpha >= beta >= 0 or alpha == 0:
        raise ElectionError(f"two-top solver needs alpha >= beta >= 0, alpha > 0; got {alpha}, {beta}")
    if alpha == beta:
        res = solve_k_approval(inst, 2)
        return SolveResult(res.decision, res.witness, "two-top")
    if beta == 0:
        res = solve_k_approval(inst, 1)
        return SolveResult(res.decision, res.witness, "two-top")
    m, p, k = inst.m, inst.preferred, inst.budget
    vector = two_top_vector(alpha, beta, m)
    ell = threshold(alpha, beta)
    groups = _Groups(inst)

    if k < ell:
        # few additions: enumerate sub-multisets of the useful groups
        reps = []
        for side in (groups.first, groups.second):
            for c, votes in side.items():
                reps.append((votes[0][0], sum(n for _, n in votes), side, c))
        small = CCAVInstance(inst.candidates, inst.registered,
                             VoteMultiset((v, n) for v, n, _, _ in reps), p, k)
        res = solve_brute_force(small, vector, max_distinct=len(reps), max_subsets=10 ** 9)
        if not res.decision:
            return SolveResult(False, None, "two-top")
        picks = []
        for vote, _, side, c in reps:
            n = res.witness.count(vote)
            if n:
                picks += _Groups.take(side, {c: n})
        return verified(inst, vector, VoteMultiset(picks), "two-top")

    base = {c: s for c, s in evaluate(inst.registered, vector, inst.candidates).items()}
    avail1 = _Groups.avail(groups.first)
    avail2 = _Groups.avail(groups.second)

    def finish(used1, used2):
        picks = _Groups.take(groups.first, used1) + _Groups.take(groups.second, used2)
        return verified(inst, vector, VoteMultiset(picks), "two-top")

    # fewer than ell voters from V2, the rest from V1
    rivals2 = sorted(avail2)
    for size in range(min(ell - 1, k) + 1):
        for combo in combinations_with_replacement(rivals2, size):
            used2: Dict[str, int] = {}
            for c in combo:
                used2[c] = used2.get(c, 0) + 1
            if any(n > avail2[c] for c, n in used2.items()):
                continue
            scores = _add(base, used2, p, beta, alpha)
            plan = _extend(scores, p, alpha, beta, avail1, k - size)
            if plan is not None:
                return finish(plan, used2)

    # fewer than ell distinct V1 rivals left with unused voters
    rivals1 = sorted(avail1)
    for size in range(min(ell - 1, len(rivals1)) + 1):
        for held in combinations(rivals1, size):
            for unused in product(*(range(1, avail1[c] + 1) for c in held)):
                used1 = dict(avail1)
                for c, n in zip(held, unused):
                    used1[c] -= n
                used1 = {c: n for c, n in used1.items() if n}
                taken = sum(used1.values())
                if taken > k:
                    continue
                scores = _add(base, used1, p, alpha, beta)
                plan = _extend(scores, p, beta, alpha, avail2, k - taken)
                if plan is not None:
                    return finish(used1, plan)
    return SolveResult(False, None, "two-top")
