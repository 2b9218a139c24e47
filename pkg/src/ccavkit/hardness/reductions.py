"""Reductions from three-dimensional matching to CCAV.

Each builder returns a :class:`Reduction` holding the CCAV instance, the
integer vector it is meant to be solved under, and the relative score table
that the registered votes realize (scores minus a common offset).  Positions
in score targets are 1-based, so ``{1: k, 4: -1}`` means
``k * alpha_1 - alpha_4``.  Filler candidates inside a vote follow
lexicographic order of their names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from ..core import CCAVInstance, ElectionError, VoteMultiset, as_fraction
from ..generators import GeneratorSpec, HardCase, Tabulated, classify, expand
from ..vectors import normalize
from .gadgets import realize_scores, target_value
from .threedm import ThreeDMInstance


class ReductionError(ElectionError):
    """Inputs violate a reduction's preconditions."""


@dataclass(frozen=True)
class Reduction:
    instance: CCAVInstance
    vector: Tuple[int, ...]
    kind: str
    condition_holds: bool = True
    relative_scores: Mapping[str, Fraction] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "condition_holds": self.condition_holds,
            "num_candidates": self.instance.m,
        }


def _build(kind: str, vector: Sequence[int], candidates: List[str], targets: Dict[str, Mapping[int, int]],
           dummy: str, guard_k: int, preferred: str, unregistered: List[tuple], budget: int,
           condition_holds: bool = True) -> Reduction:
    """Realize ``targets`` (every candidate except ``dummy``) and assemble the instance."""
    order = [c for c in candidates if c != dummy] + [dummy]
    result = realize_scores(vector, [targets.get(c, {}) for c in order[:-1]], guard_k, order)
    inst = CCAVInstance(tuple(candidates), result.votes, VoteMultiset(unregistered), preferred, budget)
    table = {c: target_value(vector, targets.get(c, {})) for c in order[:-1]}
    return Reduction(inst, tuple(vector), kind, condition_holds, table)


def _filled(front: Sequence[str], back: Sequence[str], candidates: Sequence[str]) -> tuple:
    used = set(front) | set(back)
    middle = sorted(c for c in candidates if c not in used)
    return tuple(front) + tuple(middle) + tuple(back)


def _spec_vector(spec: GeneratorSpec, m: int) -> Tuple[int, ...]:
    return normalize(expand(spec, m))


def _check_distinct_names(inst: ThreeDMInstance, reserved: Sequence[str]):
    clash = set(inst.x + inst.y + inst.z) & set(reserved)
    if clash:
        raise ReductionError(f"element names clash with construction candidates: {sorted(clash)}")


# -- many different coefficients: m = 6k -------------------------------------

def _six_k_setup(inst: ThreeDMInstance):
    k = inst.k
    if k < 2:
        raise ReductionError("the 6k-candidate reductions need k >= 2 (at least three dummies)")
    m = 6 * k
    s = list(inst.x + inst.y + inst.z)
    dummies = [f"d{i}" for i in range(1, m - 3 * k)]
    _check_distinct_names(inst, ["p"] + dummies)
    return k, m, s, dummies


def veto_style_condition(vector: Sequence[int], k: int) -> bool:
    m = len(vector)
    return vector[3 * k] > vector[m - 3]


def approval_style_condition(vector: Sequence[int], k: int) -> bool:
    m = len(vector)
    return vector[3] > vector[m - 3 * k]


def reduce_veto_style(spec: GeneratorSpec, inst: ThreeDMInstance) -> Reduction:
    """Votes put ``p`` first and veto the three elements of their triple.

    The equivalence with the 3DM instance is only claimed when
    ``alpha_{3k+1} > alpha_{m-2}``; ``condition_holds`` records whether it does.
    """
    k, m, s, dummies = _six_k_setup(inst)
    vector = _spec_vector(spec, m)
    index = {c: i for i, c in enumerate(s, start=1)}
    targets: Dict[str, Mapping[int, int]] = {"p": {}}
    for c, i in index.items():
        r = 2 - (i - 1) // k  # 2, 1, 0 for X, Y, Z
        targets[c] = {1: k, 1 + i: -(k - 1), m - r: -1}
    for d in dummies[:-1]:
        targets[d] = {1: -(k + 1)}
    unregistered = []
    for t in inst.triples:
        middle = [dummies[t.index(c)] if c in t else c for c in s]
        vote = ("p",) + tuple(middle) + tuple(dummies[3:]) + t
        unregistered.append(vote)
    candidates = ["p"] + s + dummies
    return _build("veto-style", vector, candidates, targets, dummies[-1], k, "p",
                  unregistered, k, veto_style_condition(vector, k))


def reduce_approval_style(spec: GeneratorSpec, inst: ThreeDMInstance) -> Reduction:
    """Votes put ``p`` first followed by the three elements of their triple.

    The equivalence is only claimed when ``alpha_4 > alpha_{m-3k+1}``.
    """
    k, m, s, dummies = _six_k_setup(inst)
    vector = _spec_vector(spec, m)
    index = {c: i for i, c in enumerate(s, start=1)}
    targets: Dict[str, Mapping[int, int]] = {"p": {}}
    for c, i in index.items():
        r = 1 + (i - 1) // k  # 1, 2, 3 for X, Y, Z
        targets[c] = {1: k, m - 3 * k + i: -(k - 1), 1 + r: -1}
    for d in dummies[:-1]:
        targets[d] = {1: -(k + 1)}
    unregistered = []
    for t in inst.triples:
        tail = [dummies[t.index(c)] if c in t else c for c in s]
        vote = ("p",) + t + tuple(dummies[3:]) + tuple(tail)
        unregistered.append(vote)
    candidates = ["p"] + s + dummies
    return _build("approval-style", vector, candidates, targets, dummies[-1], k, "p",
                  unregistered, k, approval_style_condition(vector, k))


def reduce_auto(spec: GeneratorSpec, inst: ThreeDMInstance) -> Reduction:
    """Pick whichever 6k-candidate reduction applies to the family at m = 6k."""
    if isinstance(spec, Tabulated) or classify(spec).hard is not HardCase.SPREAD_MIDDLE:
        raise ReductionError("automatic reduction needs a family with alpha_4 > alpha_(m-2)")
    k = inst.k
    if k < 2:
        raise ReductionError("the 6k-candidate reductions need k >= 2 (at least three dummies)")
    vector = _spec_vector(spec, 6 * k)
    if veto_style_condition(vector, k):
        return reduce_veto_style(spec, inst)
    if approval_style_condition(vector, k):
        return reduce_approval_style(spec, inst)
    raise RuntimeError(f"neither applicability condition holds at m={6 * k} for vector {vector}")


# -- few different coefficients ---------------------------------------------

def _coprime(values: Sequence) -> Tuple[int, ...]:
    """Scale non-negative rationals to coprime integers."""
    fracs = [as_fraction(v) for v in values]
    return normalize(fracs + [Fraction(0)])[:-1]


def _triple_names(inst: ThreeDMInstance):
    return [f"S{i}" for i in range(1, inst.n + 1)]


def reduce_three_coeff(alpha, beta, gamma, inst: ThreeDMInstance) -> Reduction:
    """Vector (alpha, beta, gamma, 0, ..., 0) with alpha >= beta >= gamma > 0, alpha != gamma."""
    a, b, g = (as_fraction(v) for v in (alpha, beta, gamma))
    if not (a >= b >= g > 0 and a != g):
        raise ReductionError("need alpha >= beta >= gamma > 0 and alpha != gamma")
    if inst.n == 0:
        # with no S_i' nothing forces p to add votes, and p may already tie X, Y, Z
        raise ReductionError("the three-coefficient reduction needs at least one triple")
    a, b, g = _coprime((a, b, g))
    k, n = inst.k, inst.n
    names = _triple_names(inst)
    primes = [f"{s}'" for s in names]
    _check_distinct_names(inst, ["p", "d"] + names + primes)
    candidates = ["p"] + list(inst.x + inst.y + inst.z) + names + primes + ["d"]
    m = len(candidates)
    vector = (a, b, g) + (0,) * (m - 3)
    big = n + 2 * k
    targets: Dict[str, Mapping[int, int]] = {"p": {1: 1, 3: 2}}
    for c in inst.x + inst.y + inst.z:
        targets[c] = {2: big, 3: 2}
    low = {1: 1} if a <= 2 * g else {3: 2}
    for s, s2 in zip(names, primes):
        targets[s] = {2: big, **low}
        targets[s2] = {2: big, 1: 1, 3: 1}
    unregistered = []
    for (x, y, z), s, s2 in zip(inst.triples, names, primes):
        unregistered.append(_filled([x, "p", s], [], candidates))
        unregistered.append(_filled([y, "p", s], [], candidates))
        unregistered.append(_filled([z, "p", s2], [], candidates))
        unregistered.append(_filled([s, "p", s2], [], candidates))
    return _build("three-coeff", vector, candidates, targets, "d", big, "p", unregistered, big)


def _shape(first: int, second: int, middle: int, penultimate: int, m: int) -> Tuple[int, ...]:
    return (first, second) + (middle,) * (m - 4) + (penultimate, 0)


def reduce_case1(a1, a2, a3, a4, a5, inst: ThreeDMInstance) -> Reduction:
    """Vector (a1, a2, a3, a4, ..., a4, a5, 0) with a2 > a4 > 0."""
    vals = [as_fraction(v) for v in (a1, a2, a3, a4, a5)]
    if not (vals[0] >= vals[1] >= vals[2] >= vals[3] >= vals[4] >= 0):
        raise ReductionError("coefficients must be non-increasing and non-negative")
    if not vals[1] > vals[3] > 0:
        raise ReductionError("need alpha_2 > alpha_4 > 0")
    a1, a2, a3, a4, a5 = _coprime(vals)
    k = inst.k
    _check_distinct_names(inst, ["p", "d1", "d2"])
    elements = list(inst.x + inst.y + inst.z)
    candidates = ["p"] + elements + ["d1", "d2"]
    m = len(candidates)
    vector = (a1, a2, a3) + (a4,) * (m - 5) + (a5, 0)
    targets: Dict[str, Mapping[int, int]] = {"p": {4: -k}, "d1": {1: -(k + 1), 4: -k}}
    for x in inst.x:
        targets[x] = {1: -1, 4: -(k - 1)}
    for y in inst.y:
        targets[y] = {2: -1, 4: -(k - 1)}
    for z in inst.z:
        targets[z] = {4: -(k - 1)}
    unregistered = [_filled([x, y, "d1", "p"], ["d2", z], candidates) for x, y, z in inst.triples]
    return _build("case1", vector, candidates, targets, "d2", k, "p", unregistered, k)


def reduce_case2(a1, a2, inst: ThreeDMInstance) -> Reduction:
    """Vector (a1, a2, ..., a2, 0) with a2 > 0 and a1 not in {a2, 2 a2}."""
    f1, f2 = as_fraction(a1), as_fraction(a2)
    if not f1 >= f2 > 0:
        raise ReductionError("need alpha_1 >= alpha_2 > 0")
    if f1 in (f2, 2 * f2):
        raise ReductionError("alpha_1 must differ from alpha_2 and 2 * alpha_2")
    a1, a2 = _coprime((f1, f2))
    k = inst.k
    names = _triple_names(inst)
    _check_distinct_names(inst, ["p", "d"] + names)
    candidates = ["p"] + list(inst.x + inst.y + inst.z) + names + ["d"]
    m = len(candidates)
    vector = _shape(a1, a2, a2, a2, m)
    targets: Dict[str, Mapping[int, int]] = {"p": {}}
    unregistered = []
    if a1 > 2 * a2:
        kind = "case2-wide"
        u, v = _bezout(a1, a2)  # u * a1 + v * a2 == 1
        for c in inst.y:
            targets[c] = {2: 1}
        for c in inst.x + inst.z:
            targets[c] = {1: -1, 2: 1}
        for s in names:
            targets[s] = {1: u - 1, 2: v + 2}
        for (x, y, z), s in zip(inst.triples, names):
            unregistered.append(_filled([s], [y], candidates))
            unregistered.append(_filled([z], [s], candidates))
            unregistered.append(_filled([x], [s], candidates))
    else:
        kind = "case2-narrow"
        for c in inst.y:
            targets[c] = {1: -1, 2: 1}
        for c in inst.x + inst.z:
            targets[c] = {2: 1}
        low = {} if 3 * a2 >= 2 * a1 else {1: -2, 2: 3}
        for s in names:
            targets[s] = low
        for (x, y, z), s in zip(inst.triples, names):
            unregistered.append(_filled([y], [s], candidates))
            unregistered.append(_filled([s], [x], candidates))
            unregistered.append(_filled([s], [z], candidates))
    return _build(kind, vector, candidates, targets, "d", 3 * k, "p", unregistered, 3 * k)


def _bezout(a: int, b: int) -> Tuple[int, int]:
    """Integers (u, v) with u * a + v * b == gcd(a, b)."""
    old_r, r, old_s, s_, old_t, t = a, b, 1, 0, 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s_ = s_, old_s - q * s_
        old_t, t = t, old_t - q * t
    return old_s, old_t


def reduce_case3(a1, a2, a5, inst: ThreeDMInstance) -> Reduction:
    """Vector (a1, a2, ..., a2, a5, 0) with a1 > a2 > a5."""
    f1, f2, f5 = (as_fraction(v) for v in (a1, a2, a5))
    if not f1 > f2 > f5 >= 0:
        raise ReductionError("need alpha_1 > alpha_2 > alpha_5 >= 0")
    a1, a2, a5 = _coprime((f1, f2, f5))
    k = inst.k
    _check_distinct_names(inst, ["p", "d"])
    candidates = ["p"] + list(inst.x + inst.y + inst.z) + ["d"]
    m = len(candidates)
    vector = _shape(a1, a2, a2, a5, m)
    targets: Dict[str, Mapping[int, int]] = {"p": {}}
    for c in inst.x:
        targets[c] = {1: -1, 2: 1}
    for c in inst.y:
        targets[c] = {2: 1, m - 1: -1}
    for c in inst.z:
        targets[c] = {2: 1}
    unregistered = [_filled([x], [y, z], candidates) for x, y, z in inst.triples]
    return _build("case3", vector, candidates, targets, "d", k, "p", unregistered, k)


def reduce_case4(a1, a5, inst: ThreeDMInstance) -> Reduction:
    """Vector (a1, ..., a1, a5, 0) with a1 > a5 > 0."""
    f1, f5 = as_fraction(a1), as_fraction(a5)
    if not f1 > f5 > 0:
        raise ReductionError("need alpha_1 > alpha_5 > 0")
    a1, a5 = _coprime((f1, f5))
    k, n = inst.k, inst.n
    names = _triple_names(inst)
    primes = [f"{s}'" for s in names]
    _check_distinct_names(inst, ["p", "d"] + names + primes)
    candidates = ["p"] + list(inst.x + inst.y + inst.z) + names + primes + ["d"]
    m = len(candidates)
    vector = _shape(a1, a1, a1, a5, m)
    targets: Dict[str, Mapping[int, int]] = {"p": {}}
    for c in inst.x + inst.y + inst.z:
        targets[c] = {1: 1}
    low = {1: 1} if a1 <= 2 * (a1 - a5) else {1: 2, m - 1: -2}
    for s, s2 in zip(names, primes):
        targets[s] = low
        targets[s2] = {1: 1, m - 1: -1}
    unregistered = []
    for (x, y, z), s, s2 in zip(inst.triples, names, primes):
        unregistered.append(_filled([], [s2, s], candidates))
        unregistered.append(_filled([], [s, x], candidates))
        unregistered.append(_filled([], [s, y], candidates))
        unregistered.append(_filled([], [s2, z], candidates))
    budget = n + 2 * k
    return _build("case4", vector, candidates, targets, "d", budget, "p", unregistered, budget)
