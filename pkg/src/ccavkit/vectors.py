"""Normal forms, equivalence and purity of scoring vectors."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Optional, Sequence, Tuple

from .core import ElectionError, VoteMultiset, as_vector, evaluate, winners

NormalizedVector = Tuple[int, ...]


def normalize(v) -> NormalizedVector:
    """Shift so the last coefficient is 0, clear denominators, divide by the gcd.

    The all-equal vector maps to all zeros.
    """
    v = as_vector(v)
    shifted = [c - v[-1] for c in v]
    denom = reduce(lcm, (c.denominator for c in shifted if c), 1)
    ints = [int(c * denom) for c in shifted]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def equivalent(v1, v2) -> bool:
    """Same winner sets on every election, i.e. equal normal forms."""
    v1, v2 = as_vector(v1), as_vector(v2)
    if len(v1) != len(v2):
        raise ElectionError(f"length mismatch: {len(v1)} vs {len(v2)}")
    return normalize(v1) == normalize(v2)


class DistinguishError(RuntimeError):
    """The separating election failed its own verification."""


def _dummies(m: int):
    return tuple(f"d{i}" for i in range(1, m - 1))


def distinguish(v1, v2) -> Optional[VoteMultiset]:
    """Build an election on which ``v1`` and ``v2`` have different winner sets.

    Returns ``None`` for equivalent vectors.  Candidates are ``a``, ``b`` and
    ``d1 .. d(m-2)``.  The output is re-evaluated under both input vectors
    before it is returned.
    """
    v1, v2 = as_vector(v1), as_vector(v2)
    if len(v1) != len(v2):
        raise ElectionError(f"length mismatch: {len(v1)} vs {len(v2)}")
    A, A2 = normalize(v1), normalize(v2)
    if A == A2:
        return None
    m = len(A)
    cands = ("a", "b") + _dummies(m)
    if m == 2 or A[0] == 0 or A2[0] == 0:
        # one side is trivial: a single vote has a unique loser under the other
        votes = VoteMultiset([cands])
    else:
        votes = _aligned_padding_election(A, A2)
    _verify_distinguishes(votes, v1, v2, cands)
    return votes


def _aligned_padding_election(A: NormalizedVector, A2: NormalizedVector) -> VoteMultiset:
    m = len(A)
    B = [x * A2[0] for x in A]
    B2 = [x * A[0] for x in A2]
    gamma = next(i for i in range(m) if B[i] != B2[i])
    if B[gamma] < B2[gamma]:
        B, B2 = B2, B
    beta1, beta_gamma = B[0], B[gamma]
    H = 2 * beta1
    dummies = list(_dummies(m))
    entries = []
    for i in range(m - 2):
        rot = tuple(dummies[i:] + dummies[:i])
        entries.append((("a", "b") + rot, H))
        entries.append((("b", "a") + rot, H))
    # a first, b last, dummies in order between
    entries.append((("a",) + tuple(dummies) + ("b",), beta_gamma))
    # b at position gamma, a last
    middle = list(dummies)
    top = middle[:gamma] + ["b"] + middle[gamma:]
    entries.append((tuple(top) + ("a",), beta1))
    return VoteMultiset(entries)


def _verify_distinguishes(votes, v1, v2, cands) -> None:
    w1 = winners(evaluate(votes, v1, cands))
    w2 = winners(evaluate(votes, v2, cands))
    if w1 == w2:
        raise DistinguishError(
            f"construction failed to separate {v1} and {v2}: both give {sorted(w1)}"
        )


def _deletions(vec: Sequence[Fraction]):
    for i in range(len(vec)):
        yield tuple(vec[:i]) + tuple(vec[i + 1:])


def _check_family(fam) -> list:
    vecs = [as_vector(v) for v in fam]
    for prev, cur in zip(vecs, vecs[1:]):
        if len(cur) != len(prev) + 1:
            raise ElectionError("family lengths must increase by exactly one")
    return vecs


def check_pure(fam) -> bool:
    """Each vector minus one coefficient equals its predecessor exactly."""
    vecs = _check_family(fam)
    return all(
        any(d == prev.coefficients for d in _deletions(cur.coefficients))
        for prev, cur in zip(vecs, vecs[1:])
    )


def check_flexible_pure(fam) -> bool:
    """Each vector minus one coefficient is equivalent to its predecessor."""
    vecs = _check_family(fam)
    for prev, cur in zip(vecs, vecs[1:]):
        target = normalize(prev)
        if not any(normalize(d) == target for d in _deletions(cur.coefficients)):
            return False
    return True
