"""Election model and exact positional scoring.

Votes are strict rankings (tuples of candidate ids, most preferred first).
Vote multisets keep ``(vote, count)`` pairs and never expand multiplicities.
All scores are :class:`fractions.Fraction` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Vote = Tuple[str, ...]
Rational = Union[int, Fraction, str]
ScoreMap = dict  # candidate id -> Fraction


class ElectionError(ValueError):
    """Raised on malformed votes, vectors or instances."""


def as_fraction(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into an exact Fraction.

    Floats are rejected on purpose: gadget scores rely on exact equalities.
    """
    if isinstance(value, bool):
        raise ElectionError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ElectionError(f"not a rational: {value!r}") from exc
    raise ElectionError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class ScoringVector:
    """Non-increasing sequence of exact rational coefficients."""

    coefficients: Tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Rational]):
        coeffs = tuple(as_fraction(c) for c in coefficients)
        if not coeffs:
            raise ElectionError("scoring vector must have at least one coefficient")
        for i in range(len(coeffs) - 1):
            if coeffs[i] < coeffs[i + 1]:
                raise ElectionError(
                    f"scoring vector is not non-increasing at position {i + 1}: {_fmt(coeffs)}"
                )
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, idx):
        return self.coefficients[idx]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coefficients)

    def __repr__(self) -> str:
        return f"ScoringVector({_fmt(self.coefficients)})"

    def is_trivial(self) -> bool:
        return self.coefficients[0] == self.coefficients[-1]


def _fmt(coeffs) -> str:
    return "(" + ", ".join(str(c) for c in coeffs) + ")"


def as_vector(v) -> ScoringVector:
    return v if isinstance(v, ScoringVector) else ScoringVector(v)


class VoteMultiset:
    """Immutable multiset of votes stored as ordered ``(vote, count)`` pairs.

    Identical votes are merged; first-insertion order is kept so that
    constructions are deterministic.
    """

    __slots__ = ("_entries", "_size")

    def __init__(self, entries: Iterable = ()):
        acc: dict = {}
        for item in entries:
            if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], int) \
                    and not isinstance(item[0], str):
                vote, count = item
            else:
                vote, count = item, 1
            vote = tuple(vote)
            if isinstance(count, bool) or not isinstance(count, int) or count < 1:
                raise ElectionError(f"vote count must be a positive integer, got {count!r}")
            acc[vote] = acc.get(vote, 0) + count
        self._entries = tuple(acc.items())
        self._size = sum(acc.values())

    @classmethod
    def from_counts(cls, counts: Mapping[Vote, int]) -> "VoteMultiset":
        return cls((v, c) for v, c in counts.items() if c > 0)

    @property
    def entries(self) -> Tuple[Tuple[Vote, int], ...]:
        return self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        """Number of distinct votes."""
        return len(self._entries)

    @property
    def size(self) -> int:
        """Total number of votes, counting multiplicity."""
        return self._size

    def count(self, vote: Sequence[str]) -> int:
        vote = tuple(vote)
        for v, c in self._entries:
            if v == vote:
                return c
        return 0

    def as_dict(self) -> dict:
        return dict(self._entries)

    def __add__(self, other: "VoteMultiset") -> "VoteMultiset":
        return VoteMultiset(self._entries + tuple(other))

    def issubset(self, other: "VoteMultiset") -> bool:
        theirs = other.as_dict()
        return all(theirs.get(v, 0) >= c for v, c in self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VoteMultiset):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self) -> int:
        return hash(frozenset(self._entries))

    def __repr__(self) -> str:
        parts = [">".join(v) + (f" x{c}" if c > 1 else "") for v, c in self._entries]
        return "VoteMultiset([" + ", ".join(parts) + "])"


def check_vote(vote: Sequence[str], candidates: Sequence[str]) -> None:
    if len(vote) != len(candidates) or set(vote) != set(candidates):
        raise ElectionError(f"vote {list(vote)} is not a permutation of {list(candidates)}")


def check_candidates(candidates: Sequence[str]) -> None:
    if not candidates:
        raise ElectionError("candidate list is empty")
    for c in candidates:
        if not isinstance(c, str) or not c:
            raise ElectionError(f"candidate id must be a non-empty string, got {c!r}")
    if len(set(candidates)) != len(candidates):
        raise ElectionError("duplicate candidate ids")


def evaluate(votes: VoteMultiset, vector, candidates: Sequence[str] | None = None) -> ScoreMap:
    """Score every candidate: ``count(v) * alpha[pos(c, v)]`` summed over votes.

    ``candidates`` fixes the domain of the result; when omitted it is taken
    from the first vote (an empty multiset then yields an empty map).
    """
    vector = as_vector(vector)
    if candidates is None:
        candidates = votes.entries[0][0] if len(votes) else ()
    candidates = tuple(candidates)
    if candidates and len(vector) != len(candidates):
        raise ElectionError(
            f"vector has length {len(vector)} but there are {len(candidates)} candidates"
        )
    scores = {c: Fraction(0) for c in candidates}
    for vote, count in votes:
        check_vote(vote, candidates)
        for pos, cand in enumerate(vote):
            scores[cand] += count * vector[pos]
    return scores


def winners(scores: Mapping[str, Fraction]) -> frozenset:
    """All candidates attaining the maximum score (co-winner model)."""
    if not scores:
        raise ElectionError("cannot determine winners of an empty score map")
    top = max(scores.values())
    return frozenset(c for c, s in scores.items() if s == top)


def is_winner(candidate: str, scores: Mapping[str, Fraction]) -> bool:
    top = max(scores.values())
    return scores[candidate] == top


@dataclass(frozen=True)
class Election:
    candidates: Tuple[str, ...]
    votes: VoteMultiset = field(default_factory=VoteMultiset)

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        check_candidates(self.candidates)
        for vote, _ in self.votes:
            check_vote(vote, self.candidates)

    def scores(self, vector) -> ScoreMap:
        return evaluate(self.votes, vector, self.candidates)

    def winners(self, vector) -> frozenset:
        return winners(self.scores(vector))


@dataclass(frozen=True)
class CCAVInstance:
    """Control-by-adding-voters instance.

    ``registered`` votes are always counted; up to ``budget`` votes from
    ``unregistered`` may be added to make ``preferred`` a co-winner.
    """

    candidates: Tuple[str, ...]
    registered: VoteMultiset
    unregistered: VoteMultiset
    preferred: str
    budget: int

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        check_candidates(self.candidates)
        if self.preferred not in self.candidates:
            raise ElectionError(f"preferred candidate {self.preferred!r} is not a candidate")
        if isinstance(self.budget, bool) or not isinstance(self.budget, int) or self.budget < 0:
            raise ElectionError(f"budget must be a non-negative integer, got {self.budget!r}")
        for ms in (self.registered, self.unregistered):
            for vote, _ in ms:
                check_vote(vote, self.candidates)

    @property
    def m(self) -> int:
        return len(self.candidates)

    def registered_scores(self, vector) -> ScoreMap:
        return evaluate(self.registered, vector, self.candidates)

    def wins_with(self, added: VoteMultiset, vector) -> bool:
        """True iff ``preferred`` co-wins ``registered + added``."""
        scores = evaluate(self.registered + added, vector, self.candidates)
        return is_winner(self.preferred, scores)
