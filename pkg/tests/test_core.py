from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ccavkit.core import (
    CCAVInstance, Election, ElectionError, ScoringVector, VoteMultiset, evaluate, winners,
)

ABC = ("a", "b", "c")


def test_single_vote_scores():
    assert evaluate(VoteMultiset([ABC]), (2, 1, 0), ABC) == {"a": 2, "b": 1, "c": 0}


def test_no_votes_scores_zero():
    assert evaluate(VoteMultiset(), (5, 3, 1), ABC) == {"a": 0, "b": 0, "c": 0}


def _per_ballot(ballots, vector):
    # expands every ballot one at a time, unlike evaluate which multiplies counts
    out = {}
    for ballot in ballots:
        for pos, cand in enumerate(ballot):
            out[cand] = out.get(cand, 0) + Fraction(vector[pos])
    return out


def test_counted_votes_match_per_ballot_accumulation():
    votes = VoteMultiset([(ABC, 2), (("c", "b", "a"), 1)])
    scores = evaluate(votes, (1, 1, 0), ABC)
    assert scores == {"a": 2, "b": 3, "c": 1}
    assert scores == _per_ballot([ABC, ABC, ("c", "b", "a")], (1, 1, 0))
    assert winners(scores) == {"b"}


def test_winners_examples():
    assert winners({"a": 2, "b": 1}) == {"a"}
    assert winners({"a": 1, "b": 1, "c": 0}) == {"a", "b"}
    with pytest.raises(ElectionError):
        winners({})


def test_evaluate_errors():
    with pytest.raises(ElectionError):
        evaluate(VoteMultiset([ABC]), (1, 0), ABC)
    with pytest.raises(ElectionError):
        evaluate(VoteMultiset([("a", "a", "b")]), (1, 0, 0), ABC)


def test_vector_must_be_non_increasing():
    with pytest.raises(ElectionError):
        ScoringVector((0, 1))
    with pytest.raises(ElectionError):
        ScoringVector(())
    assert ScoringVector(("1/2", 0)).coefficients == (Fraction(1, 2), 0)


def test_multiset_merges_and_counts():
    ms = VoteMultiset([ABC, ABC, (("b", "a", "c"), 3)])
    assert ms.size == 5 and len(ms) == 2
    assert ms.count(ABC) == 2
    with pytest.raises(ElectionError):
        VoteMultiset([(ABC, 0)])
    assert VoteMultiset([(ABC, 1)]).issubset(ms)
    assert not VoteMultiset([(ABC, 3)]).issubset(ms)


def test_instance_validation():
    with pytest.raises(ElectionError):
        CCAVInstance(ABC, VoteMultiset(), VoteMultiset(), "z", 0)
    with pytest.raises(ElectionError):
        CCAVInstance(ABC, VoteMultiset(), VoteMultiset(), "a", -1)
    with pytest.raises(ElectionError):
        Election(("a", "a"))
    with pytest.raises(ElectionError):
        Election(("a", "b"), VoteMultiset([ABC]))


# -- properties -----------------------------------------------------------------

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def elections(draw, max_m=5):
    m = draw(st.integers(1, max_m))
    cands = tuple(f"c{i}" for i in range(m))
    vec = sorted(draw(st.lists(coeff, min_size=m, max_size=m)), reverse=True)
    ballots = draw(st.lists(st.permutations(cands), max_size=6))
    counts = draw(st.lists(st.integers(1, 4), min_size=len(ballots), max_size=len(ballots)))
    return cands, tuple(vec), [(tuple(b), c) for b, c in zip(ballots, counts)]


@given(elections())
def test_score_total(data):
    cands, vec, entries = data
    votes = VoteMultiset(entries)
    assert sum(evaluate(votes, vec, cands).values()) == votes.size * sum(vec)


@given(elections(), st.randoms(use_true_random=False))
def test_relabeling_permutes_scores(data, rnd):
    cands, vec, entries = data
    shuffled = list(cands)
    rnd.shuffle(shuffled)
    rename = dict(zip(cands, shuffled))
    renamed = VoteMultiset((tuple(rename[c] for c in v), n) for v, n in entries)
    before = evaluate(VoteMultiset(entries), vec, cands)
    after = evaluate(renamed, vec, cands)
    assert all(after[rename[c]] == before[c] for c in cands)


@given(elections(), st.integers(0, 6))
def test_linearity(data, cut):
    cands, vec, entries = data
    whole = evaluate(VoteMultiset(entries), vec, cands)
    left = evaluate(VoteMultiset(entries[:cut]), vec, cands)
    right = evaluate(VoteMultiset(entries[cut:]), vec, cands)
    assert all(whole[c] == left[c] + right[c] for c in cands)
