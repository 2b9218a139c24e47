from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import pytest
from hypothesis import given, strategies as st

from ccavkit.core import ElectionError, VoteMultiset, evaluate, winners
from ccavkit.vectors import check_flexible_pure, check_pure, distinguish, equivalent, normalize


def _all_small_elections(m, max_votes):
    cands = tuple(f"c{i}" for i in range(m))
    perms = list(permutations(cands))
    for n in range(max_votes + 1):
        for ballots in combinations_with_replacement(perms, n):
            yield cands, VoteMultiset(ballots)


def _same_winners_everywhere(v1, v2, max_votes=3):
    return all(
        winners(evaluate(votes, v1, cands)) == winners(evaluate(votes, v2, cands))
        for cands, votes in _all_small_elections(len(v1), max_votes)
        if votes.size
    )


def test_normalize_examples():
    assert normalize((8, 7, 6, 5)) == (3, 2, 1, 0)
    assert normalize((0, 0, 0)) == (0, 0, 0)
    assert normalize((1, Fraction(1, 2), Fraction(1, 3))) == (4, 1, 0)


def test_dowdall_three_normal_form_keeps_winner_sets():
    v = (1, Fraction(1, 2), Fraction(1, 3))
    assert _same_winners_everywhere(v, (4, 1, 0))
    # four votes are enough for the oracle to tell a nearby vector apart
    assert _same_winners_everywhere(v, (4, 1, 0), max_votes=4)
    assert not _same_winners_everywhere(v, (3, 1, 0), max_votes=4)


def test_equivalent_examples():
    assert equivalent((2, 1, 0), (4, 2, 0))
    assert not equivalent((1, 1, 0), (1, 0, 0))
    assert equivalent((2, 1, 1, 0), (1, 0, 0, -1))
    with pytest.raises(ElectionError):
        equivalent((1, 0), (1, 0, 0))


def _separates(votes, v1, v2):
    cands = ("a", "b") + tuple(f"d{i}" for i in range(1, len(v1) - 1))
    return winners(evaluate(votes, v1, cands)) != winners(evaluate(votes, v2, cands))


def test_distinguish_examples():
    assert distinguish((2, 1, 0), (4, 2, 0)) is None
    votes = distinguish((1, 1, 0), (1, 0, 0))
    assert votes is not None and _separates(votes, (1, 1, 0), (1, 0, 0))
    votes = distinguish((1, 0), (0, 0))
    assert votes is not None and _separates(votes, (1, 0), (0, 0))
    with pytest.raises(ElectionError):
        distinguish((1, 0), (1, 0, 0))


def test_distinguish_negative_entries():
    votes = distinguish((1, 0, -1), (1, -1, -1))
    assert _separates(votes, (1, 0, -1), (1, -1, -1))


def test_purity_examples():
    assert check_pure([(5,), (6, 5), (7, 6, 5), (8, 7, 6, 5), (8, 7, 6, 5, 0)])
    assert not check_pure([(1, 0), (3, 2, 0)])
    assert check_pure([(0,), (0, 0), (0, 0, 0)])
    assert check_flexible_pure([(1, 0), (3, 2, 0)])
    assert check_flexible_pure([(1, 0), (2, 1, 0), (3, 2, 1, 0)])
    with pytest.raises(ElectionError):
        check_pure([(1, 0), (1, 0, 0, 0)])


def test_flexible_purity_matches_definition():
    fam = [(1, 0), (1, 0, 0), (1, 1, 0, 0)]
    expected = all(
        any(equivalent(cur[:i] + cur[i + 1:], prev) for i in range(len(cur)))
        for prev, cur in zip(fam, fam[1:])
    )
    assert check_flexible_pure(fam) == expected


# -- properties -----------------------------------------------------------------

def vectors(min_m=1, max_m=6, values=st.integers(0, 4)):
    return st.integers(min_m, max_m).flatmap(
        lambda m: st.lists(values, min_size=m, max_size=m).map(lambda xs: tuple(sorted(xs, reverse=True)))
    )


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@given(vectors(values=rationals))
def test_normalize_idempotent_and_canonical(v):
    n = normalize(v)
    assert normalize(n) == n
    assert n[-1] == 0 and all(x >= 0 for x in n)


@given(vectors(values=rationals), st.fractions(min_value=Fraction(1, 7), max_value=9, max_denominator=7),
       rationals)
def test_normalize_scale_shift_invariant(v, s, t):
    assert normalize(tuple(s * c + t for c in v)) == normalize(v)


@st.composite
def vector_pairs(draw):
    m = draw(st.integers(1, 6))
    vals = st.lists(st.integers(0, 4), min_size=m, max_size=m)
    v1 = tuple(sorted(draw(vals), reverse=True))
    if draw(st.booleans()):
        s, t = draw(st.integers(1, 3)), draw(st.integers(-2, 2))
        v2 = tuple(s * c + t for c in v1)
    else:
        v2 = tuple(sorted(draw(vals), reverse=True))
    return v1, v2


@given(vector_pairs(), st.randoms(use_true_random=False))
def test_equivalence_and_distinguish(pair, rnd):
    v1, v2 = pair
    votes = distinguish(v1, v2)
    if equivalent(v1, v2):
        assert votes is None
        cands = tuple(f"c{i}" for i in range(len(v1)))
        for _ in range(20):
            ballots = []
            for _ in range(rnd.randint(1, 5)):
                b = list(cands)
                rnd.shuffle(b)
                ballots.append(tuple(b))
            ms = VoteMultiset(ballots)
            assert winners(evaluate(ms, v1, cands)) == winners(evaluate(ms, v2, cands))
    else:
        assert votes is not None and _separates(votes, v1, v2)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=4), st.lists(st.integers(0, 5), max_size=4))
def test_pure_implies_flexible(base, inserts):
    fam = [tuple(sorted(base, reverse=True))]
    for x in inserts:
        fam.append(tuple(sorted(fam[-1] + (x,), reverse=True)))
    assert check_pure(fam)
    assert check_flexible_pure(fam)
