from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ccavkit.generators import (
    Builtin, GeneratorError, HardCase, Pattern, PolyCase, Tabulated, borda, classify, dowdall,
    expand, k_approval, k_veto, validate,
)
from ccavkit.vectors import equivalent


def test_expand_examples():
    assert expand(borda(), 4).coefficients == (3, 2, 1, 0)
    assert expand(dowdall(), 3).coefficients == (1, Fraction(1, 2), Fraction(1, 3))
    assert expand(Pattern((2,), 1, (0,)), 5).coefficients == (2, 1, 1, 1, 0)


def test_expand_builtins_at_small_lengths():
    assert expand(k_approval(3), 2).coefficients == (1, 1)
    assert expand(k_veto(2), 5).coefficients == (1, 1, 1, 0, 0)
    assert expand(borda(), 1).coefficients == (0,)


def test_pattern_below_fixed_length_stays_pure():
    spec = Pattern((5, 4, 3), 2, (1, 0))
    assert [expand(spec, m).coefficients for m in (1, 2, 3)] == [(0,), (1, 0), (5, 1, 0)]
    assert validate(spec, 9).pure


def test_pattern_exceptions():
    spec = Pattern((2,), 1, (0,), {1: (7,)})
    assert expand(spec, 1).coefficients == (7,)
    assert expand(spec, 1, use_exceptions=False).coefficients == (0,)
    with pytest.raises(GeneratorError):
        Pattern((2,), 1, (0,), {5: (1, 1, 1, 1, 0)})


def test_invalid_specs():
    with pytest.raises(GeneratorError):
        Pattern((1,), 2, ())
    with pytest.raises(GeneratorError):
        Builtin("k-approval")
    with pytest.raises(GeneratorError):
        Builtin("borda", 2)
    with pytest.raises(GeneratorError):
        Tabulated(((1, 0), (1, 0, 0, 0)))
    with pytest.raises(GeneratorError):
        expand(borda(), 0)
    with pytest.raises(GeneratorError):
        expand(Tabulated(((1, 0),)), 3)


def test_validate_examples():
    assert validate(Pattern((2,), 1, (0,)), 8).pure
    assert validate(Pattern((3,), 2, (0,)), 8).pure
    report = validate(Tabulated(((1, 0), (3, 2, 0))), 5)
    assert (report.pure, report.flexible_pure, report.monotone) == (False, True, True)


@pytest.mark.parametrize("spec, expected", [
    (borda(), HardCase.SPREAD_MIDDLE),
    (Pattern((1, 1, 1), 0), PolyCase.THREE_APPROVAL),
    (Pattern((3,), 1, (0,)), HardCase.TOP_OVER_FLAT),
    (Pattern((2,), 1, (0,)), PolyCase.APPROVE_VETO),
    (k_approval(4), HardCase.SPREAD_MIDDLE),
    (k_veto(1), PolyCase.ONE_VETO),
    (k_veto(2), PolyCase.TWO_VETO),
    (Pattern((3, 2, 1), 0), HardCase.THREE_TOP),
    (Pattern((3,), 2, (1, 0)), HardCase.TOP_FLAT_LOW),
    (Pattern((), 2, (1, 0)), HardCase.FLAT_LOW),
])
def test_classify_examples(spec, expected):
    got = classify(spec)
    assert (got.poly or got.hard) is expected


def test_two_top_reports_coefficients():
    got = classify(Pattern((6, 2), 0))
    assert got.poly is PolyCase.TWO_TOP and got.params == (3, 1)


def test_classify_rejects_tabulated():
    with pytest.raises(GeneratorError):
        classify(Tabulated(((1, 0),)))


small = st.integers(0, 4)


@st.composite
def patterns(draw):
    prefix = draw(st.lists(small, max_size=3))
    suffix = draw(st.lists(small, max_size=3))
    middle = draw(small)
    whole = sorted(prefix + [middle] + suffix, reverse=True)
    return Pattern(tuple(whole[:len(prefix)]), whole[len(prefix)], tuple(whole[len(prefix) + 1:]))


@given(patterns())
def test_every_pattern_reaches_one_leaf(spec):
    got = classify(spec)
    assert (got.poly is None) != (got.hard is None)


@given(patterns(), st.integers(1, 3), st.integers(-2, 2))
def test_equivalent_families_classify_alike(spec, scale, shift):
    def affine(xs):
        return tuple(scale * x + shift for x in xs)

    other = Pattern(affine(spec.prefix), scale * spec.middle + shift, affine(spec.suffix))
    assert all(equivalent(expand(spec, m), expand(other, m)) for m in range(1, 13))
    assert classify(spec) == classify(other)


@pytest.mark.parametrize("a, b", [
    (Pattern((1, 1, 1), 0), k_approval(3)),
    (Pattern((1,), 1, (0, 0, 0)), k_veto(3)),
    (Pattern((), 1, (0,)), k_veto(1)),
    (Pattern((4, 2), 0), Pattern((2, 1), 0)),
])
def test_catalog_pairs_classify_alike(a, b):
    assert all(equivalent(expand(a, m), expand(b, m)) for m in range(7, 13))
    assert classify(a).poly == classify(b).poly and classify(a).hard == classify(b).hard
