"""Symbolic scoring-rule families and the CCAV complexity classifier.

Three kinds of family description are supported:

* :class:`Pattern` -- ``prefix``, a ``middle`` coefficient repeated to fill
  the length, and ``suffix`` (plus optional explicit vectors for small m);
* :class:`Builtin` -- Borda, Dowdall, k-approval, k-veto;
* :class:`Tabulated` -- an explicit finite list of vectors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from .core import ElectionError, ScoringVector, as_fraction, as_vector
from .vectors import check_flexible_pure, check_pure, normalize


class GeneratorError(ElectionError):
    pass


@dataclass(frozen=True)
class Pattern:
    prefix: Tuple[Fraction, ...]
    middle: Fraction
    suffix: Tuple[Fraction, ...] = ()
    exceptions: Dict[int, ScoringVector] = field(default_factory=dict)

    def __post_init__(self):
        prefix = tuple(as_fraction(c) for c in self.prefix)
        suffix = tuple(as_fraction(c) for c in self.suffix)
        middle = as_fraction(self.middle)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "suffix", suffix)
        object.__setattr__(self, "middle", middle)
        whole = prefix + (middle,) + suffix
        if any(whole[i] < whole[i + 1] for i in range(len(whole) - 1)):
            raise GeneratorError(
                "pattern must be non-increasing across prefix, middle and suffix"
            )
        exc = {}
        stable = len(prefix) + len(suffix) + 1
        for m, vec in dict(self.exceptions).items():
            m = int(m)
            vec = as_vector(vec)
            if not 1 <= m < stable:
                raise GeneratorError(
                    f"exception at m={m} must lie below the stable length {stable}"
                )
            if len(vec) != m:
                raise GeneratorError(f"exception for m={m} has length {len(vec)}")
            exc[m] = vec
        object.__setattr__(self, "exceptions", exc)

    def __hash__(self):
        return hash((self.prefix, self.middle, self.suffix, tuple(sorted(self.exceptions))))


class BuiltinKind(str, enum.Enum):
    BORDA = "borda"
    DOWDALL = "dowdall"
    K_APPROVAL = "k-approval"
    K_VETO = "k-veto"


@dataclass(frozen=True)
class Builtin:
    kind: BuiltinKind
    k: Optional[int] = None

    def __post_init__(self):
        kind = BuiltinKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in (BuiltinKind.K_APPROVAL, BuiltinKind.K_VETO):
            if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
                raise GeneratorError(f"{kind.value} needs an integer k >= 1, got {self.k!r}")
        elif self.k is not None:
            raise GeneratorError(f"{kind.value} takes no k")


@dataclass(frozen=True)
class Tabulated:
    vectors: Tuple[ScoringVector, ...]

    def __post_init__(self):
        vecs = tuple(as_vector(v) for v in self.vectors)
        if not vecs:
            raise GeneratorError("tabulated family is empty")
        for prev, cur in zip(vecs, vecs[1:]):
            if len(cur) != len(prev) + 1:
                raise GeneratorError("tabulated lengths must increase by exactly one")
        object.__setattr__(self, "vectors", vecs)

    @property
    def lengths(self) -> range:
        return range(len(self.vectors[0]), len(self.vectors[-1]) + 1)


GeneratorSpec = Union[Pattern, Builtin, Tabulated]


def borda() -> Builtin:
    return Builtin(BuiltinKind.BORDA)


def dowdall() -> Builtin:
    return Builtin(BuiltinKind.DOWDALL)


def k_approval(k: int) -> Builtin:
    return Builtin(BuiltinKind.K_APPROVAL, k)


def k_veto(k: int) -> Builtin:
    return Builtin(BuiltinKind.K_VETO, k)


def _pattern_vector(spec: Pattern, m: int) -> Tuple[Fraction, ...]:
    fixed = len(spec.prefix) + len(spec.suffix)
    if m >= fixed:
        return spec.prefix + (spec.middle,) * (m - fixed) + spec.suffix
    # below the fixed length drop the tail of the prefix first, then the head
    # of the suffix, so consecutive lengths stay one deletion apart
    drop = fixed - m
    p_keep = max(len(spec.prefix) - drop, 0)
    s_drop = drop - (len(spec.prefix) - p_keep)
    return spec.prefix[:p_keep] + spec.suffix[s_drop:]


def expand(spec: GeneratorSpec, m: int, *, use_exceptions: bool = True) -> ScoringVector:
    """The length-``m`` vector of a family."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise GeneratorError(f"length must be a positive integer, got {m!r}")
    if isinstance(spec, Pattern):
        if use_exceptions and m in spec.exceptions:
            return spec.exceptions[m]
        return ScoringVector(_pattern_vector(spec, m))
    if isinstance(spec, Builtin):
        kind = spec.kind
        if kind is BuiltinKind.BORDA:
            return ScoringVector(range(m - 1, -1, -1))
        if kind is BuiltinKind.DOWDALL:
            return ScoringVector(Fraction(1, i) for i in range(1, m + 1))
        if kind is BuiltinKind.K_APPROVAL:
            top = min(spec.k, m)
            return ScoringVector([1] * top + [0] * (m - top))
        bottom = min(spec.k, m)
        return ScoringVector([1] * (m - bottom) + [0] * bottom)
    if isinstance(spec, Tabulated):
        for vec in spec.vectors:
            if len(vec) == m:
                return vec
        raise GeneratorError(
            f"tabulated family covers lengths {spec.lengths.start}..{spec.lengths.stop - 1}, not {m}"
        )
    raise GeneratorError(f"unknown generator spec {spec!r}")


@dataclass
class ValidationReport:
    lengths: Tuple[int, ...]
    monotone: bool
    failures: Dict[int, str]
    pure: bool
    flexible_pure: bool

    def as_dict(self) -> dict:
        return {
            "lengths": list(self.lengths),
            "monotone": self.monotone,
            "failures": {str(m): msg for m, msg in sorted(self.failures.items())},
            "pure": self.pure,
            "flexible_pure": self.flexible_pure,
        }


def validate(spec: GeneratorSpec, check_up_to: int) -> ValidationReport:
    """Expand lengths up to ``check_up_to`` and report monotonicity and purity."""
    if isinstance(spec, Tabulated):
        lengths = [m for m in spec.lengths if m <= check_up_to]
    else:
        lengths = list(range(1, check_up_to + 1))
    failures = {}
    family = []
    for m in lengths:
        try:
            family.append(expand(spec, m))
        except ElectionError as exc:
            failures[m] = str(exc)
    ok = not failures
    pure = flexible = False
    if ok and family:
        pure = check_pure(family)
        flexible = check_flexible_pure(family)
    return ValidationReport(tuple(lengths), ok, failures, pure, flexible)


class PolyCase(str, enum.Enum):
    THREE_APPROVAL = "ThreeApproval"
    ONE_VETO = "OneVeto"
    TWO_VETO = "TwoVeto"
    TWO_TOP = "TwoTop"
    APPROVE_VETO = "ApproveVeto"


class HardCase(str, enum.Enum):
    """Which hardness reduction applies; values are the public witness tokens."""

    SPREAD_MIDDLE = "Thm48"          # alpha_4 > alpha_{m-2}
    THREE_TOP = "Thm49"              # (a, b, c, 0, ..., 0), a >= b >= c > 0, a != c
    SECOND_ABOVE_MIDDLE = "Thm410_1"  # alpha_2 > alpha_4 > 0
    TOP_OVER_FLAT = "Thm410_2"        # (a1, a2, ..., a2, 0), a1 not in {a2, 2 a2}
    TOP_FLAT_LOW = "Thm410_3"         # (a1, a2, ..., a2, a5, 0), a1 > a2 > a5
    FLAT_LOW = "Thm410_4"             # (a1, ..., a1, a5, 0), a1 > a5 > 0


@dataclass(frozen=True)
class Classification:
    poly: Optional[PolyCase] = None
    hard: Optional[HardCase] = None
    params: Tuple[int, ...] = ()
    shape: Tuple[int, ...] = ()

    @property
    def is_poly(self) -> bool:
        return self.poly is not None

    def as_dict(self) -> dict:
        if self.poly is not None:
            out = {"outcome": "poly", "case": self.poly.value}
            if self.poly is PolyCase.TWO_TOP:
                out["params"] = list(self.params)
            return out
        return {"outcome": "np-complete", "witness": self.hard.value}

    def __str__(self) -> str:
        if self.poly is not None:
            extra = f"{self.params}" if self.params else ""
            return f"PolyTime({self.poly.value}{extra})"
        return f"NPComplete({self.hard.value})"


def stable_length(spec: GeneratorSpec) -> int:
    """A length from which the family's shape no longer changes qualitatively."""
    if isinstance(spec, Pattern):
        return max(7, len(spec.prefix) + len(spec.suffix) + 2)
    if isinstance(spec, Builtin):
        if spec.kind in (BuiltinKind.K_APPROVAL, BuiltinKind.K_VETO):
            return max(7, spec.k + 4)
        return 7
    raise GeneratorError("tabulated families have no asymptotic shape; cannot classify")


def classify(spec: GeneratorSpec) -> Classification:
    """Polynomial-time case or hardness witness for CCAV under the family.

    Works on the normalized vector at :func:`stable_length`; small-m
    exceptions of a pattern are ignored because the dichotomy is asymptotic.
    """
    m0 = stable_length(spec)
    vec = normalize(expand(spec, m0, use_exceptions=False))
    if vec[3] > vec[m0 - 3]:
        return Classification(hard=HardCase.SPREAD_MIDDLE, shape=vec)
    a1, a2, a3, a4, a5 = vec[0], vec[1], vec[2], vec[3], vec[m0 - 2]
    if a4 == 0:
        if a3 == 0:
            return Classification(poly=PolyCase.TWO_TOP, params=(a1, a2), shape=vec)
        if a1 == a3:
            return Classification(poly=PolyCase.THREE_APPROVAL, shape=vec)
        return Classification(hard=HardCase.THREE_TOP, shape=vec)
    if a2 > a4:
        return Classification(hard=HardCase.SECOND_ABOVE_MIDDLE, shape=vec)
    # shape (a1, a2, ..., a2, a5, 0) with a2 > 0
    if a2 == a5:
        if a1 == a2:
            return Classification(poly=PolyCase.ONE_VETO, shape=vec)
        if a1 == 2 * a2:
            return Classification(poly=PolyCase.APPROVE_VETO, shape=vec)
        return Classification(hard=HardCase.TOP_OVER_FLAT, shape=vec)
    if a1 == a2:
        if a5 == 0:
            return Classification(poly=PolyCase.TWO_VETO, shape=vec)
        return Classification(hard=HardCase.FLAT_LOW, shape=vec)
    return Classification(hard=HardCase.TOP_FLAT_LOW, shape=vec)
