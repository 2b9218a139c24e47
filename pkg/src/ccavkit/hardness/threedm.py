"""Three-dimensional matching instances, an exhaustive solver and a generator."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Tuple

from ..core import ElectionError

MAX_TRIPLES = 24

Triple = Tuple[str, str, str]


class ThreeDMError(ElectionError):
    pass


@dataclass(frozen=True)
class ThreeDMInstance:
    x: Tuple[str, ...]
    y: Tuple[str, ...]
    z: Tuple[str, ...]
    triples: Tuple[Triple, ...]

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "triples", tuple(tuple(t) for t in self.triples))
        if not len(self.x) == len(self.y) == len(self.z):
            raise ThreeDMError("X, Y and Z must have the same size")
        elements = self.x + self.y + self.z
        if len(set(elements)) != len(elements):
            raise ThreeDMError("X, Y and Z must be pairwise disjoint sets without repeats")
        xs, ys, zs = set(self.x), set(self.y), set(self.z)
        for t in self.triples:
            if len(t) != 3 or t[0] not in xs or t[1] not in ys or t[2] not in zs:
                raise ThreeDMError(f"triple {t} is not in X x Y x Z")
        if len(set(self.triples)) != len(self.triples):
            raise ThreeDMError("duplicate triple")

    @property
    def k(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.triples)

    def is_cover(self, indices: Sequence[int]) -> bool:
        chosen = [self.triples[i] for i in indices]
        if len(chosen) != self.k or len(set(indices)) != len(indices):
            return False
        return all(len({t[c] for t in chosen}) == self.k for c in range(3))


def solve_3dm_brute(inst: ThreeDMInstance, max_triples: int = MAX_TRIPLES) -> Optional[Tuple[int, ...]]:
    """First cover (as sorted triple indices) in lexicographic order, or None."""
    if inst.n > max_triples:
        raise ThreeDMError(f"{inst.n} triples exceed the enumeration bound {max_triples}")
    for combo in combinations(range(inst.n), inst.k):
        if inst.is_cover(combo):
            return combo
    return None


def gen_3dm(k: int, n: int, planted: bool, seed: int) -> ThreeDMInstance:
    """Random instance with ``n`` distinct triples over ``x1..xk``, ``y1..yk``, ``z1..zk``.

    With ``planted`` the first step draws a random cover, so the instance is
    positive; the triple order is shuffled afterwards.
    """
    if k < 1 or n < 0:
        raise ThreeDMError("need k >= 1 and n >= 0")
    if n > k ** 3:
        raise ThreeDMError(f"only {k ** 3} distinct triples exist for k={k}")
    if planted and n < k:
        raise ThreeDMError("a planted cover needs n >= k")
    rng = random.Random(seed)
    xs = tuple(f"x{i}" for i in range(1, k + 1))
    ys = tuple(f"y{i}" for i in range(1, k + 1))
    zs = tuple(f"z{i}" for i in range(1, k + 1))
    triples = []
    if planted:
        py, pz = list(ys), list(zs)
        rng.shuffle(py)
        rng.shuffle(pz)
        triples = list(zip(xs, py, pz))
    seen = set(triples)
    while len(triples) < n:
        t = (rng.choice(xs), rng.choice(ys), rng.choice(zs))
        if t not in seen:
            seen.add(t)
            triples.append(t)
    rng.shuffle(triples)
    return ThreeDMInstance(xs, ys, zs, triples)
