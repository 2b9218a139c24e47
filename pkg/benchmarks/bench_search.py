"""Compare the compiled and pure-Python sub-multiset search backends.

Usage: python benchmarks/bench_search.py [--instances N] [--seed S]

Each workload is a batch of random CCAV instances solved by brute force
with both backends; decisions and witnesses must match.
"""

from __future__ import annotations

import argparse
import random
import time

from ccavkit import kernels
from ccavkit.core import CCAVInstance, VoteMultiset
from ccavkit.generators import borda, expand
from ccavkit.hardness import gen_3dm, reduce_three_coeff
from ccavkit.solvers import solve_brute_force


def random_instance(rng, m, n_reg, n_unreg, budget):
    cands = [f"c{i}" for i in range(m)]

    def votes(n):
        out = []
        for _ in range(n):
            v = cands[:]
            rng.shuffle(v)
            out.append(tuple(v))
        return VoteMultiset(out)

    return CCAVInstance(cands, votes(n_reg), votes(n_unreg), cands[0], budget)


def workloads(rng, count):
    small = [(random_instance(rng, 5, 8, 8, 4), expand(borda(), 5)) for _ in range(count)]
    wide = [(random_instance(rng, 6, 10, 14, 7), expand(borda(), 6)) for _ in range(max(1, count // 10))]
    reductions = []
    for i in range(max(1, count // 50)):
        red = reduce_three_coeff(2, 1, 1, gen_3dm(2, 4, i % 2 == 0, rng.randrange(10 ** 6)))
        reductions.append((red.instance, red.vector))
    return {"random m=5 |U|=8 k=4": small, "random m=6 |U|=14 k=7": wide,
            "three-coeff reduction, n=4": reductions}


def timed(batch, backend):
    start = time.perf_counter()
    results = [solve_brute_force(inst, vec, max_distinct=24, backend=backend) for inst, vec in batch]
    return time.perf_counter() - start, results


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if kernels.BACKEND != "cython":
        print("compiled backend unavailable; build it with `pip install -e . --no-build-isolation`")
        return 1
    rng = random.Random(args.seed)
    print(f"{'workload':32} {'n':>5} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, batch in workloads(rng, args.instances).items():
        t_py, r_py = timed(batch, "python")
        t_cy, r_cy = timed(batch, "cython")
        if r_py != r_cy:
            raise SystemExit(f"backends disagree on workload {name!r}")
        print(f"{name:32} {len(batch):>5} {t_py:>10.3f} {t_cy:>10.3f} {t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
