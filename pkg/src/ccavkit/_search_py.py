"""Pure-Python sub-multiset search (fallback for the compiled ``_search``).

Both backends enumerate identically: sizes ``0, 1, ..., budget`` in turn,
and within a size, count vectors ``x`` (``0 <= x[i] <= caps[i]``,
``sum(x) == size``) in ascending lexicographic order.  The first ``x`` with
``base[p] + sum_i x[i]*deltas[i][p] >= `` every other candidate's total is
returned.  Scores are plain Python ints, so there is no overflow limit.
"""


def search(base, deltas, caps, p, budget):
    n = len(base)
    d = len(caps)
    suffix = [0] * (d + 1)
    for i in range(d - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    top = min(budget, suffix[0])
    scores = list(base)
    x = [0] * d
    rng = range(n)

    def wins():
        sp = scores[p]
        for c in rng:
            if scores[c] > sp:
                return False
        return True

    def dfs(i, rem):
        if i == d:
            return wins()
        lo = rem - suffix[i + 1]
        if lo < 0:
            lo = 0
        hi = caps[i] if caps[i] < rem else rem
        if hi < lo:
            return False
        delta = deltas[i]
        if lo:
            for c in rng:
                scores[c] += lo * delta[c]
        for cnt in range(lo, hi + 1):
            x[i] = cnt
            if dfs(i + 1, rem - cnt):
                return True
            for c in rng:
                scores[c] += delta[c]
        for c in rng:
            scores[c] -= (hi + 1) * delta[c]
        x[i] = 0
        return False

    for size in range(top + 1):
        if dfs(0, size):
            return list(x)
    return None
