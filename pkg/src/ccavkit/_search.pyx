# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sub-multiset search; same enumeration order as ``_search_py``.

Scores are int64.  Callers must check that no partial sum can overflow
(see ``ccavkit.kernels.fits_int64``) and use the Python fallback otherwise.
"""

from libc.stdlib cimport malloc, free


cdef struct Ctx:
    int n
    int d
    int p
    long long *scores
    long long *deltas
    long long *caps
    long long *suffix
    long long *x


cdef inline bint _wins(Ctx *ctx) nogil:
    cdef long long sp = ctx.scores[ctx.p]
    cdef int c
    for c in range(ctx.n):
        if ctx.scores[c] > sp:
            return False
    return True


cdef inline void _shift(Ctx *ctx, int i, long long times) nogil:
    cdef int c
    cdef long long *delta = ctx.deltas + i * ctx.n
    for c in range(ctx.n):
        ctx.scores[c] += times * delta[c]


cdef bint _dfs(Ctx *ctx, int i, long long rem) nogil:
    if i == ctx.d:
        return _wins(ctx)
    cdef long long lo = rem - ctx.suffix[i + 1]
    if lo < 0:
        lo = 0
    cdef long long hi = ctx.caps[i] if ctx.caps[i] < rem else rem
    if hi < lo:
        return False
    if lo:
        _shift(ctx, i, lo)
    cdef long long cnt
    for cnt in range(lo, hi + 1):
        ctx.x[i] = cnt
        if _dfs(ctx, i + 1, rem - cnt):
            return True
        _shift(ctx, i, 1)
    _shift(ctx, i, -(hi + 1))
    ctx.x[i] = 0
    return False


def search(base, deltas, caps, int p, long long budget):
    cdef int n = len(base)
    cdef int d = len(caps)
    cdef Ctx ctx
    cdef int i, c
    cdef long long size, top
    cdef bint found = False
    ctx.n = n
    ctx.d = d
    ctx.p = p
    ctx.scores = <long long *> malloc(max(n, 1) * sizeof(long long))
    ctx.deltas = <long long *> malloc(max(n * d, 1) * sizeof(long long))
    ctx.caps = <long long *> malloc(max(d, 1) * sizeof(long long))
    ctx.suffix = <long long *> malloc((d + 1) * sizeof(long long))
    ctx.x = <long long *> malloc(max(d, 1) * sizeof(long long))
    if not (ctx.scores and ctx.deltas and ctx.caps and ctx.suffix and ctx.x):
        free(ctx.scores); free(ctx.deltas); free(ctx.caps); free(ctx.suffix); free(ctx.x)
        raise MemoryError()
    try:
        for c in range(n):
            ctx.scores[c] = base[c]
        for i in range(d):
            row = deltas[i]
            ctx.caps[i] = caps[i]
            ctx.x[i] = 0
            for c in range(n):
                ctx.deltas[i * n + c] = row[c]
        ctx.suffix[d] = 0
        for i in range(d - 1, -1, -1):
            ctx.suffix[i] = ctx.suffix[i + 1] + ctx.caps[i]
        top = budget if budget < ctx.suffix[0] else ctx.suffix[0]
        with nogil:
            size = 0
            while size <= top:
                if _dfs(&ctx, 0, size):
                    found = True
                    break
                size += 1
        if not found:
            return None
        return [ctx.x[i] for i in range(d)]
    finally:
        free(ctx.scores)
        free(ctx.deltas)
        free(ctx.caps)
        free(ctx.suffix)
        free(ctx.x)
