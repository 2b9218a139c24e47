"""Backend selection for the sub-multiset search kernel.

The compiled ``_search`` extension is used when it imports; otherwise the
pure-Python ``_search_py``.  Setting ``CCAVKIT_PURE_PYTHON=1`` forces the
fallback.  Inputs whose partial sums could exceed int64 always go to the
Python backend.
"""

from __future__ import annotations

import os

from . import _search_py

try:
    if os.environ.get("CCAVKIT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure python forced")
    from . import _search as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_INT64_LIMIT = 2 ** 62


def fits_int64(base, deltas, caps) -> bool:
    bound = max((abs(b) for b in base), default=0)
    total = sum(caps)
    peak = max((abs(v) for row in deltas for v in row), default=0)
    return bound + total * peak < _INT64_LIMIT


def search(base, deltas, caps, p, budget, backend=None):
    """First (size-then-lexicographic) count vector making ``p`` a co-winner."""
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled search kernel is not available")
        if fits_int64(base, deltas, caps):
            return _compiled.search(base, deltas, caps, p, budget)
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _search_py.search(base, deltas, caps, p, budget)
