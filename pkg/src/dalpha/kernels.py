"""Backend selection for the hot kernels.

The compiled extension is preferred when importable; setting the
environment variable DALPHA_PURE_PYTHON forces the pure-Python fallback.
Both backends expose the same functions with identical outputs.
"""

from __future__ import annotations

import os

from dalpha import _pykernels as _py

if os.environ.get("DALPHA_PURE_PYTHON"):
    _impl = _py
else:
    try:
        from dalpha import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _py

BACKEND: str = _impl.BACKEND

# The compiled canonicalizer packs bitstrings into 64-bit words (n <= 11);
# n = 12 transparently routes to the big-int Python implementation.
MAX_CANON_N: int = 12

all_pairs_bfs = _impl.all_pairs_bfs
labeled_tree_survey = _impl.labeled_tree_survey
connected_mask_census = _impl.connected_mask_census
tree_code = _impl.tree_code
mask_to_pairs = _py.mask_to_pairs


def canonical_mask(n: int, rows, anchor: int = -1) -> int:
    if n > MAX_CANON_N:
        raise ValueError(f"canonical_mask supports n <= {MAX_CANON_N}, got {n}")
    if n > getattr(_impl, "MAX_CANON_N", MAX_CANON_N):
        return _py.canonical_mask(n, rows, anchor)
    return _impl.canonical_mask(n, rows, anchor)
