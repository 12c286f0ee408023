"""Rank over F_p: compiled kernel when built, pure Python otherwise.

Set CARRYIDEALS_PURE=1 before import to force the fallback (the benchmark
uses this to compare the two implementations).
"""

import os
from array import array

from . import modp_py

try:
    from . import _modpc
except ImportError:
    _modpc = None

HAVE_COMPILED = _modpc is not None
USING_COMPILED = HAVE_COMPILED and os.environ.get("CARRYIDEALS_PURE", "0") in ("", "0")


def rank(rows, ncols, p):
    """Rank of the matrix with the given rows, as elements of F_p."""
    if not rows or ncols == 0:
        return 0
    if USING_COMPILED:
        flat = array("q")
        for row in rows:
            flat.extend(v % p for v in row)
        return _modpc.rank_mod_p(flat, len(rows), ncols, p)
    return modp_py.rank(rows, ncols, p)
