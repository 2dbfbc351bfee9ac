"""GF(2) linear algebra used by circuit extraction.

The elimination kernel is compiled with Cython when the extension is built
and falls back to a pure-Python implementation otherwise. Set
``ZXKIT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from typing import List, Sequence, Tuple

from . import _gf2_py

if os.environ.get("ZXKIT_PURE_PYTHON") == "1":
    _kernel = _gf2_py
else:
    try:
        from . import _gf2 as _kernel  # type: ignore[attr-defined]
    except ImportError:
        _kernel = _gf2_py

BACKEND = "cython" if _kernel is not _gf2_py else "python"

RowOp = Tuple[int, int]


def gf2_gauss(matrix: Sequence[Sequence[int]]) -> Tuple[List[RowOp], List[List[int]]]:
    """Reduced row-echelon form over GF(2).

    Returns ``(ops, reduced)``; each op ``(src, dst)`` stands for
    ``row[dst] ^= row[src]`` and replaying the ops on ``matrix`` gives
    ``reduced``.
    """
    if not len(matrix):
        return [], []
    ops, reduced = _kernel.gauss(matrix)
    return [(int(s), int(t)) for s, t in ops], reduced


def apply_row_ops(matrix: Sequence[Sequence[int]], ops: Sequence[RowOp]) -> List[List[int]]:
    rows = [list(r) for r in matrix]
    for src, dst in ops:
        rows[dst] = [a ^ b for a, b in zip(rows[dst], rows[src])]
    return rows


def rank(matrix: Sequence[Sequence[int]]) -> int:
    _, red = gf2_gauss(matrix)
    return sum(1 for r in red if any(r))
