"""Pure-Python GF(2) elimination on integer bitsets (fallback kernel)."""

from typing import List, Sequence, Tuple


def gauss(matrix: Sequence[Sequence[int]]) -> Tuple[List[Tuple[int, int]], List[List[int]]]:
    """Row-reduce ``matrix`` to reduced row-echelon form using row additions only.

    Returns ``(ops, reduced)`` where each op ``(src, dst)`` means
    ``row[dst] ^= row[src]``, in the order applied. When the pivot row lacks a
    one in the pivot column, the lightest lower row that has one is added to
    it (ties go to the lowest index).
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    # bit j of rows[i] is matrix[i][j]
    rows = [sum(1 << j for j, x in enumerate(r) if x & 1) for r in matrix]
    ops: List[Tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        bit = 1 << c
        if not rows[r] & bit:
            best = -1
            for k in range(r + 1, nrows):
                if rows[k] & bit and (best < 0 or bin(rows[k]).count("1") < bin(rows[best]).count("1")):
                    best = k
            if best < 0:
                continue
            rows[r] ^= rows[best]
            ops.append((best, r))
        for k in range(nrows):
            if k != r and rows[k] & bit:
                rows[k] ^= rows[r]
                ops.append((r, k))
        r += 1
    reduced = [[(x >> j) & 1 for j in range(ncols)] for x in rows]
    return ops, reduced
