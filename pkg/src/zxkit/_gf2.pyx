# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled GF(2) elimination on uint8 matrices; same contract as _gf2_py.gauss."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def gauss(matrix):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] m = np.array(matrix, dtype=np.uint8, ndmin=2) & 1
    cdef Py_ssize_t nrows = m.shape[0]
    cdef Py_ssize_t ncols = m.shape[1] if nrows else 0
    cdef cnp.uint8_t[:, :] a = m
    cdef Py_ssize_t r = 0, c, k, j, best, w, bw
    ops = []
    if nrows == 0 or len(matrix) == 0:
        return ops, []
    for c in range(ncols):
        if r == nrows:
            break
        if a[r, c] == 0:
            best = -1
            bw = 0
            for k in range(r + 1, nrows):
                if a[k, c]:
                    w = 0
                    for j in range(ncols):
                        w += a[k, j]
                    if best < 0 or w < bw:
                        best = k
                        bw = w
            if best < 0:
                continue
            for j in range(ncols):
                a[r, j] ^= a[best, j]
            ops.append((best, r))
        for k in range(nrows):
            if k != r and a[k, c]:
                for j in range(ncols):
                    a[k, j] ^= a[r, j]
                ops.append((r, k))
        r += 1
    return ops, m.tolist()
