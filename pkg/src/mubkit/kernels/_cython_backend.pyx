# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernel for the exact verifier.

For every pair of rows (r, s) of two exponent matrices, tallies how often
each residue (e[r, x] - f[s, x]) mod m occurs across the coordinates x.
Counts are what the verifier reduces through the cyclotomic tables, so
this loop carries the whole O(rows^2 * d) certification cost.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def pair_difference_counts(e, f, int m):
    """int64 array (nv, nw, m) of residue counts between all row pairs."""
    cdef const cnp.int32_t[:, ::1] ev = np.ascontiguousarray(e, dtype=np.int32)
    cdef const cnp.int32_t[:, ::1] fv = np.ascontiguousarray(f, dtype=np.int32)
    if ev.shape[1] != fv.shape[1]:
        raise ValueError("exponent matrices must share the coordinate count")
    cdef Py_ssize_t nv = ev.shape[0]
    cdef Py_ssize_t nw = fv.shape[0]
    cdef Py_ssize_t d = ev.shape[1]
    counts = np.zeros((nv, nw, m), dtype=np.int64)
    cdef cnp.int64_t[:, :, ::1] cv = counts
    cdef Py_ssize_t r, s, x
    cdef int k
    with nogil:
        for r in range(nv):
            for s in range(nw):
                for x in range(d):
                    k = ev[r, x] - fv[s, x]
                    if k < 0:
                        k += m
                    cv[r, s, k] += 1
    return counts
