"""Numpy fallback for the pair-count kernel (used when the compiled
extension is unavailable).

Two exact strategies: for small root orders the counts come from 0/1
matrix products (BLAS does the heavy lifting; integer counts below 2^53
are exact in float64), otherwise from a flat bincount over the residue
tensor.
"""

import numpy as np

_MATMUL_MAX_ORDER = 8


def _counts_matmul(e, f, m):
    nv = e.shape[0]
    nw = f.shape[0]
    ep = [(e == k).astype(np.float64) for k in range(m)]
    fp = [(f == k).astype(np.float64) for k in range(m)]
    ft = [a.T for a in fp]
    counts = np.empty((nv, nw, m), dtype=np.int64)
    for k in range(m):
        acc = ep[k % m] @ ft[0]
        for j in range(1, m):
            acc += ep[(j + k) % m] @ ft[j]
        counts[:, :, k] = np.rint(acc).astype(np.int64)
    return counts


def _counts_bincount(e, f, m):
    nv = e.shape[0]
    nw = f.shape[0]
    diff = (e[:, None, :].astype(np.int64) - f[None, :, :]) % m
    offset = (np.arange(nv * nw, dtype=np.int64) * m).reshape(nv, nw, 1)
    flat = (diff + offset).ravel()
    counts = np.bincount(flat, minlength=nv * nw * m)
    return counts.reshape(nv, nw, m).astype(np.int64, copy=False)


def pair_difference_counts(e, f, m):
    """int64 array (nv, nw, m) of residue counts between all row pairs."""
    e = np.ascontiguousarray(e, dtype=np.int32)
    f = np.ascontiguousarray(f, dtype=np.int32)
    if e.shape[1] != f.shape[1]:
        raise ValueError("exponent matrices must share the coordinate count")
    if m <= _MATMUL_MAX_ORDER:
        return _counts_matmul(e, f, m)
    return _counts_bincount(e, f, m)
