# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled convolution kernels.

Two paths: a machine-integer loop used when a precomputed bound proves the
accumulators cannot overflow 64 bits, and an object loop over Python ints
for partition-sized coefficients.  The caller (``_kernels.py``) picks.
"""

from array import array

BACKEND = "cython"


def conv_i64(long long[::1] a, long long[::1] b, Py_ssize_t out_len):
    """Truncated convolution on int64 buffers. Caller guarantees no overflow."""
    cdef Py_ssize_t na = a.shape[0]
    cdef Py_ssize_t nb = b.shape[0]
    cdef Py_ssize_t i, j, hi
    cdef long long ai
    if out_len <= 0:
        return []
    out_arr = array("q", bytes(8 * out_len))
    cdef long long[::1] out = out_arr
    for i in range(na):
        if i >= out_len:
            break
        ai = a[i]
        if ai == 0:
            continue
        hi = nb
        if out_len - i < hi:
            hi = out_len - i
        for j in range(hi):
            if b[j] != 0:
                out[i + j] += ai * b[j]
    return list(out_arr)


def conv_obj(list a, list b, Py_ssize_t out_len):
    """Truncated convolution on Python ints (arbitrary precision)."""
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t i, j, hi, nza, nzb
    if out_len <= 0:
        return []
    nza = 0
    nzb = 0
    for i in range(na):
        if a[i] != 0:
            nza += 1
    for i in range(nb):
        if b[i] != 0:
            nzb += 1
    if nzb < nza:
        a, b = b, a
        na, nb = nb, na
    cdef list out = [0] * out_len
    cdef object ai, bj, acc
    for i in range(na):
        if i >= out_len:
            break
        ai = a[i]
        if ai == 0:
            continue
        hi = nb
        if out_len - i < hi:
            hi = out_len - i
        for j in range(hi):
            bj = b[j]
            if bj != 0:
                out[i + j] = out[i + j] + ai * bj
    return out
