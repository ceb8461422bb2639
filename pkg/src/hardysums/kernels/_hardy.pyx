# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loop for Hardy-sum rows.

For 0 <= d < c the two alternating floor sums

    A(d) = sum_{k=1}^{c-1} (-1)^(k + 1 + floor(d k / c))
    B(d) = sum_{k=1}^{c-1} (-1)^(floor(d k / c))

are accumulated with a single running remainder per d: since d < c the
floor increments exactly when the remainder wraps past c, so each inner
step is one add, one compare, and a conditional subtract.
"""
import numpy as np


def hardy_ab(long long c, long long[::1] ds):
    """Return int64 arrays (A, B) of the two floor sums for each d in ds.

    Callers must supply 0 <= d < c; coprimality is not checked here.
    """
    cdef Py_ssize_t n = ds.shape[0]
    a_arr = np.empty(n, dtype=np.int64)
    b_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] A = a_arr
    cdef long long[::1] B = b_arr
    cdef Py_ssize_t i
    cdef long long d, k, rem, par, sk, a, b
    if c < 1:
        raise ValueError("c must be >= 1")
    with nogil:
        for i in range(n):
            d = ds[i]
            rem = 0
            par = 1
            sk = 1
            a = 0
            b = 0
            for k in range(1, c):
                rem += d
                if rem >= c:
                    rem -= c
                    par = -par
                b += par
                a += sk * par
                sk = -sk
            A[i] = a
            B[i] = b
    return a_arr, b_arr
