"""Pure-Python (numpy) fallback for the Hardy-sum row kernel.

Evaluates the same floor sums as the compiled extension, but from the
explicit floor matrix (d*k)//c, chunked over d to bound memory.
"""
import numpy as np

# Keep each (d-chunk, k) block around 2^21 int64 entries (~16 MB).
_BLOCK = 1 << 21


def hardy_ab(c, ds):
    """Return int64 arrays (A, B) of the alternating floor sums for each d.

    A(d) = sum_{k=1}^{c-1} (-1)^(k+1+floor(dk/c)),
    B(d) = sum_{k=1}^{c-1} (-1)^(floor(dk/c)).  Requires 0 <= d < c.
    """
    if c < 1:
        raise ValueError("c must be >= 1")
    ds = np.ascontiguousarray(ds, dtype=np.int64)
    n = ds.shape[0]
    A = np.empty(n, dtype=np.int64)
    B = np.empty(n, dtype=np.int64)
    if c == 1 or n == 0:
        A[:] = 0
        B[:] = 0
        return A, B
    k = np.arange(1, c, dtype=np.int64)
    sk = np.where(k % 2 == 1, 1, -1).astype(np.int64)
    chunk = max(1, _BLOCK // (c - 1))
    for lo in range(0, n, chunk):
        dpart = ds[lo : lo + chunk]
        floors = (dpart[:, None] * k[None, :]) // c
        par = 1 - 2 * (floors & 1)
        B[lo : lo + chunk] = par.sum(axis=1)
        A[lo : lo + chunk] = (par * sk).sum(axis=1)
    return A, B
