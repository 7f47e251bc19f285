# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled block kernels for the modular rank engine.

Matrices hold residues modulo a prime ``p < 2**21`` stored as float64 in
``[0, p)``.  Every product of two residues is below ``2**42`` so the
arithmetic is exact in double precision.
"""
from libc.math cimport floor


cdef long _inverse(long a, long p) nogil:
    cdef long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_block(double[:, ::1] Y, long p):
    """Reduce ``Y`` in place to reduced row echelon form modulo ``p``.

    Parameters
    ----------
    Y : ndarray of float64, C-contiguous
        Residues in ``[0, p)``.
    p : int
        Prime modulus, below ``2**21``.

    Returns
    -------
    rank : int
    pivots : list of int
        Pivot column of each of the first ``rank`` rows.
    """
    cdef Py_ssize_t b = Y.shape[0], n = Y.shape[1]
    cdef Py_ssize_t r = 0, c = 0, i, j, piv
    cdef double pd = <double>p, invp = 1.0 / <double>p
    cdef double f, v, s
    cdef long inv
    pivots = []
    with nogil:
        while r < b and c < n:
            piv = -1
            for i in range(r, b):
                if Y[i, c] != 0.0:
                    piv = i
                    break
            if piv < 0:
                c += 1
                continue
            if piv != r:
                for j in range(c, n):
                    v = Y[r, j]
                    Y[r, j] = Y[piv, j]
                    Y[piv, j] = v
            inv = _inverse(<long>Y[r, c], p)
            s = <double>inv
            for j in range(c, n):
                v = Y[r, j] * s
                v = v - pd * floor(v * invp)
                if v >= pd:
                    v = v - pd
                elif v < 0.0:
                    v = v + pd
                Y[r, j] = v
            for i in range(b):
                if i == r:
                    continue
                f = Y[i, c]
                if f == 0.0:
                    continue
                for j in range(c, n):
                    v = Y[i, j] - f * Y[r, j]
                    v = v - pd * floor(v * invp)
                    if v >= pd:
                        v = v - pd
                    elif v < 0.0:
                        v = v + pd
                    Y[i, j] = v
            with gil:
                pivots.append(c)
            r += 1
            c += 1
    return r, pivots
