# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) kernels. Same contract as ``_pykernels``; p must be < 2**31."""

from libc.stdlib cimport malloc, free


cdef long long _inv(long long a, long long p) nogil:
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
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


def inv_modp(a, long long p):
    return _inv(a % p, p)


cdef long long *_load(object xs, long long p, int *deg) except NULL:
    cdef Py_ssize_t n = len(xs), i
    cdef long long *buf = <long long *> malloc((n + 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = xs[i] % p
    i = n - 1
    while i >= 0 and buf[i] == 0:
        i -= 1
    deg[0] = <int> i
    return buf


def gcd_modp(a, b, long long p):
    """Monic gcd over GF(p) of two coefficient lists, lowest degree first."""
    cdef int d0, d1, shift, i, dtmp
    cdef long long c, inv
    cdef long long *r0
    cdef long long *r1
    cdef long long *tmp
    r0 = _load(a, p, &d0)
    try:
        r1 = _load(b, p, &d1)
    except MemoryError:
        free(r0)
        raise
    try:
        with nogil:
            while d1 >= 0:
                inv = _inv(r1[d1], p)
                while d0 >= d1:
                    c = r0[d0] * inv % p
                    if c != 0:
                        shift = d0 - d1
                        for i in range(d1):
                            r0[shift + i] = (r0[shift + i] - c * r1[i]) % p
                            if r0[shift + i] < 0:
                                r0[shift + i] += p
                    r0[d0] = 0
                    d0 -= 1
                    while d0 >= 0 and r0[d0] == 0:
                        d0 -= 1
                tmp = r0
                r0 = r1
                r1 = tmp
                dtmp = d0
                d0 = d1
                d1 = dtmp
        if d0 < 0:
            return []
        inv = _inv(r0[d0], p)
        return [r0[i] * inv % p for i in range(d0 + 1)]
    finally:
        free(r0)
        free(r1)
