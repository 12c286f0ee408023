# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled dense rank over a prime field.

The homology sweeps reduce to many Gaussian eliminations over F_p; this is
that inner loop. The caller passes a row-major flat buffer with entries
already reduced into [0, p), so products stay below p**2 and fit in 64 bits
for any prime this library meets.
"""


cdef long long _inv_mod(long long a, long long p):
    # a^(p-2) by square and multiply
    cdef long long result = 1, base = a % p, e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rank_mod_p(long long[::1] data, Py_ssize_t nrows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t rank = 0, col, r, j, piv, rbase, pbase
    cdef long long f, inv, v
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if data[r * ncols + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            pbase = piv * ncols
            rbase = rank * ncols
            for j in range(col, ncols):
                v = data[rbase + j]
                data[rbase + j] = data[pbase + j]
                data[pbase + j] = v
        rbase = rank * ncols
        inv = _inv_mod(data[rbase + col], p)
        if inv != 1:
            for j in range(col, ncols):
                data[rbase + j] = data[rbase + j] * inv % p
        for r in range(rank + 1, nrows):
            f = data[r * ncols + col]
            if f != 0:
                pbase = r * ncols
                for j in range(col, ncols):
                    v = (data[pbase + j] - f * data[rbase + j]) % p
                    if v < 0:
                        v += p
                    data[pbase + j] = v
        rank += 1
        if rank == nrows:
            break
    return rank
