"""Dense rank computation over prime fields, pure Python.

This is the fallback for the compiled kernel. Rows over GF(2) are packed into
Python integers so elimination runs word-parallel; GF(3) rows are bit-sliced
into two integers per row (low bit set for entry 1, high bit for entry 2),
with addition done by five bitwise operations and negation by swapping the
planes. Larger primes use plain list-based elimination.
"""

from typing import List


def rank(rows: List[List[int]], ncols: int, p: int) -> int:
    if not rows or ncols == 0:
        return 0
    if p == 2:
        return _rank_gf2(rows)
    if p == 3:
        return _rank_gf3(rows)
    return _rank_generic(rows, ncols, p)


def _rank_gf2(rows):
    pivots = {}
    rank = 0
    for row in rows:
        x = 0
        for j, v in enumerate(row):
            if v % 2:
                x |= 1 << j
        while x:
            low = x & -x
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = x
                rank += 1
                break
            x ^= piv
    return rank


def _gf3_add(al, ah, bl, bh):
    t = (al | bh) ^ (ah | bl)
    return t ^ (ah | bh), t ^ (al | bl)


def _rank_gf3(rows):
    pivots = {}
    rank = 0
    for row in rows:
        lo = hi = 0
        for j, v in enumerate(row):
            v %= 3
            if v == 1:
                lo |= 1 << j
            elif v == 2:
                hi |= 1 << j
        while lo | hi:
            support = lo | hi
            low = support & -support
            piv = pivots.get(low)
            if piv is None:
                if hi & low:
                    lo, hi = hi, lo  # scale by 2 so the leading entry is 1
                pivots[low] = (lo, hi)
                rank += 1
                break
            pl, ph = piv
            if lo & low:
                lo, hi = _gf3_add(lo, hi, ph, pl)  # subtract the pivot row
            else:
                lo, hi = _gf3_add(lo, hi, pl, ph)  # entry 2: add the pivot row
    return rank


def _rank_generic(rows, ncols, p):
    mat = [[v % p for v in row] for row in rows]
    rank = 0
    nrows = len(mat)
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        inv = pow(prow[col], p - 2, p)
        if inv != 1:
            mat[rank] = prow = [v * inv % p for v in prow]
        for r in range(rank + 1, nrows):
            f = mat[r][col]
            if f:
                row = mat[r]
                mat[r] = [(a - f * b) % p for a, b in zip(row, prow)]
        rank += 1
        if rank == nrows:
            break
    return rank
