"""Exact matrix rank.

Over Q rows are cleared to integers and eliminated fraction-free (Bareiss),
so no rational arithmetic happens inside the pivoting loop.  Over F_p plain
Gaussian elimination with modular inverses is used.
"""

from fractions import Fraction
from math import lcm


def _bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            mr = m[r]
            top = m[rank]
            factor = mr[col]
            for c in range(col, ncols):
                mr[c] = (mr[c] * pivot - factor * top[c]) // prev
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _fp_rank(rows, p):
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        for r in range(rank + 1, nrows):
            factor = (m[r][col] * inv) % p
            if factor:
                for c in range(col, ncols):
                    m[r][c] = (m[r][c] - factor * m[rank][c]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def matrix_rank(rows, field):
    """Exact rank of a matrix of field elements (list of rows)."""
    if not rows or not rows[0]:
        return 0
    if field.characteristic == 0:
        cleared = []
        for row in rows:
            den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
            cleared.append([int(Fraction(x) * den) for x in row])
        return _bareiss_rank(cleared)
    return _fp_rank(rows, field.characteristic)
