"""Exact linear algebra over Q.

rank() runs fraction-free (Bareiss) elimination on integer-cleared rows, so
every intermediate value is an exact integer; nullspace()/rref() work over
rationals with gmpy2.mpq. Matrices are dense lists of rows; callers keep
them small enough for that to be the right trade-off.
"""

from __future__ import annotations

from math import gcd
from typing import List, Sequence

from gmpy2 import mpq, mpz


def _integer_rows(rows: Sequence[Sequence]) -> List[List[mpz]]:
    out = []
    for row in rows:
        qrow = [mpq(v) for v in row]
        den = 1
        for v in qrow:
            d = int(v.denominator)
            den = den * d // gcd(den, d)
        out.append([mpz(v.numerator * (den // v.denominator)) for v in qrow])
    return out


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    """Rank over Q via fraction-free elimination."""
    m = [r for r in _integer_rows(rows) if any(r)]
    if not m or ncols == 0:
        return 0
    nrows = len(m)
    piv_r = 0
    prev = mpz(1)
    for c in range(ncols):
        if piv_r >= nrows:
            break
        best = -1
        for i in range(piv_r, nrows):
            v = m[i][c]
            if v != 0 and (best < 0 or abs(v) < abs(m[best][c])):
                best = i
        if best < 0:
            continue
        if best != piv_r:
            m[piv_r], m[best] = m[best], m[piv_r]
        pv = m[piv_r][c]
        row_p = m[piv_r]
        for i in range(piv_r + 1, nrows):
            vi = m[i][c]
            row_i = m[i]
            if vi == 0:
                for j in range(c + 1, ncols):
                    q, rem = divmod(pv * row_i[j], prev)
                    if rem:
                        raise ArithmeticError("fraction-free elimination lost exactness")
                    row_i[j] = q
            else:
                for j in range(c + 1, ncols):
                    q, rem = divmod(pv * row_i[j] - vi * row_p[j], prev)
                    if rem:
                        raise ArithmeticError("fraction-free elimination lost exactness")
                    row_i[j] = q
                row_i[c] = mpz(0)
        prev = pv
        piv_r += 1
    return piv_r


def rref(rows: Sequence[Sequence], ncols: int):
    """Reduced row echelon form over Q.

    Returns (pivot_columns, reduced_rows) with zero rows dropped.
    """
    m = [[mpq(v) for v in row] for row in rows]
    m = [r for r in m if any(v != 0 for v in r)]
    pivots: List[int] = []
    piv_r = 0
    for c in range(ncols):
        if piv_r >= len(m):
            break
        best = -1
        for i in range(piv_r, len(m)):
            if m[i][c] != 0:
                best = i
                break
        if best < 0:
            continue
        if best != piv_r:
            m[piv_r], m[best] = m[best], m[piv_r]
        pv = m[piv_r][c]
        if pv != 1:
            m[piv_r] = [v / pv for v in m[piv_r]]
        rp = m[piv_r]
        for i in range(len(m)):
            if i == piv_r:
                continue
            f = m[i][c]
            if f != 0:
                ri = m[i]
                for j in range(c, ncols):
                    if rp[j] != 0:
                        ri[j] = ri[j] - f * rp[j]
        pivots.append(c)
        piv_r += 1
    return pivots, m[:piv_r]


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[mpq]]:
    """Basis of the right kernel {v : M v = 0}, one vector per free column."""
    pivots, m = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [mpq(0)] * ncols
        v[fc] = mpq(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis
