"""Exact integer matrix routines: Smith normal form and kernel lattices.

Matrices are lists of equal-length rows of Python ints.  Everything here
targets the small dense matrices that show up in Gram-matrix and
group-presentation computations; no attempt is made to be fast on large
inputs.
"""

from __future__ import annotations


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _copy(mat) -> list[list[int]]:
    rows = [list(map(int, row)) for row in mat]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def _add_row(a, trans, dst, src, factor):
    # row dst += factor * row src, mirrored in the transform matrix
    a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
    trans[dst] = [x + factor * y for x, y in zip(trans[dst], trans[src])]


def _add_col(a, trans, dst, src, factor):
    for row in a:
        row[dst] += factor * row[src]
    for row in trans:
        row[dst] += factor * row[src]


def _swap_rows(a, trans, i, j):
    a[i], a[j] = a[j], a[i]
    trans[i], trans[j] = trans[j], trans[i]


def _swap_cols(a, trans, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]
    for row in trans:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(mat):
    """Diagonalize an integer matrix.

    Returns (d, p, q) with d = p @ mat @ q, where p and q are unimodular
    and d is diagonal with nonnegative entries, each dividing the next.
    """
    a = _copy(mat)
    m = len(a)
    n = len(a[0]) if m else 0
    p = _identity(m)
    q = _identity(n)
    t = 0
    while t < min(m, n):
        # move a nonzero entry of least magnitude to the pivot slot
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        _swap_rows(a, p, t, piv[0])
        _swap_cols(a, q, t, piv[1])
        while True:
            pivot = a[t][t]
            row_idx = next((i for i in range(t + 1, m) if a[i][t]), None)
            if row_idx is not None:
                quo = a[row_idx][t] // pivot
                _add_row(a, p, row_idx, t, -quo)
                if a[row_idx][t]:
                    # remainder is smaller than the pivot: promote it
                    _swap_rows(a, p, t, row_idx)
                continue
            col_idx = next((j for j in range(t + 1, n) if a[t][j]), None)
            if col_idx is not None:
                quo = a[t][col_idx] // pivot
                _add_col(a, q, col_idx, t, -quo)
                if a[t][col_idx]:
                    _swap_cols(a, q, t, col_idx)
                continue
            # pivot must divide the remaining block for the chain d_i | d_{i+1}
            stray = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % pivot:
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            _add_row(a, p, t, stray, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            p[t] = [-x for x in p[t]]
        t += 1
    return a, p, q


def diagonal(d) -> list[int]:
    """Diagonal entries of a (rectangular) matrix."""
    if not d:
        return []
    return [d[i][i] for i in range(min(len(d), len(d[0])))]


def matrix_rank(mat) -> int:
    d, _, _ = smith_normal_form(mat)
    return sum(1 for x in diagonal(d) if x)


def integer_kernel(mat) -> list[list[int]]:
    """Basis of the lattice {x in Z^n : mat @ x = 0}.

    The vectors are columns of a unimodular matrix, so they span the full
    (saturated) kernel lattice, not merely a finite-index sublattice.
    """
    rows = _copy(mat)
    m = len(rows)
    n = len(rows[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return _identity(n)
    d, _, q = smith_normal_form(rows)
    rank = sum(1 for x in diagonal(d) if x)
    return [[q[i][j] for i in range(n)] for j in range(rank, n)]
