"""Pure-Python integer kernels.

These are the reference implementations of the two hot loops used by
:mod:`cubicdirac.linalg`.  The compiled module ``_kernels`` exposes the same
functions with the same results; :mod:`cubicdirac.kernels` picks one at import.
"""

from __future__ import annotations


def matmul(a, b, ncols):
    """Integer matrix product of row lists ``a`` (m x k) and ``b`` (k x ncols)."""
    # Sparse view of b's rows so zero entries cost nothing.
    bnz = [[(j, t) for j, t in enumerate(row) if t] for row in b]
    out = []
    for row in a:
        acc = [0] * ncols
        for k, x in enumerate(row):
            if x:
                for j, t in bnz[k]:
                    acc[j] += x * t
        out.append(acc)
    return out


def rref_den(rows, ncols):
    """Fraction-free Gauss-Jordan elimination.

    Returns ``(m, den, pivots)`` where ``m / den`` is the reduced row echelon
    form of ``rows``.  Every division below is exact.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    den = 1
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            a = row[c]
            if a:
                m[i] = [(p * x - a * y) // den for x, y in zip(row, prow)]
            elif p != den and any(row):
                m[i] = [p * x // den for x in row]
        den = p
        pivots.append(c)
        r += 1
    if den < 0:
        m = [[-x for x in row] for row in m]
        den = -den
    return m, den, pivots
