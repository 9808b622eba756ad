"""Exact linear algebra over Q(phi): fraction-free elimination and nullspaces.

Matrices are lists of lists of FieldElement.  Forward elimination follows the
Bareiss scheme (two-by-two minors divided by the previous pivot), which keeps
entries in Z[phi] whenever the input rows are in Z[phi]; the division is exact
in any integral domain, and in a field it is exact trivially.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .field import FieldElement, ONE, ZERO

Matrix = List[List[FieldElement]]


def row_echelon(matrix: Sequence[Sequence[FieldElement]]) -> Tuple[Matrix, List[int]]:
    """Fraction-free row echelon form.  Returns (echelon matrix, pivot columns)."""
    m = [list(row) for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: List[int] = []
    prev = ONE
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            factor = m[i][c]
            for j in range(c + 1, ncols):
                m[i][j] = (p * m[i][j] - factor * m[r][j]) / prev
            m[i][c] = ZERO
        prev = p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(matrix: Sequence[Sequence[FieldElement]]) -> int:
    return len(row_echelon(matrix)[1])


def nullspace(matrix: Sequence[Sequence[FieldElement]]) -> List[List[FieldElement]]:
    """Basis of the right nullspace, one vector per free column, in column order.

    Vector k has a 1 in its free column and 0 in every other free column, so
    the output is deterministic and already echelonized.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    if nrows == 0:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    echelon, pivots = row_echelon(matrix)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis: List[List[FieldElement]] = []
    for fc in free_cols:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = ZERO
            for j in range(pc + 1, ncols):
                if not v[j].is_zero() and not echelon[r][j].is_zero():
                    s = s + echelon[r][j] * v[j]
            v[pc] = -s / echelon[r][pc]
        basis.append(v)
    return basis


def determinant(matrix: Sequence[Sequence[FieldElement]]) -> FieldElement:
    n = len(matrix)
    m = [list(row) for row in matrix]
    prev = ONE
    sign = 1
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        p = m[c][c]
        for i in range(c + 1, n):
            factor = m[i][c]
            for j in range(c + 1, n):
                m[i][j] = (p * m[i][j] - factor * m[c][j]) / prev
            m[i][c] = ZERO
        prev = p
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def mat_vec(matrix: Sequence[Sequence[FieldElement]],
            vec: Sequence[FieldElement]) -> List[FieldElement]:
    return [sum((row[j] * vec[j] for j in range(len(vec))), ZERO) for row in matrix]


def mat_mul(a: Sequence[Sequence[FieldElement]],
            b: Sequence[Sequence[FieldElement]]) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(k)), ZERO) for j in range(m)]
            for i in range(n)]


def transpose(matrix: Sequence[Sequence[FieldElement]]) -> Matrix:
    return [list(col) for col in zip(*matrix)]


def inverse(matrix: Sequence[Sequence[FieldElement]]) -> Matrix:
    """Inverse of a square matrix by Gauss-Jordan; raises on singular input."""
    n = len(matrix)
    aug = [list(matrix[i]) + [ONE if j == i else ZERO for j in range(n)]
           for i in range(n)]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if not aug[i][c].is_zero()), None)
        if pivot_row is None:
            raise ZeroDivisionError("singular matrix")
        if pivot_row != c:
            aug[c], aug[pivot_row] = aug[pivot_row], aug[c]
        inv_p = aug[c][c].inverse()
        aug[c] = [x * inv_p for x in aug[c]]
        for i in range(n):
            if i != c and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [aug[i][j] - f * aug[c][j] for j in range(2 * n)]
    return [row[n:] for row in aug]
