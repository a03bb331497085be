"""Small exact linear algebra over Scalar matrices.

Everything here runs on lists of lists of Scalars at desk scale; the
point is exactness, not speed.
"""

from __future__ import annotations

from .errors import SingularMatrix
from .scalars import FieldSpec, Scalar


def _clone(rows):
    return [list(r) for r in rows]


def rref(rows, field: FieldSpec):
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = _clone(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inv()
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, field: FieldSpec) -> int:
    _, pivots = rref(rows, field)
    return len(pivots)


def kernel_basis(rows, ncols: int, field: FieldSpec):
    """Basis of the right kernel {v : A v = 0} as coefficient lists."""
    if not rows:
        basis = []
        for j in range(ncols):
            v = [field.zero()] * ncols
            v[j] = field.one()
            basis.append(v)
        return basis
    m, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [field.zero()] * ncols
        v[f] = field.one()
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(v)
    return basis


def invert(rows, field: FieldSpec):
    """Matrix inverse; raises SingularMatrix when the rank is deficient."""
    n = len(rows)
    aug = [list(rows[i]) + [field.one() if j == i else field.zero() for j in range(n)] for i in range(n)]
    m, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in m[:n]]


def determinant(rows, field: FieldSpec) -> Scalar:
    """Determinant by fraction-producing Gaussian elimination."""
    n = len(rows)
    m = _clone(rows)
    det = field.one()
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return field.zero()
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inv()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det
