"""Exact Gaussian elimination over Q(i).

Matrices are lists of rows of :class:`GaussianRational`.  Only what the
verification suites need: row reduction, rank, nullspace and solving.
"""
from __future__ import annotations

from .arith import ZERO, ONE, as_scalar
from .poly import Poly

__all__ = ["rref", "rank", "nullspace", "solve", "coefficient_matrix", "combine"]


def rref(matrix):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    rows = [[as_scalar(x) for x in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix, ncols: int = None):
    """Basis of ``{v : matrix v = 0}`` as a list of column vectors."""
    if not matrix:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One solution ``x`` of ``matrix x = rhs``; raises if inconsistent."""
    aug = [list(row) + [as_scalar(b)] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    rows, pivots = rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    x = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][ncols]
    return x


def coefficient_matrix(polys, monomials=None):
    """Rows = polynomials, columns = monomials (union of supports by default)."""
    polys = list(polys)
    if monomials is None:
        seen = set()
        for p in polys:
            seen.update(p.terms)
        monomials = sorted(seen, key=lambda m: (sum(m), m), reverse=True)
    return [[p.coeff(m) for m in monomials] for p in polys], list(monomials)


def combine(vector, polys, dim: int) -> Poly:
    """``sum_k vector[k] * polys[k]``."""
    total = Poly.zero(dim)
    for c, p in zip(vector, polys):
        if c:
            total = total + p.scale(c)
    return total
