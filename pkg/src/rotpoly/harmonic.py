"""Harmonic polynomials and the decomposition in base ``X.X``.

Every polynomial splits uniquely as ``p = p_0 + (X.X) p_1 + ... + (X.X)^s p_s``
with each ``p_j`` harmonic.  From that decomposition follow the sphere
projection ``L_c`` and the eigenspaces of ``(X.X) Delta``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .arith import as_scalar
from .linalg import coefficient_matrix, rank
from .ops import laplacian
from .poly import (
    Poly,
    embed,
    homogeneous_components,
    homogeneous_degree,
    monomials_of_degree,
)

__all__ = [
    "HarmonicDecomposition",
    "dim_harmonic",
    "dim_harmonic_via_boundary",
    "eigensplit_xx_laplacian",
    "harmonic_basis",
    "harmonic_decompose",
    "harmonic_from_boundary",
    "is_harmonic",
    "project_Lc",
    "reconstruct",
]


def is_harmonic(p: Poly) -> bool:
    return not laplacian(p)


@dataclass(frozen=True)
class HarmonicDecomposition:
    """``parts[j]`` is the harmonic coefficient of ``(X.X)^j``."""

    dim: int
    parts: tuple

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, j):
        return self.parts[j]

    def reconstruct(self) -> Poly:
        return reconstruct(self.parts, self.dim)


def reconstruct(parts, dim: int) -> Poly:
    """Horner evaluation of ``sum_j (X.X)^j parts[j]``."""
    acc = Poly.zero(dim)
    for h in reversed(list(parts)):
        acc = acc.mul_xx() + h
    return acc


def _shift_factor(m: int, e: int, N: int) -> int:
    # Delta((X.X)^m h) = 2m(2m + N - 2 + 2e) (X.X)^(m-1) h  for h harmonic of degree e
    return 2 * m * (2 * m + N - 2 + 2 * e)


def _decompose_homogeneous(p: Poly, d: int) -> list:
    N = p.dim
    s = d // 2
    lap = [p]
    for _ in range(s):
        lap.append(laplacian(lap[-1]))
    # K[j][k]: Delta^k((X.X)^j h_j) = K[j][k] (X.X)^(j-k) h_j, h_j of degree d - 2j
    K = [[1] * (s + 1) for _ in range(s + 1)]
    for j in range(s + 1):
        e = d - 2 * j
        for k in range(1, j + 1):
            K[j][k] = K[j][k - 1] * _shift_factor(j - k + 1, e, N)
    parts = [Poly.zero(N)] * (s + 1)
    for m in range(s, -1, -1):
        # Delta^m p = sum_{j >= m} K[j][m] (X.X)^(j-m) h_j ; peel the j > m terms
        acc = Poly.zero(N)
        for j in range(s, m, -1):
            acc = acc.mul_xx() + parts[j].scale(K[j][m]) if parts[j] else acc.mul_xx()
        rest = lap[m] - acc.mul_xx() if acc else lap[m]
        parts[m] = rest.scale(as_scalar(1) / K[m][m]) if rest else rest
    return parts


def harmonic_decompose(p: Poly) -> HarmonicDecomposition:
    """Unique expansion of ``p`` in base ``X.X`` with harmonic coefficients.

    Trailing zero parts are dropped, so a harmonic input gives ``[p]`` and the
    zero polynomial gives ``[0]``.
    """
    N = p.dim
    total: list = []
    for d, comp in homogeneous_components(p).items():
        parts = _decompose_homogeneous(comp, d)
        for j, h in enumerate(parts):
            if j == len(total):
                total.append(h)
            else:
                total[j] = total[j] + h
    while len(total) > 1 and not total[-1]:
        total.pop()
    if not total:
        total = [Poly.zero(N)]
    return HarmonicDecomposition(N, tuple(total))


def project_Lc(p: Poly, c) -> Poly:
    """The harmonic polynomial congruent to ``p`` modulo ``X.X - c``."""
    c = as_scalar(c)
    acc = Poly.zero(p.dim)
    for h in reversed(harmonic_decompose(p).parts):
        acc = acc.scale(c) + h
    return acc


def eigensplit_xx_laplacian(p: Poly) -> list:
    """Split homogeneous ``p`` into eigenvectors of ``(X.X) Delta``.

    Returns ``[(lambda_m, (X.X)^m h_m), ...]`` for the nonzero pieces, with
    ``lambda_m = 2m(N - 2 + 2d - 2m)``.
    """
    d = homogeneous_degree(p)
    if d is None:
        raise ValueError("eigensplit needs a homogeneous polynomial")
    if not p:
        return []
    N = p.dim
    out = []
    for m, h in enumerate(harmonic_decompose(p).parts):
        if h:
            comp = h
            for _ in range(m):
                comp = comp.mul_xx()
            out.append((2 * m * (N - 2 + 2 * d - 2 * m), comp))
    return out


def _check_boundary(q: Poly, deg: int, name: str):
    if not q:
        return
    hd = homogeneous_degree(q)
    if hd is None or hd != deg:
        raise ValueError(f"{name} must be 0 or homogeneous of degree {deg}")


def harmonic_from_boundary(p0: Poly, p1: Poly, N: int, d: int) -> Poly:
    """The unique harmonic ``p = sum_k p_k X_N^k`` of degree ``d`` with the
    given ``X_N^0`` and ``X_N^1`` coefficients (polynomials in ``N-1`` vars).

    ``p_{2k} = (-1)^k Delta^k p0 / (2k)!`` and
    ``p_{2k+1} = (-1)^k Delta^k p1 / (2k+1)!``.
    """
    if N < 2:
        raise ValueError("harmonic_from_boundary needs N >= 2")
    for q, name in ((p0, "p0"), (p1, "p1")):
        if q.dim != N - 1:
            raise ValueError(f"{name} must live in {N - 1} variables, got {q.dim}")
    if d < 0:
        raise ValueError("degree must be non-negative")
    _check_boundary(p0, d, "p0")
    _check_boundary(p1, d - 1, "p1")
    if d == 0 and p1:
        raise ValueError("p1 must be 0 when d = 0")
    positions = list(range(1, N))
    total = Poly.zero(N)
    for start, seed in ((0, p0), (1, p1)):
        cur = seed
        k = start
        sign = 1
        while cur and k <= d:
            coef = as_scalar(sign) / factorial(k)
            total = total + embed(cur, N, positions).mul_monomial(
                tuple(k if i == N - 1 else 0 for i in range(N)), coef
            )
            cur = laplacian(cur)
            k += 2
            sign = -sign
    return total


def harmonic_basis(N: int, d: int) -> list:
    """Basis of the homogeneous harmonics of degree ``d`` in ``N`` variables,
    built from monomial boundary data; rational coefficients."""
    if N < 2:
        raise ValueError("harmonic_basis needs N >= 2")
    if d < 0:
        return []
    zero = Poly.zero(N - 1)
    basis = [harmonic_from_boundary(Poly.monomial(m), zero, N, d)
             for m in monomials_of_degree(N - 1, d)]
    if d >= 1:
        basis += [harmonic_from_boundary(zero, Poly.monomial(m), N, d)
                  for m in monomials_of_degree(N - 1, d - 1)]
    return basis


def basis_rank(basis, N: int, d: int) -> int:
    """Exact rank of the coefficient matrix over the degree-``d`` monomials."""
    if not basis:
        return 0
    matrix, _ = coefficient_matrix(basis, monomials_of_degree(N, d))
    return rank(matrix)


def dim_harmonic(N: int, d: int) -> int:
    """``C(N+d-1, N-1) - C(N+d-3, N-1)``: monomials of degree d minus degree d-2."""
    if d < 0:
        return 0
    lower = comb(N + d - 3, N - 1) if d >= 2 else 0
    return comb(N + d - 1, N - 1) - lower


def dim_harmonic_via_boundary(N: int, d: int) -> int:
    """``C(N+d-2, N-2) + C(N+d-3, N-2)``: boundary data in N-1 variables."""
    if d < 0:
        return 0
    second = comb(N + d - 3, N - 2) if d >= 1 else 0
    return comb(N + d - 2, N - 2) + second
