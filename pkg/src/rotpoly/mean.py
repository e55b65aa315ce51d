"""The normalized spherical mean ``lambda_0`` and the orthogonal action.

``lambda_0`` is the linear functional killed by every rotation generator and
equal to 1 on each power of ``X.X``; on real polynomials it is the average
over the unit sphere.  Three independent routes compute it:

* the monomial rule ``prod (a_j - 1)!! * s_{|a|, N}`` (zero if an exponent is odd),
* iterated Laplacians ``Delta^n p / (n! 2^n (2n+N-2)(2n+N-4)...(N))``,
* the pairing formula for products of linear forms.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product, zip_longest
from math import comb, factorial

from .arith import ZERO, ONE, GaussianRational, as_scalar, double_factorial
from .ops import laplacian_power
from .poly import MINUS_INFINITY, Poly, homogeneous_degree, shift, substitute_linear

__all__ = [
    "OrthoMatrix",
    "check_mean_value_harmonic",
    "central_binomial_sum",
    "pairing_mean",
    "perfect_matchings",
    "rational_orthogonal_matrices",
    "rotate",
    "s_coeff",
    "scaled_mean",
    "shifted_mean",
    "spherical_mean",
    "spherical_mean_monomial",
    "spherical_mean_via_laplacian",
]


def s_coeff(n: int, N: int) -> Fraction:
    """``s_{2n,N} = 1 / (N (N+2) ... (N+2n-2))``; equals 1 for ``n = 0``."""
    if n < 0 or N < 1:
        raise ValueError("s_coeff needs n >= 0 and N >= 1")
    den = 1
    for i in range(n):
        den *= N + 2 * i
    return Fraction(1, den)


def spherical_mean_monomial(exponents) -> Fraction:
    if any(e % 2 for e in exponents):
        return Fraction(0)
    num = 1
    for e in exponents:
        num *= double_factorial(e - 1)
    return num * s_coeff(sum(exponents) // 2, len(exponents))


def spherical_mean(p: Poly) -> GaussianRational:
    """``lambda_0(p)`` by the monomial rule."""
    total = ZERO
    for m, c in p.terms.items():
        w = spherical_mean_monomial(m)
        if w:
            total = total + c * w
    return total


def scaled_mean(p: Poly, scale) -> GaussianRational:
    """``sum_d scale(d) * lambda_0(p_d)`` over the homogeneous parts ``p_d``.

    Every functional killed by all rotation generators has this shape, so
    this covers means over spheres of other radii (``scale(d) = r^d``).
    """
    total = ZERO
    for m, c in p.terms.items():
        w = spherical_mean_monomial(m)
        if w:
            total = total + c * w * as_scalar(scale(sum(m)))
    return total


def spherical_mean_via_laplacian(p: Poly) -> GaussianRational:
    """``lambda_0`` of a homogeneous polynomial through ``Delta^n``."""
    d = homogeneous_degree(p)
    if d is None:
        raise ValueError("spherical_mean_via_laplacian needs a homogeneous polynomial")
    if d is MINUS_INFINITY or d % 2:
        return ZERO
    if d == 0:
        return p.constant_term()
    n, N = d // 2, p.dim
    den = factorial(n) * 2**n
    for i in range(1, n + 1):
        den *= 2 * n + N - 2 * i
    return laplacian_power(p, n).constant_term() / den


def _pair_mean(a: Poly, b: Poly) -> GaussianRational:
    # lambda_0(X_j X_k) = delta_jk / N
    total = ZERO
    for m, c in a.terms.items():
        other = b.terms.get(m)
        if other is not None:
            total = total + c * other
    return total / a.dim


def perfect_matchings(items):
    """All partitions of ``items`` into unordered pairs."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for sub in perfect_matchings(remaining):
            yield [(first, partner)] + sub


def pairing_mean(forms) -> GaussianRational:
    """``lambda_0(p_1 ... p_2n)`` for linear forms via the pair-partition sum."""
    forms = list(forms)
    if len(forms) % 2:
        raise ValueError("pairing_mean needs an even number of linear forms")
    if not forms:
        return ONE
    N = forms[0].dim
    for f in forms:
        if f.dim != N:
            raise ValueError("linear forms live in different dimensions")
        d = homogeneous_degree(f)
        if d is None or (d is not MINUS_INFINITY and d != 1):
            raise ValueError("pairing_mean needs homogeneous linear forms")
    n = len(forms) // 2
    pair = {}
    for a in range(len(forms)):
        for b in range(a + 1, len(forms)):
            pair[a, b] = _pair_mean(forms[a], forms[b])
    total = ZERO
    for matching in perfect_matchings(range(len(forms))):
        prod = ONE
        for a, b in matching:
            prod = prod * pair[a, b]
            if not prod:
                break
        total = total + prod
    return total * (N**n * s_coeff(n, N))


class OrthoMatrix:
    """Square matrix over Q(i) with ``A^T A = I``, checked on construction."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("orthogonal matrix must be square and non-empty")
        for j in range(n):
            for k in range(n):
                s = ZERO
                for m in range(n):
                    s = s + rows[m][j] * rows[m][k]
                if s != (1 if j == k else 0):
                    raise ValueError("matrix is not orthogonal: A^T A != I")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("OrthoMatrix is immutable")

    def __getitem__(self, idx):
        m, k = idx
        return self.rows[m][k]

    def __matmul__(self, other: "OrthoMatrix") -> "OrthoMatrix":
        n = self.dim
        return OrthoMatrix(
            [[sum((self.rows[i][m] * other.rows[m][k] for m in range(n)), ZERO)
              for k in range(n)] for i in range(n)]
        )

    def transpose(self) -> "OrthoMatrix":
        return OrthoMatrix(list(zip(*self.rows)))

    def __eq__(self, other):
        return isinstance(other, OrthoMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"OrthoMatrix([{body}])"


def rotate(p: Poly, A: OrthoMatrix) -> Poly:
    """``p(XA)``: ``X_k`` becomes ``sum_m X_m A[m][k]``."""
    if A.dim != p.dim:
        raise ValueError(f"matrix is {A.dim}x{A.dim}, polynomial has {p.dim} variables")
    N = p.dim
    images = [Poly.linear([A[m, k] for m in range(N)]) for k in range(N)]
    return substitute_linear(p, images)


def shifted_mean(p: Poly) -> Poly:
    """``lambda_0`` over X of ``p(X + t)``, returned as a polynomial in ``t``
    (written with the same variable names ``x1..xN``)."""
    N = p.dim
    out: dict = {}
    for m, c in shift(p).terms.items():
        w = spherical_mean_monomial(m[:N])
        if w:
            key = m[N:]
            out[key] = out.get(key, ZERO) + c * w
    return Poly(N, out)


def check_mean_value_harmonic(p: Poly) -> bool:
    """Whether ``lambda_0(p(X + t)) == p(t)``; equivalent to harmonicity."""
    return shifted_mean(p) == p


def central_binomial_sum(N: int, n: int) -> int:
    """``sum over b_1+..+b_N = n`` of ``prod C(2 b_j, b_j)``, by enumeration."""
    total = 0
    for bs in product(range(n + 1), repeat=N):
        if sum(bs) == n:
            term = 1
            for b in bs:
                term *= comb(2 * b, b)
            total += term
    return total


_PYTHAGOREAN = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def _plane_rotation(N: int, j: int, k: int, a: int, b: int, c: int) -> OrthoMatrix:
    rows = [[Fraction(int(r == s)) for s in range(N)] for r in range(N)]
    rows[j][j] = rows[k][k] = Fraction(a, c)
    rows[j][k] = Fraction(b, c)
    rows[k][j] = Fraction(-b, c)
    return OrthoMatrix(rows)


def rational_orthogonal_matrices(N: int, limit: int = 16) -> list:
    """A deterministic supply of orthogonal matrices with rational entries.

    Plane rotations built from Pythagorean triples, sign flips, coordinate
    transpositions, and products of rotations in overlapping planes (so that
    not every matrix is block diagonal).
    """
    ident = [[Fraction(int(r == s)) for s in range(N)] for r in range(N)]
    simple = [OrthoMatrix(ident)]
    for k in range(N):
        rows = [row[:] for row in ident]
        rows[k][k] = Fraction(-1)
        simple.append(OrthoMatrix(rows))
    planes = [(j, k) for j in range(N) for k in range(j + 1, N)]
    for j, k in planes:
        rows = [row[:] for row in ident]
        rows[j], rows[k] = rows[k], rows[j]
        simple.append(OrthoMatrix(rows))
    rots = [_plane_rotation(N, j, k, *t) for t in _PYTHAGOREAN for j, k in planes]
    products = [a @ b for a, b in zip(rots, rots[1:] + rots[:1])]
    # round-robin so that a small limit still mixes all three kinds
    ordered = []
    for group in zip_longest(simple, products, rots):
        for A in group:
            if A is not None and A not in ordered:
                ordered.append(A)
    return ordered[:limit]
