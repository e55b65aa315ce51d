"""Zonal harmonics and simultaneous eigenvectors of the commuting rotations.

Indices of the block variables ``T_j`` stand for ``X_{2j-1}^2 + X_{2j}^2``;
in odd dimension ``N = 2n + 1`` the extra variable ``X_N`` plays the role of
``Y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import I, ONE, ZERO, GaussianRational, as_scalar
from .harmonic import project_Lc
from .ops import laplacian
from .poly import (
    MINUS_INFINITY,
    Poly,
    embed,
    homogeneous_degree,
    substitute_linear,
)

__all__ = [
    "EigenSignature",
    "L_kernel_lift",
    "UniPoly",
    "block_norms",
    "casimir_eigenvalue",
    "common_eigen_harmonic",
    "eigen_monomial",
    "gegenbauer_residual",
    "gegenbauer_solve",
    "lift_to_kernel",
    "odd_dim_eigen_harmonic",
    "reduced_laplacian",
    "zonal_harmonic",
]


class UniPoly:
    """Polynomial in one variable ``Y``; ``coeffs[k]`` multiplies ``Y^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def derivative(self) -> "UniPoly":
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def compose(self, p: Poly) -> Poly:
        """``q(p)`` by Horner's rule."""
        acc = Poly.zero(p.dim)
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc

    def to_poly(self) -> Poly:
        """The same polynomial with ``Y`` written as ``x1``."""
        return Poly(1, {(k,): c for k, c in enumerate(self.coeffs)})

    def __str__(self):
        return str(self.to_poly()).replace("x1", "y")

    def __repr__(self):
        return f"UniPoly({str(self)!r})"


def gegenbauer_residual(q: UniPoly, n: int, N: int, alpha) -> UniPoly:
    """``(alpha - Y^2) q'' - (N-1) Y q' + n(n+N-2) q``."""
    alpha = as_scalar(alpha)
    top = q.degree()
    if top is MINUS_INFINITY:
        return UniPoly()
    lam = n * (n + N - 2)
    out = []
    for k in range(top + 1):
        # Y^k collects alpha q''_k, -q''_{k-2} Y^2, -(N-1) Y q'_{k-1}, lam q_k
        v = alpha * (q[k + 2] * ((k + 2) * (k + 1)))
        v = v - q[k] * (k * (k - 1) + (N - 1) * k - lam)
        out.append(v)
    return UniPoly(out)


def _gegenbauer(n: int, N: int, alpha: GaussianRational) -> UniPoly:
    # (k - n)(k + n + N - 2) vanishes only at k = n, or k = 2 - N - n < 0 when N >= 2
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    for k in range(n - 2, -1, -2):
        den = (k - n) * (k + n + N - 2)
        coeffs[k] = alpha * coeffs[k + 2] * Fraction((k + 2) * (k + 1), den)
    return UniPoly(coeffs)


def gegenbauer_solve(n: int, N: int, alpha) -> UniPoly:
    """Monic degree-``n`` polynomial solution of the zonal ODE.

    Only the parity of ``n`` occurs among the powers of ``Y``; ``alpha = 0``
    gives ``Y^n``.
    """
    if n < 0:
        raise ValueError("degree n must be non-negative")
    if N < 3:
        raise ValueError("gegenbauer_solve needs N >= 3")
    return _gegenbauer(n, N, as_scalar(alpha))


def _dot(u, v) -> GaussianRational:
    total = ZERO
    for a, b in zip(u, v):
        total = total + a * b
    return total


def zonal_harmonic(t, c, n: int):
    """``(q, h)`` with ``h`` the harmonic degree-``n`` polynomial congruent to
    ``q(t.X)`` modulo ``X.X - c``.

    ``N = len(t)``.  For ``N = 2`` the harmonic is written directly in the
    basis ``(X_1 + i X_2)^n, (X_1 - i X_2)^n``; ``q`` still solves the ODE.
    """
    t = [as_scalar(x) for x in t]
    c = as_scalar(c)
    N = len(t)
    if n < 0:
        raise ValueError("degree n must be non-negative")
    if N < 2:
        raise ValueError("zonal harmonics need N >= 2")
    if not any(t):
        raise ValueError("t must not be the zero vector")
    q = _gegenbauer(n, N, _dot(t, t) * c)
    if N == 2:
        return q, _zonal_plane(t, n)
    return q, project_Lc(q.compose(Poly.linear(t)), c)


def _zonal_plane(t, n: int) -> Poly:
    # t.X = (tau_bar z + tau w) / 2 with z = X1 + iX2, w = X1 - iX2,
    # tau = t1 + i t2; only z^n and w^n survive the projection
    if n == 0:
        return Poly.one(2)
    z = Poly.linear([1, I])
    w = Poly.linear([1, -I])
    tau = t[0] + I * t[1]
    tau_bar = t[0] - I * t[1]
    scale = Fraction(1, 2**n)
    return (z**n).scale(tau_bar**n * scale) + (w**n).scale(tau**n * scale)


@dataclass(frozen=True)
class EigenSignature:
    """Exponents ``a`` and signs ``eps`` of ``prod (X_{2j-1} + i eps_j X_{2j})^{a_j}``.

    ``eps_j`` is forced to ``+1`` wherever ``a_j = 0``.
    """

    a: tuple
    eps: tuple = None

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        eps = tuple(1 for _ in a) if self.eps is None else tuple(int(e) for e in self.eps)
        if len(eps) != len(a):
            raise ValueError(f"need {len(a)} signs, got {len(eps)}")
        if any(x < 0 for x in a):
            raise ValueError("exponents must be non-negative")
        if any(e not in (1, -1) for e in eps):
            raise ValueError("signs must be +1 or -1")
        eps = tuple(e if x else 1 for x, e in zip(a, eps))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "eps", eps)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def total(self) -> int:
        return sum(self.a)

    def check_dim(self, N: int):
        if N < 1 or self.n != N // 2:
            raise ValueError(f"signature has {self.n} blocks, N = {N} needs {N // 2}")

    def eigenvalues(self) -> tuple:
        """Eigenvalue of each paired generator ``M_{2j-1,2j}``."""
        return tuple(I * (e * x) for x, e in zip(self.a, self.eps))


def eigen_monomial(sig: EigenSignature, N: int) -> Poly:
    sig.check_dim(N)
    p = Poly.one(N)
    for j, (x, e) in enumerate(zip(sig.a, sig.eps)):
        if x:
            coeffs = [ZERO] * N
            coeffs[2 * j] = ONE
            coeffs[2 * j + 1] = I * e
            p = p * Poly.linear(coeffs) ** x
    return p


def casimir_eigenvalue(a, N: int) -> int:
    """Eigenvalue of the quadratic Casimir on the eigen monomial with exponents ``a``."""
    s = sum(a)
    return -s * (s + N - 2)


def reduced_laplacian(q: Poly, a) -> Poly:
    """``sum_j T_j d_j^2 q + (a_j + 1) d_j q`` on polynomials in ``T_1..T_n``.

    Satisfies ``Delta(Y q(norms)) = 4 Y (reduced_laplacian(q))(norms)``.
    """
    a = tuple(a)
    if len(a) != q.dim:
        raise ValueError(f"need {q.dim} exponents, got {len(a)}")
    out: dict = {}
    for m, c in q.terms.items():
        for k, e in enumerate(m):
            if e:
                # T d^2 T^e = e(e-1) T^(e-1) and (a+1) d T^e = (a+1) e T^(e-1)
                mm = m[:k] + (e - 1,) + m[k + 1:]
                out[mm] = out.get(mm, ZERO) + c * (e * (e - 1) + (a[k] + 1) * e)
    return Poly(q.dim, out)


def lift_to_kernel(a, d: int, q_d: Poly) -> Poly:
    """The unique homogeneous ``q`` of degree ``d`` in ``T_1..T_n`` with
    ``reduced_laplacian(q) = 0`` whose ``T_n^0`` coefficient is ``q_d``.
    """
    a = tuple(int(x) for x in a)
    n = len(a)
    if n < 1:
        raise ValueError("need at least one block")
    if d < 0:
        raise ValueError("degree must be non-negative")
    if q_d.dim != n - 1:
        raise ValueError(f"q_d must live in {n - 1} variables, got {q_d.dim}")
    hd = homogeneous_degree(q_d)
    if q_d and (hd is None or hd != d):
        raise ValueError(f"q_d must be 0 or homogeneous of degree {d}")
    if n == 1:
        if d >= 1:
            raise ValueError("with one block the kernel is zero in every degree d >= 1")
        return Poly.constant(1, q_d.constant_term())
    an = a[-1]
    total = Poly.zero(n)
    cur = q_d
    den = 1
    k = 0
    while cur:
        mono = tuple(k if i == n - 1 else 0 for i in range(n))
        total = total + embed(cur, n).mul_monomial(mono, as_scalar((-1) ** k) / den)
        k += 1
        den *= k * (k + an)
        cur = reduced_laplacian(cur, a[:-1])
    return total


L_kernel_lift = lift_to_kernel


def block_norms(N: int) -> list:
    """``[X_1^2 + X_2^2, X_3^2 + X_4^2, ...]``, one per full block."""
    out = []
    for j in range(N // 2):
        exps = [0] * N
        exps[2 * j] = 2
        first = Poly.monomial(exps)
        exps = [0] * N
        exps[2 * j + 1] = 2
        out.append(first + Poly.monomial(exps))
    return out


def common_eigen_harmonic(sig: EigenSignature, q: Poly, N: int) -> Poly:
    """``Y_{eps,a} q(X_1^2+X_2^2, ...)`` for even ``N`` and ``q`` in the kernel."""
    if N % 2:
        raise ValueError("common_eigen_harmonic needs even N; use odd_dim_eigen_harmonic")
    sig.check_dim(N)
    if q.dim != sig.n:
        raise ValueError(f"q must live in {sig.n} variables, got {q.dim}")
    Y = eigen_monomial(sig, N)
    norms = block_norms(N)
    p = Y * substitute_linear(q, norms)
    Lq = reduced_laplacian(q, sig.a)
    rhs = Y * substitute_linear(Lq, norms)
    if laplacian(p) != rhs.scale(4):
        raise ArithmeticError("factored Laplacian identity failed")
    if Lq:
        raise ValueError("q is not annihilated by reduced_laplacian for this signature")
    return p


def odd_dim_eigen_harmonic(sig: EigenSignature, d: int, seed: Poly, N: int,
                           seed_index: int = None) -> Poly:
    """Harmonic ``Y_{eps,a} q(norms, X_N)`` of degree ``d`` for odd ``N``.

    ``q = sum_k q_k(T) X_N^k``.  The seed is ``q_0`` when ``d - |a|`` is even
    and ``q_1`` when odd; it must be homogeneous of degree ``(d - |a|) // 2``.
    The rest follows from ``(k+2)(k+1) q_{k+2} = -4 L q_k`` for ``k + 2 <= d - |a|``.
    """
    if N % 2 == 0:
        raise ValueError("odd_dim_eigen_harmonic needs odd N")
    sig.check_dim(N)
    n = sig.n
    r = d - sig.total
    if r < 0:
        raise ValueError(f"degree {d} is below |a| = {sig.total}")
    start = r % 2
    if seed_index is not None and seed_index != start:
        raise ValueError(f"d - |a| = {r} needs the q_{start} seed, got q_{seed_index}")
    if seed.dim != n:
        raise ValueError(f"seed must live in {n} variables, got {seed.dim}")
    hd = homogeneous_degree(seed)
    if seed and (hd is None or hd != r // 2):
        raise ValueError(f"seed must be 0 or homogeneous of degree {r // 2}")
    q = Poly.zero(n + 1)
    cur, k = seed, start
    while cur and k <= r:
        mono = tuple(k if i == n else 0 for i in range(n + 1))
        q = q + embed(cur, n + 1).mul_monomial(mono)
        cur = reduced_laplacian(cur, sig.a).scale(Fraction(-4, (k + 2) * (k + 1)))
        k += 2
    images = block_norms(N) + [Poly.var(N, N)]
    p = eigen_monomial(sig, N) * substitute_linear(q, images)
    if laplacian(p):
        raise ArithmeticError("constructed polynomial is not harmonic")
    return p
