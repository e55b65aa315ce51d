"""Differential operators on Q(i)[X_1..X_N].

Partials, rotation generators ``M_jk = X_j d_k - X_k d_j``, the Laplacian,
the Euler operator ``sum X_j d_j``, the quadratic Casimir ``sum_{j<k} M_jk^2``,
general first-order derivations, and commutators.  Indices are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .poly import Poly, _check_index, x_dot_x

__all__ = [
    "Derivation",
    "Op",
    "apply_derivation",
    "casimir",
    "commutator",
    "decompose_annihilating_derivation",
    "euler",
    "laplacian",
    "laplacian_power",
    "partial",
    "rotation_generator",
    "CASIMIR",
    "EULER",
    "LAPLACIAN",
    "MUL_XX",
    "M",
]


def _collect(dim, pairs):
    out = {}
    get = out.get
    for m, c in pairs:
        prev = get(m)
        out[m] = c if prev is None else prev + c
    return Poly._wrap(dim, {m: c for m, c in out.items() if c})


def partial(p: Poly, j: int) -> Poly:
    k = _check_index(p.dim, j)

    def gen():
        for m, c in p._terms.items():
            e = m[k]
            if e:
                yield m[:k] + (e - 1,) + m[k + 1:], c * e

    return Poly._wrap(p.dim, dict(gen()))


def rotation_generator(p: Poly, j: int, k: int) -> Poly:
    """``M_jk p = X_j d_k p - X_k d_j p``."""
    a = _check_index(p.dim, j)
    b = _check_index(p.dim, k)
    if a == b:
        raise ValueError(f"rotation generator needs j != k, got j = k = {j}")

    def gen():
        for m, c in p._terms.items():
            eb = m[b]
            if eb:
                mm = list(m)
                mm[a] += 1
                mm[b] -= 1
                yield tuple(mm), c * eb
            ea = m[a]
            if ea:
                mm = list(m)
                mm[b] += 1
                mm[a] -= 1
                yield tuple(mm), c * (-ea)

    return _collect(p.dim, gen())


def laplacian(p: Poly) -> Poly:
    def gen():
        for m, c in p._terms.items():
            for k, e in enumerate(m):
                if e >= 2:
                    yield m[:k] + (e - 2,) + m[k + 1:], c * (e * (e - 1))

    return _collect(p.dim, gen())


def laplacian_power(p: Poly, n: int) -> Poly:
    for _ in range(n):
        if not p:
            break
        p = laplacian(p)
    return p


def euler(p: Poly) -> Poly:
    """``r d_r = sum_j X_j d_j``; scales each homogeneous part by its degree."""
    return Poly._wrap(
        p.dim, {m: c * sum(m) for m, c in p._terms.items() if sum(m)}
    )


def casimir(p: Poly) -> Poly:
    """``M.M`` summed over unordered pairs ``j < k``."""
    total = Poly.zero(p.dim)
    for j, k in combinations(range(1, p.dim + 1), 2):
        total = total + rotation_generator(rotation_generator(p, j, k), j, k)
    return total


@dataclass(frozen=True)
class Derivation:
    """First-order operator ``sum_j coeffs[j-1] * d_j``.

    A derivation is fixed by its values on the indeterminates, so
    ``coeffs[j-1]`` is simply ``L(X_j)``.
    """

    dim: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.dim:
            raise ValueError(f"need {self.dim} coefficient polynomials, got {len(coeffs)}")
        for a in coeffs:
            if not isinstance(a, Poly) or a.dim != self.dim:
                raise ValueError("derivation coefficients must be polynomials of matching dimension")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def rotation(cls, dim: int, j: int, k: int) -> "Derivation":
        """``M_jk`` as a derivation: ``d_k`` gets ``X_j``, ``d_j`` gets ``-X_k``."""
        if j == k:
            raise ValueError("rotation generator needs j != k")
        coeffs = [Poly.zero(dim)] * dim
        coeffs[k - 1] = Poly.var(dim, j)
        coeffs[j - 1] = -Poly.var(dim, k)
        return cls(dim, tuple(coeffs))

    @classmethod
    def combination(cls, dim: int, weights: dict) -> "Derivation":
        """``sum c_jk M_jk`` for a mapping ``{(j, k): c_jk}`` of polynomial weights."""
        coeffs = [Poly.zero(dim)] * dim
        for (j, k), c in weights.items():
            coeffs[k - 1] = coeffs[k - 1] + c * Poly.var(dim, j)
            coeffs[j - 1] = coeffs[j - 1] - c * Poly.var(dim, k)
        return cls(dim, tuple(coeffs))

    def __call__(self, p: Poly) -> Poly:
        return apply_derivation(self, p)

    def __add__(self, other: "Derivation") -> "Derivation":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return Derivation(self.dim, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, c) -> "Derivation":
        return Derivation(self.dim, tuple(c * a for a in self.coeffs))


def apply_derivation(L: Derivation, p: Poly) -> Poly:
    if L.dim != p.dim:
        raise ValueError(f"dimension mismatch: derivation {L.dim}, polynomial {p.dim}")
    total = Poly.zero(p.dim)
    for j, a in enumerate(L.coeffs, start=1):
        if a:
            total = total + a * partial(p, j)
    return total


def decompose_annihilating_derivation(L: Derivation) -> dict:
    """Write a derivation with ``L(X.X) = 0`` as ``sum_{j<k} c_jk M_jk``.

    Peels off the last active variable: each ``a_j`` splits as
    ``a_j^o + b_j X_m`` with ``a_j^o`` free of ``X_m``; the ``a^o`` part
    recurses on ``m - 1`` variables and the rest is ``sum_i b_i M_{m,i}``.
    The result is checked by re-applying it to every ``X_j``.
    """
    N = L.dim
    if apply_derivation(L, x_dot_x(N)):
        raise ValueError("derivation does not annihilate X.X")
    weights: dict = {}

    def add(j, k, c):
        if c:
            weights[(j, k)] = weights.get((j, k), Poly.zero(N)) + c

    a = list(L.coeffs)
    for m in range(N, 1, -1):
        k = m - 1
        for j in range(1, m):
            has = {mono: c for mono, c in a[j - 1].terms.items() if mono[k]}
            free = {mono: c for mono, c in a[j - 1].terms.items() if not mono[k]}
            # b_j = (a_j - a_j^o) / X_m, exact because every term carries X_m
            b = Poly._wrap(N, {mono[:k] + (mono[k] - 1,) + mono[k + 1:]: c for mono, c in has.items()})
            # b_j X_m d_j - b_j X_j d_m = b_j M_{m j} = -b_j M_{j m}
            add(j, m, -b)
            a[j - 1] = Poly._wrap(N, free)
        a[m - 1] = Poly.zero(N)
    if a[0]:
        raise ArithmeticError("residual first coefficient is nonzero; X.X not annihilated")
    weights = {jk: c for jk, c in weights.items() if c}
    rebuilt = Derivation.combination(N, weights)
    if rebuilt.coeffs != L.coeffs:
        raise ArithmeticError("decomposition failed re-application check")
    return weights


@dataclass(frozen=True)
class Op:
    """Named operator usable in :func:`commutator`.

    ``kind`` is one of ``"M"``, ``"casimir"``, ``"laplacian"``, ``"mul_xx"``,
    ``"euler"``; ``j, k`` are only used by ``"M"``.
    """

    kind: str
    j: int = 0
    k: int = 0

    def __call__(self, p: Poly) -> Poly:
        if self.kind == "M":
            return rotation_generator(p, self.j, self.k)
        if self.kind == "casimir":
            return casimir(p)
        if self.kind == "laplacian":
            return laplacian(p)
        if self.kind == "mul_xx":
            return p.mul_xx()
        if self.kind == "euler":
            return euler(p)
        raise ValueError(f"unknown operator kind {self.kind!r}")

    def __str__(self):
        return f"M{self.j}{self.k}" if self.kind == "M" else self.kind


def M(j: int, k: int) -> Op:
    return Op("M", j, k)


CASIMIR = Op("casimir")
LAPLACIAN = Op("laplacian")
MUL_XX = Op("mul_xx")
EULER = Op("euler")


def commutator(A, B, p: Poly) -> Poly:
    """``(AB - BA) p`` for any two operators (callables on polynomials)."""
    return A(B(p)) - B(A(p))
