"""Randomized and exhaustive checks of the library's identities.

Each suite takes a ``random.Random`` and returns a :class:`SuiteResult`.
Suites ``1``..``12`` are the acceptance criteria; the named property suites
cover the remaining invariants.  Sampling is reproducible from the seed.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial

from .arith import I, ONE, ZERO, GaussianRational
from .harmonic import (
    basis_rank,
    dim_harmonic,
    dim_harmonic_via_boundary,
    eigensplit_xx_laplacian,
    harmonic_basis,
    harmonic_decompose,
    is_harmonic,
    project_Lc,
    reconstruct,
)
from .linalg import nullspace, solve
from .mean import (
    central_binomial_sum,
    check_mean_value_harmonic,
    pairing_mean,
    rational_orthogonal_matrices,
    rotate,
    s_coeff,
    spherical_mean,
    spherical_mean_monomial,
    spherical_mean_via_laplacian,
)
from .ops import (
    CASIMIR,
    LAPLACIAN,
    MUL_XX,
    Derivation,
    M,
    apply_derivation,
    casimir,
    commutator,
    decompose_annihilating_derivation,
    euler,
    laplacian,
    laplacian_power,
    partial,
    rotation_generator,
)
from .poly import (
    Poly,
    divmod_monic,
    format_poly,
    homogeneous_components,
    homogeneous_degree,
    monomials_of_degree,
    parse_poly,
    poly_from_dict,
    poly_to_dict,
    x_dot_x,
)
from .zonal import (
    EigenSignature,
    UniPoly,
    casimir_eigenvalue,
    common_eigen_harmonic,
    eigen_monomial,
    gegenbauer_residual,
    gegenbauer_solve,
    lift_to_kernel,
    odd_dim_eigen_harmonic,
    reduced_laplacian,
    zonal_harmonic,
)

DEFAULT_SEED = 1729


@dataclass
class SuiteResult:
    name: str
    title: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def check(self, cond: bool, label: str):
        if cond:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(label)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name:>12}  {self.title}  ({self.passed} passed, {self.failed} failed, {self.seconds:.1f}s)"


# -- samplers ---------------------------------------------------------------

def random_scalar(rng: random.Random, complex_rate: float = 0.25) -> GaussianRational:
    def part():
        num = rng.randint(-6, 6)
        den = rng.choice((1, 1, 1, 2, 3, 4))
        return Fraction(num, den)

    re = part()
    im = part() if rng.random() < complex_rate else 0
    z = GaussianRational(re, im)
    return z if z else ONE


def random_exponents(rng: random.Random, N: int, d: int) -> tuple:
    """A uniformly chosen monomial of total degree exactly ``d``."""
    cuts = sorted(rng.randint(0, d) for _ in range(N - 1))
    bounds = [0] + cuts + [d]
    return tuple(bounds[i + 1] - bounds[i] for i in range(N))


def random_poly(rng: random.Random, N: int, max_deg: int, terms: int = 4,
                complex_rate: float = 0.25) -> Poly:
    out = {}
    for _ in range(terms):
        m = random_exponents(rng, N, rng.randint(0, max_deg))
        out[m] = random_scalar(rng, complex_rate)
    return Poly(N, out)


def random_homogeneous(rng: random.Random, N: int, d: int, terms: int = 4,
                       complex_rate: float = 0.25) -> Poly:
    out = {}
    for _ in range(terms):
        out[random_exponents(rng, N, d)] = random_scalar(rng, complex_rate)
    return Poly(N, out)


def random_linear_form(rng: random.Random, N: int) -> Poly:
    while True:
        f = Poly.linear([random_scalar(rng) if rng.random() < 0.7 else 0 for _ in range(N)])
        if f:
            return f


@lru_cache(maxsize=None)
def _basis(N: int, d: int) -> tuple:
    return tuple(harmonic_basis(N, d))


def random_harmonic(rng: random.Random, N: int, d: int, terms: int = 3) -> Poly:
    """A nonzero combination of a few basis harmonics of degree ``d``."""
    basis = _basis(N, d)
    while True:
        h = Poly.zero(N)
        for b in rng.sample(basis, min(terms, len(basis))):
            h = h + b.scale(random_scalar(rng))
        if h:
            return h


def random_derivation(rng: random.Random, N: int, max_deg: int = 2) -> Derivation:
    return Derivation(N, tuple(random_poly(rng, N, max_deg, terms=2) for _ in range(N)))


# -- brute-force oracles ----------------------------------------------------

def brute_force_decompose(p: Poly) -> list:
    """Decomposition by an exact linear solve; also asserts uniqueness.

    Unknowns are every coefficient of every candidate part; equations are
    the reconstruction and the harmonicity of each part.
    """
    N = p.dim
    total: list = []
    for d, comp in homogeneous_components(p).items():
        s = d // 2
        unknowns = []  # (j, monomial)
        for j in range(s + 1):
            unknowns += [(j, m) for m in monomials_of_degree(N, d - 2 * j)]
        columns = []
        for j, m in unknowns:
            g = Poly.monomial(m)
            for _ in range(j):
                g = g.mul_xx()
            columns.append((g, laplacian(Poly.monomial(m)), j))
        rows, rhs = [], []
        for mono in monomials_of_degree(N, d):
            rows.append([g.coeff(mono) for g, _, _ in columns])
            rhs.append(comp.coeff(mono))
        for j in range(s + 1):
            if d - 2 * j < 2:
                continue
            for mono in monomials_of_degree(N, d - 2 * j - 2):
                rows.append([lap.coeff(mono) if jj == j else ZERO for _, lap, jj in columns])
                rhs.append(ZERO)
        if nullspace(rows):
            raise ArithmeticError("decomposition is not unique")
        x = solve(rows, rhs)
        for j in range(s + 1):
            part = Poly(N, {m: c for (jj, m), c in zip(unknowns, x) if jj == j})
            while len(total) <= j:
                total.append(Poly.zero(N))
            total[j] = total[j] + part
    while len(total) > 1 and not total[-1]:
        total.pop()
    return total or [Poly.zero(N)]


def operator_matrix(op, N: int, d: int):
    """Matrix of a degree-preserving operator on the degree-``d`` monomials
    (columns are images of basis monomials)."""
    monos = monomials_of_degree(N, d)
    images = [op(Poly.monomial(m)) for m in monos]
    return [[img.coeff(r) for img in images] for r in monos], monos


def joint_kernel(ops, N: int, d: int) -> list:
    """Basis of ``{p in P_{N,d} : op(p) = 0 for all ops}``."""
    rows = []
    monos = None
    for op in ops:
        mat, monos = operator_matrix(op, N, d)
        rows += mat
    if monos is None:
        monos = monomials_of_degree(N, d)
    vecs = nullspace(rows, len(monos)) if rows else nullspace([], len(monos))
    return [Poly(N, dict(zip(monos, v))) for v in vecs]


def is_scalar_multiple(p: Poly, q: Poly) -> bool:
    """Whether ``p = c q`` for some scalar ``c`` (``q`` nonzero)."""
    if not q:
        return not p
    m, c = next(iter(q.terms.items()))
    return p == q.scale(p.coeff(m) / c)


# -- acceptance suites --------------------------------------------------------

def suite_magic(rng):
    r = SuiteResult("1", "magic identity (X.X)Lap = E^2 + (N-2)E + M.M")
    for i in range(500):
        N = 2 + i % 4
        p = random_poly(rng, N, 10, terms=rng.randint(1, 8))
        e = euler(p)
        lhs = laplacian(p).mul_xx()
        rhs = euler(e) + e.scale(N - 2) + casimir(p)
        r.check(lhs == rhs, f"N={N} p={p}")
    return r


def suite_commutators(rng):
    r = SuiteResult("2", "commutator table of the rotation generators")
    for N in range(2, 6):
        for _ in range(3):
            p = random_poly(rng, N, 6, terms=3)
            pairs = list(combinations(range(1, N + 1), 2))
            for (j, k), (l, m) in product(pairs, repeat=2):
                if {j, k}.isdisjoint({l, m}):
                    r.check(not commutator(M(j, k), M(l, m), p), f"[M{j}{k},M{l}{m}] N={N}")
            for j, k, l in product(range(1, N + 1), repeat=3):
                if len({j, k, l}) == 3:
                    r.check(commutator(M(j, k), M(k, l), p) == rotation_generator(p, j, l),
                            f"[M{j}{k},M{k}{l}] N={N}")
            for j, k in pairs:
                r.check(not commutator(M(j, k), CASIMIR, p), f"[M{j}{k},M.M] N={N}")
    return r


def suite_dimension(rng):
    r = SuiteResult("3", "harmonic dimension formulas with certified rank")
    for N in range(2, 6):
        for d in range(0, 9):
            basis = harmonic_basis(N, d)
            f1 = comb(N + d - 2, N - 2) + (comb(N + d - 3, N - 2) if d >= 1 else 0)
            f2 = comb(N + d - 1, N - 1) - (comb(N + d - 3, N - 1) if d >= 2 else 0)
            r.check(len(basis) == f1 == f2, f"count N={N} d={d}")
            r.check(dim_harmonic(N, d) == f2 and dim_harmonic_via_boundary(N, d) == f1,
                    f"formula N={N} d={d}")
            r.check(basis_rank(basis, N, d) == len(basis), f"rank N={N} d={d}")
            r.check(all(is_harmonic(b) for b in basis), f"harmonic N={N} d={d}")
    return r


def suite_worked_mean(rng):
    r = SuiteResult("4", "worked mean of X1^4 X2^6 at N = 4 by three routes")
    p = Poly.monomial((4, 6, 0, 0))
    target = Fraction(1, 2**9)
    r.check(spherical_mean(p) == target, "monomial route")
    r.check(spherical_mean_via_laplacian(p) == target, "Laplacian route")
    r.check(laplacian_power(p, 5) == Poly.constant(4, 10 * factorial(4) * factorial(6)),
            "fifth Laplacian")
    forms = [Poly.var(4, 1)] * 4 + [Poly.var(4, 2)] * 6
    r.check(pairing_mean(forms) == target, "pairing route")
    r.check(s_coeff(5, 4) == Fraction(1, 12 * 10 * 8 * 6 * 4), "s coefficient")
    return r


def suite_mean_oracles(rng):
    r = SuiteResult("5", "three spherical-mean routes agree")
    # 200 arbitrary homogeneous polynomials and 200 products of linear forms
    for i in range(400):
        N = 1 + i % 4
        d = rng.randint(0, 8)
        if i % 2:
            p = random_homogeneous(rng, N, d, terms=rng.randint(1, 5))
            a = spherical_mean(p)
            r.check(a == spherical_mean_via_laplacian(p), f"laplacian N={N} p={p}")
        else:
            forms = [random_linear_form(rng, N) for _ in range(d)]
            p = Poly.one(N)
            for f in forms:
                p = p * f
            a = spherical_mean(p)
            r.check(a == spherical_mean_via_laplacian(p), f"laplacian N={N} p={p}")
            if d % 2 == 0:
                r.check(a == pairing_mean(forms), f"pairing N={N} forms={forms}")
            else:
                r.check(not a, f"odd degree N={N}")
    return r


def suite_multinomial(rng):
    r = SuiteResult("6", "central binomial sum identity by enumeration")
    for N in range(1, 7):
        for n in range(0, 7):
            rhs = Fraction(2**n, factorial(n))
            for i in range(n):
                rhs *= N + 2 * i
            r.check(central_binomial_sum(N, n) == rhs, f"N={N} n={n}")
            r.check(rhs == Fraction(2**n, factorial(n)) / s_coeff(n, N), f"s form N={N} n={n}")
        r.check(central_binomial_sum(N, 2) == 2 * N * N + 4 * N, f"spot value N={N}")
    return r


def suite_decomposition(rng):
    r = SuiteResult("7", "harmonic decomposition round trip, uniqueness, brute-force cross-check")
    for i in range(500):
        N = 1 + i % 5
        p = random_poly(rng, N, 10, terms=rng.randint(1, 3))
        dec = harmonic_decompose(p)
        r.check(dec.reconstruct() == p, f"round trip N={N} p={p}")
        r.check(all(is_harmonic(h) for h in dec), f"parts harmonic N={N} p={p}")
    for i in range(100):
        N = 2 + i % 4
        s = rng.randint(0, 3)
        top = 6 if N < 5 else 4
        parts = [random_harmonic(rng, N, rng.randint(0, top), 2) if rng.random() < 0.8
                 else Poly.zero(N) for _ in range(s + 1)]
        parts[-1] = parts[-1] or Poly.one(N)
        p = reconstruct(parts, N)
        r.check(list(harmonic_decompose(p)) == parts, f"uniqueness N={N} parts={parts}")
    for i in range(60):
        N = 1 + i % 3
        p = random_poly(rng, N, 6, terms=rng.randint(1, 4))
        r.check(brute_force_decompose(p) == list(harmonic_decompose(p)), f"brute force N={N} p={p}")
    for i in range(40):
        N = 2 + i % 4
        d = rng.randint(0, 8)
        p = random_homogeneous(rng, N, d, terms=3)
        for j, h in enumerate(harmonic_decompose(p)):
            hd = homogeneous_degree(h)
            r.check(not h or hd == d - 2 * j, f"degree bookkeeping N={N} p={p}")
    return r


def suite_mean_value(rng):
    r = SuiteResult("8", "mean-value property characterizes harmonics")
    for N in range(1, 5):
        for d in range(0, 7):
            # in one variable only 1 and X_1 are harmonic
            basis = _basis(N, d) if N >= 2 else [Poly.monomial((d,))] if d <= 1 else []
            for b in basis:
                r.check(check_mean_value_harmonic(b) == is_harmonic(b) == True, f"basis N={N} d={d}")
    count = 0
    while count < 120:
        N = 1 + count % 4
        p = random_poly(rng, N, 6, terms=rng.randint(1, 4))
        if is_harmonic(p):
            continue
        count += 1
        r.check(check_mean_value_harmonic(p) is False, f"non-harmonic N={N} p={p}")
    return r


def suite_rotation(rng):
    r = SuiteResult("9", "spherical mean and Laplacian commute with rational rotations")
    for N in range(1, 5):
        mats = rational_orthogonal_matrices(N, limit=12)
        r.check(len(mats) >= 10 or N == 1, f"library size N={N}")
        for i in range(100):
            p = random_poly(rng, N, 6, terms=rng.randint(1, 4))
            A = mats[i % len(mats)]
            pa = rotate(p, A)
            r.check(spherical_mean(pa) == spherical_mean(p), f"mean N={N} p={p} A={A}")
            r.check(laplacian(pa) == rotate(laplacian(p), A), f"Laplacian N={N} p={p} A={A}")
            if i % 10 == 0:
                B = mats[(i + 3) % len(mats)]
                r.check(rotate(p, A @ B) == rotate(rotate(p, B), A), f"action law N={N}")
                r.check(laplacian_power(pa, 2) == rotate(laplacian_power(p, 2), A),
                        f"Laplacian power N={N}")
    return r


def suite_zonal(rng):
    r = SuiteResult("10", "zonal ODE, parity and zonal harmonics")
    for N in (3, 4, 5):
        for alpha in (0, 1, 2, Fraction(1, 4)):
            for n in range(0, 9):
                q = gegenbauer_solve(n, N, alpha)
                r.check(not gegenbauer_residual(q, n, N, alpha), f"ODE n={n} N={N} a={alpha}")
                r.check(q.degree() == n and q[n] == 1, f"monic n={n}")
                r.check(all(not c for k, c in enumerate(q.coeffs) if (k - n) % 2), f"parity n={n}")
                if alpha == 0:
                    r.check(q == UniPoly([0] * n + [1]), f"alpha 0 n={n}")
    for i in range(60):
        N = 2 + i % 4
        n = rng.randint(0, 6)
        t = [random_scalar(rng, 0.1) if rng.random() < 0.8 else 0 for _ in range(N)]
        if not any(t):
            t[0] = ONE
        c = random_scalar(rng, 0.1)
        q, h = zonal_harmonic(t, c, n)
        g = q.compose(Poly.linear(t))
        r.check(is_harmonic(h), f"harmonic t={t} c={c} n={n}")
        r.check(not h or homogeneous_degree(h) == n, f"homogeneous t={t} c={c} n={n}")
        rem = divmod_monic(g - h, x_dot_x(N) - c, N)[1]
        r.check(not rem, f"congruence t={t} c={c} n={n}")
        if N == 2:
            r.check(h == project_Lc(g, c), f"plane path t={t} c={c} n={n}")
    return r


def suite_eigen(rng):
    r = SuiteResult("11", "eigen monomials under paired generators, Laplacian and Casimir")
    for N in (2, 3, 4, 5):
        n = N // 2
        for a in product(range(6), repeat=n):
            if sum(a) > 5:
                continue
            for eps in product((1, -1), repeat=n):
                sig = EigenSignature(a, eps)
                if sig.eps != eps:
                    continue
                Y = eigen_monomial(sig, N)
                for j in range(n):
                    lam = I * (sig.eps[j] * a[j])
                    r.check(rotation_generator(Y, 2 * j + 1, 2 * j + 2) == Y.scale(lam),
                            f"M eigen N={N} a={a} eps={eps} j={j}")
                r.check(not laplacian(Y), f"harmonic N={N} a={a}")
                # brute force first: read the scalar off one coefficient
                cas = casimir(Y)
                m, c = next(iter(Y.terms.items()))
                ratio = cas.coeff(m) / c
                r.check(cas == Y.scale(ratio), f"Casimir eigenvector N={N} a={a}")
                r.check(ratio == casimir_eigenvalue(a, N), f"Casimir value N={N} a={a}")
    return r


def suite_projection(rng):
    r = SuiteResult("12", "sphere projection: harmonic, congruent, equivariant")
    for i in range(220):
        N = 2 + i % 4
        p = random_poly(rng, N, 7 if N < 5 else 5, terms=rng.randint(1, 3))
        c = random_scalar(rng)
        lp = project_Lc(p, c)
        r.check(is_harmonic(lp), f"harmonic N={N} p={p} c={c}")
        r.check(not divmod_monic(p - lp, x_dot_x(N) - c, N)[1], f"congruent N={N} p={p} c={c}")
        j, k = rng.sample(range(1, N + 1), 2)
        r.check(project_Lc(rotation_generator(p, j, k), c) == rotation_generator(lp, j, k),
                f"equivariant N={N} p={p} c={c}")
        r.check(project_Lc(lp, c) == lp, f"idempotent N={N}")
    return r


# -- property suites ----------------------------------------------------------

def suite_ops(rng):
    r = SuiteResult("ops", "operator identities and derivations")
    for i in range(80):
        N = 2 + i % 4
        p = random_poly(rng, N, 6, terms=3)
        q = random_poly(rng, N, 4, terms=3)
        j, k = rng.sample(range(1, N + 1), 2)
        r.check(laplacian(rotation_generator(p, j, k)) == rotation_generator(laplacian(p), j, k),
                "Lap M = M Lap")
        r.check(rotation_generator(p.mul_xx(), j, k) == rotation_generator(p, j, k).mul_xx(),
                "M (X.X g)")
        grad = Poly.zero(N)
        for m in range(1, N + 1):
            grad = grad + partial(p, m) * partial(q, m)
        r.check(laplacian(p * q) == laplacian(p) * q + grad.scale(2) + p * laplacian(q),
                "Laplacian product rule")
        r.check(rotation_generator(p * q, j, k)
                == rotation_generator(p, j, k) * q + p * rotation_generator(q, j, k), "M product rule")
        r.check(rotation_generator(p, j, k) == -rotation_generator(p, k, j), "antisymmetry")
        for d, comp in homogeneous_components(p).items():
            img = rotation_generator(comp, j, k)
            r.check(not img or homogeneous_degree(img) == d, "degree preserved")
        r.check(not rotation_generator(x_dot_x(N), j, k), "M kills X.X")
        r.check(commutator(LAPLACIAN, MUL_XX, p) == euler(p).scale(4) + p.scale(2 * N),
                "[Lap, X.X] = 4E + 2N")
        L = random_derivation(rng, N)
        r.check(apply_derivation(L, p * q) == apply_derivation(L, p) * q + p * apply_derivation(L, q),
                "derivation product rule")
        weights = {jk: random_poly(rng, N, 2, terms=2) for jk in combinations(range(1, N + 1), 2)
                   if rng.random() < 0.6}
        D = Derivation.combination(N, weights)
        r.check(not apply_derivation(D, x_dot_x(N)), "combination kills X.X")
        back = decompose_annihilating_derivation(D)
        r.check(Derivation.combination(N, back).coeffs == D.coeffs, "decomposition re-applies")
        for m in range(1, N + 1):
            r.check(apply_derivation(Derivation.combination(N, back), Poly.var(N, m)) == D.coeffs[m - 1],
                    "values on X_m")
    r.check(casimir(Poly.one(3)) == Poly.zero(3), "Casimir(1)")
    for N in (2, 3, 4):
        for a in range(4):
            r.check(not casimir(x_dot_x(N) ** a), "Casimir kills powers of X.X")
    # Casimir on q(t.X): -(N-1)(t.X) q'(t.X) + [t.t X.X - (t.X)^2] q''(t.X)
    for i in range(20):
        N = 2 + i % 3
        t = [random_scalar(rng, 0) for _ in range(N)]
        q = UniPoly([random_scalar(rng) for _ in range(rng.randint(1, 5))])
        tx = Poly.linear(t)
        tt = sum((x * x for x in t), ZERO)
        expect = (tx * q.derivative().compose(tx)).scale(-(N - 1)) + \
            (x_dot_x(N).scale(tt) - tx * tx) * q.derivative().derivative().compose(tx)
        r.check(casimir(q.compose(tx)) == expect, "Casimir on q(t.X)")
    # derivations of the proof's shape: L(t.X) = 0 forces L(f(t.X)) = 0 and
    # q outside Q(i)[t.X] is caught by some such L
    for i in range(20):
        N = 2 + i % 3
        t = [rng.randint(-3, 3) for _ in range(N)]
        if not any(t):
            t[0] = 1
        tx = Poly.linear(t)
        k = next(i for i, x in enumerate(t) if x)
        ders = []
        for j in range(N):
            if j == k:
                continue
            Y = Poly.monomial(random_exponents(rng, N, rng.randint(0, 2)))
            coeffs = [Poly.zero(N)] * N
            coeffs[j] = Y.scale(t[k])
            coeffs[k] = Y.scale(-t[j])
            ders.append(Derivation(N, tuple(coeffs)))
        f = UniPoly([random_scalar(rng) for _ in range(4)])
        r.check(all(not apply_derivation(L, tx) for L in ders), "sample kills t.X")
        r.check(all(not apply_derivation(L, f.compose(tx)) for L in ders), "kills f(t.X)")
        q = random_homogeneous(rng, N, 2, terms=3)
        in_span = is_scalar_multiple(q, tx * tx)
        caught = any(apply_derivation(L, q) for L in ders)
        r.check(caught != in_span, "outside the span detected")
    return r


def suite_harmonic_props(rng):
    r = SuiteResult("harmonic", "harmonic-space properties")
    for i in range(40):
        N = 2 + i % 3
        h = random_harmonic(rng, N, rng.randint(0, 6))
        c = random_scalar(rng)
        r.check(bool(divmod_monic(h, x_dot_x(N) - c, N)[1]), "no harmonic multiple of X.X - c")
        j, k = rng.sample(range(1, N + 1), 2)
        r.check(is_harmonic(rotation_generator(h, j, k)), "M preserves harmonics")
        d = rng.randint(0, 6)
        p = random_homogeneous(rng, N, d, terms=3)
        pieces = eigensplit_xx_laplacian(p)
        r.check(sum((c for _, c in pieces), Poly.zero(N)) == p, "eigensplit sums to p")
        r.check(all(laplacian(c).mul_xx() == c.scale(lam) for lam, c in pieces), "eigen pieces")
        if c:
            r.check(bool(divmod_monic(p, x_dot_x(N) - c, N)[1]) or not p, "homogeneous not divisible")
        a = random_scalar(rng)
        g = random_poly(rng, N, 3, terms=2)
        q = (x_dot_x(N) - c) * g + a
        r.check(all(not divmod_monic(rotation_generator(q, j2, k2), x_dot_x(N) - c, N)[1]
                    for j2, k2 in combinations(range(1, N + 1), 2)), "M maps into the ideal")
        r.check(project_Lc(q, c) == Poly.constant(N, a), "projection is the constant")
    for N in (2, 3, 4):
        for d in range(0, 7):
            ker = joint_kernel([M(j, k) for j, k in combinations(range(1, N + 1), 2)], N, d)
            if d % 2:
                r.check(not ker, f"odd joint kernel N={N} d={d}")
            else:
                r.check(len(ker) == 1 and is_scalar_multiple(ker[0], x_dot_x(N) ** (d // 2)),
                        f"joint kernel N={N} d={d}")
            g = UniPoly([random_scalar(rng) for _ in range(3)]).compose(x_dot_x(N))
            r.check(all(not rotation_generator(g, j, k) for j, k in combinations(range(1, N + 1), 2)),
                    "q(X.X) invariant")
    return r


def suite_mean_props(rng):
    r = SuiteResult("mean", "spherical-mean properties")
    for i in range(80):
        N = 1 + i % 4
        p = random_poly(rng, N, 6, terms=3)
        r.check(spherical_mean(p.mul_xx()) == spherical_mean(p), "X.X factor")
        for j, k in combinations(range(1, N + 1), 2):
            r.check(not spherical_mean(rotation_generator(p, j, k)), "kills M images")
        d = rng.randint(0, 7)
        h = random_homogeneous(rng, N, d, terms=3)
        # multiplied out so N = 1, d = 0 needs no division
        r.check(spherical_mean(Poly.var(N, 1) * h) * (N + d - 1)
                == spherical_mean(partial(h, 1)), "X1 p rule")
        if N >= 2:
            g = random_harmonic(rng, N, rng.randint(0, 6)) + random_scalar(rng)
            r.check(spherical_mean(g) == g.constant_term(), "harmonic mean is p(0)")
    for N in range(1, 6):
        for n in range(0, 7):
            r.check(spherical_mean(x_dot_x(N) ** n) == 1, f"(X.X)^n N={N} n={n}")
        r.check(spherical_mean(Poly.monomial((2,) + (0,) * (N - 1))) == Fraction(1, N), "X_j^2")
    r.check(spherical_mean(Poly.monomial((3,))) == 0 and spherical_mean(Poly.monomial((4,))) == 1,
            "N = 1 convention")
    r.check(spherical_mean_monomial((2, 2)) == Fraction(1, 8), "X1^2 X2^2")
    return r


def suite_zonal_props(rng):
    r = SuiteResult("zonal", "eigenvector spaces, kernel lifts and odd dimensions")
    for i in range(40):
        N = 2 + i % 3
        t = [random_scalar(rng, 0.1) for _ in range(N)]
        q = UniPoly([random_scalar(rng) for _ in range(rng.randint(1, 7))])
        c = random_scalar(rng)
        r.check(bool(divmod_monic(q.compose(Poly.linear(t)), x_dot_x(N) - c, N)[1]),
                "q(t.X) not divisible by X.X - c")
    # every joint eigenvector of degree |a| is a multiple of Y
    for N in (2, 3, 4):
        n = N // 2
        for a in product(range(3), repeat=n):
            for eps in product((1, -1), repeat=n):
                sig = EigenSignature(a, eps)
                if sig.eps != eps:
                    continue
                d = sum(a)
                ops = []
                for j, lam in enumerate(sig.eigenvalues()):
                    ops.append(lambda p, j=j, lam=lam: rotation_generator(p, 2 * j + 1, 2 * j + 2) - p.scale(lam))
                ker = joint_kernel(ops, N, d)
                Y = eigen_monomial(sig, N)
                r.check(len(ker) == 1 and is_scalar_multiple(ker[0], Y), f"eigenspace N={N} a={a}")
    # kernel lifts in even dimension
    for i in range(40):
        n = 2 + i % 2
        a = tuple(rng.randint(0, 3) for _ in range(n))
        d = rng.randint(0, 3)
        q_d = random_homogeneous(rng, n - 1, d, terms=2, complex_rate=0)
        q = lift_to_kernel(a, d, q_d)
        r.check(not reduced_laplacian(q, a), f"in kernel a={a} d={d}")
        eps = tuple(rng.choice((1, -1)) for _ in a)
        sig = EigenSignature(a, eps)
        N = 2 * n
        p = common_eigen_harmonic(sig, q, N)
        r.check(is_harmonic(p), "even-dimension harmonic")
        for j, lam in enumerate(sig.eigenvalues()):
            r.check(rotation_generator(p, 2 * j + 1, 2 * j + 2) == p.scale(lam), "eigenvalue")
    # odd dimension
    for i in range(40):
        n = 1 + i % 2
        N = 2 * n + 1
        a = tuple(rng.randint(0, 2) for _ in range(n))
        d = sum(a) + rng.randint(0, 4)
        rr = d - sum(a)
        seed = random_homogeneous(rng, n, rr // 2, terms=2, complex_rate=0)
        sig = EigenSignature(a, tuple(rng.choice((1, -1)) for _ in a))
        p = odd_dim_eigen_harmonic(sig, d, seed, N)
        r.check(is_harmonic(p) and (not p or homogeneous_degree(p) == d), f"odd harmonic a={a} d={d}")
        for j, lam in enumerate(sig.eigenvalues()):
            r.check(rotation_generator(p, 2 * j + 1, 2 * j + 2) == p.scale(lam), "odd eigenvalue")
    return r


def suite_roundtrip(rng):
    r = SuiteResult("roundtrip", "print/parse and JSON round trips")
    for i in range(200):
        N = 1 + i % 5
        p = random_poly(rng, N, 6, terms=rng.randint(0, 5), complex_rate=0.5)
        r.check(parse_poly(format_poly(p), N) == p, f"text N={N} p={p}")
        r.check(poly_from_dict(poly_to_dict(p)) == p, f"json N={N} p={p}")
    return r


SUITES = {
    "1": suite_magic,
    "2": suite_commutators,
    "3": suite_dimension,
    "4": suite_worked_mean,
    "5": suite_mean_oracles,
    "6": suite_multinomial,
    "7": suite_decomposition,
    "8": suite_mean_value,
    "9": suite_rotation,
    "10": suite_zonal,
    "11": suite_eigen,
    "12": suite_projection,
    "ops": suite_ops,
    "harmonic": suite_harmonic_props,
    "mean": suite_mean_props,
    "zonal": suite_zonal_props,
    "roundtrip": suite_roundtrip,
}

ALIASES = {
    "magic": "1", "commutators": "2", "dimension": "3", "worked-mean": "4",
    "mean-oracles": "5", "multinomial": "6", "decomposition": "7", "mean-value": "8",
    "rotation": "9", "zonal-ode": "10", "eigen": "11", "projection": "12",
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> SuiteResult:
    key = ALIASES.get(name, name)
    if key not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    # each suite gets its own stream so results do not depend on run order
    rng = random.Random(f"{seed}:{key}")
    start = time.perf_counter()
    res = SUITES[key](rng)
    res.seconds = time.perf_counter() - start
    return res


def run_all(seed: int = DEFAULT_SEED) -> list:
    return [run_suite(name, seed) for name in SUITES]
