"""Independent reference computations built on sympy.

Nothing here calls into the library except to convert polynomials, so
agreement with these functions is a genuine cross-check.
"""
from fractions import Fraction

import sympy as sp

from rotpoly import GaussianRational, Poly


def symbols(N):
    return sp.symbols(f"x1:{N + 1}")


def to_sympy(p: Poly):
    xs = symbols(p.dim)
    expr = sp.Integer(0)
    for m, c in p.terms.items():
        coeff = sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(
            c.im.numerator, c.im.denominator)
        term = coeff
        for x, e in zip(xs, m):
            term *= x**e
        expr += term
    return sp.expand(expr)


def from_sympy(expr, N: int) -> Poly:
    xs = symbols(N)
    poly = sp.Poly(sp.expand(expr), *xs, domain="QQ_I")
    terms = {}
    for mono, c in poly.terms():
        c = sp.nsimplify(sp.sympify(c.as_expr() if hasattr(c, "as_expr") else c))
        re, im = sp.re(c), sp.im(c)
        terms[mono] = GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
    return Poly(N, terms)


def laplacian(expr, N):
    return sp.expand(sum(sp.diff(expr, x, 2) for x in symbols(N)))


def rotation(expr, N, j, k):
    xs = symbols(N)
    return sp.expand(xs[j - 1] * sp.diff(expr, xs[k - 1]) - xs[k - 1] * sp.diff(expr, xs[j - 1]))


def sphere_mean_monomial(exps):
    """Average of ``x^a`` over the unit sphere from the Gamma-function formula.

    ``int_{S^{N-1}} x^a = 2 prod Gamma((a_j+1)/2) / Gamma((|a|+N)/2)`` for even
    exponents, and the sphere area is ``2 pi^(N/2) / Gamma(N/2)``.
    """
    if any(e % 2 for e in exps):
        return sp.Integer(0)
    N = len(exps)
    num = sp.Integer(2)
    for e in exps:
        num *= sp.gamma(sp.Rational(e + 1, 2))
    integral = num / sp.gamma(sp.Rational(sum(exps) + N, 2))
    area = 2 * sp.pi ** sp.Rational(N, 2) / sp.gamma(sp.Rational(N, 2))
    return sp.nsimplify(sp.simplify(integral / area))


def sphere_mean(p: Poly):
    total = sp.Integer(0)
    for m, c in p.terms.items():
        coeff = sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(
            c.im.numerator, c.im.denominator)
        total += coeff * sphere_mean_monomial(m)
    return sp.simplify(total)


def as_sympy_scalar(z: GaussianRational):
    return sp.Rational(z.re.numerator, z.re.denominator) + sp.I * sp.Rational(
        z.im.numerator, z.im.denominator)


def ode_monic_solution(n, N, alpha):
    """Monic degree-n polynomial solving the zonal ODE, by undetermined
    coefficients and sympy's linear solver."""
    y = sp.Symbol("y")
    cs = sp.symbols(f"c0:{n}") if n else ()
    q = y**n + sum(c * y**k for k, c in enumerate(cs))
    alpha = sp.nsimplify(alpha)
    res = sp.expand((alpha - y**2) * sp.diff(q, y, 2) - (N - 1) * y * sp.diff(q, y)
                    + n * (n + N - 2) * q)
    sol = sp.solve(sp.Poly(res, y).all_coeffs(), cs, dict=True) if cs else [{}]
    assert len(sol) == 1
    qq = sp.Poly(sp.expand(q.subs(sol[0])), y)
    return [qq.coeff_monomial(y**k) for k in range(n + 1)]
