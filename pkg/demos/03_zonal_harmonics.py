"""Zonal harmonics from a one-variable ODE.

For a direction t and sphere X.X = c, the harmonic polynomial congruent to
q(t.X) is homogeneous exactly when q solves a second-order ODE.  The monic
solution is produced by a downward coefficient recursion.
"""
from fractions import Fraction

from rotpoly import Poly, divmod_monic, gegenbauer_solve, is_harmonic, x_dot_x, zonal_harmonic
from rotpoly.zonal import gegenbauer_residual

for n in range(5):
    q = gegenbauer_solve(n, 3, 1)
    print(f"n={n}: q = {q}    ODE residual zero: {not gegenbauer_residual(q, n, 3, 1)}")

t, c, n = [1, 2, 2], Fraction(1, 9), 3
q, h = zonal_harmonic(t, c, n)
g = q.compose(Poly.linear(t))
print(f"\nt = {t}, c = {c}, n = {n}")
print("  q(t.X) =", g)
print("  h      =", h)
print("  h harmonic:", is_harmonic(h), "  degree:", h.degree())
print("  congruent mod X.X - c:", not divmod_monic(g - h, x_dot_x(3) - c, 3)[1])

q, h = zonal_harmonic([3, 4], 1, 3)
print("\nin the plane the result lies in the span of (x1 +- i x2)^3:")
print("  q =", q, "\n  h =", h)
