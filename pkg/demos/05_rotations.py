"""Rational rotations act on polynomials without leaving exact arithmetic.

Orthogonal matrices with rational entries come from Pythagorean triples.
Substituting X -> XA commutes with the Laplacian and leaves the spherical
mean unchanged.
"""
from rotpoly import laplacian, parse_poly, rational_orthogonal_matrices, rotate, spherical_mean

p = parse_poly("x1^4*x2 - 2*x2^2*x3^2 + x3 + 5", 3)
print("p =", p, "\n  mean:", spherical_mean(p))
for A in rational_orthogonal_matrices(3, limit=4)[1:]:
    pa = rotate(p, A)
    print("\nA =", A)
    print("  p(XA) =", pa)
    print("  mean unchanged:", spherical_mean(pa) == spherical_mean(p))
    print("  Laplacian commutes:", laplacian(pa) == rotate(laplacian(p), A))
