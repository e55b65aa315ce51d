"""Splitting a polynomial into harmonic pieces.

Any polynomial can be written as h0 + (X.X) h1 + (X.X)^2 h2 + ... with every
h_j harmonic.  This script decomposes a few polynomials, rebuilds them, and
shows the sphere projection: the harmonic polynomial that agrees with p on
the sphere X.X = c.
"""
from fractions import Fraction

from rotpoly import (
    divmod_monic,
    harmonic_basis,
    harmonic_decompose,
    is_harmonic,
    parse_poly,
    project_Lc,
    x_dot_x,
)

p = parse_poly("x1^2", 2)
print("p =", p)
for j, h in enumerate(harmonic_decompose(p)):
    print(f"  part {j}: {h}    harmonic: {is_harmonic(h)}")

q = parse_poly("x1^4*x2 - 3*x2^3*x3 + x1*x2*x3 + 7", 3)
dec = harmonic_decompose(q)
print("\nq =", q)
for j, h in enumerate(dec):
    print(f"  part {j}: {h}")
print("rebuilt equals q:", dec.reconstruct() == q)

c = Fraction(4)
h = project_Lc(q, c)
print(f"\nharmonic agreeing with q on X.X = {c}:")
print("  ", h)
_, rem = divmod_monic(q - h, x_dot_x(3) - c, 3)
print("   q - h divisible by X.X - c:", not rem)

print("\nharmonic basis in 3 variables, degree 2:")
for b in harmonic_basis(3, 2):
    print("  ", b)
