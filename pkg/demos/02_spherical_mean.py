"""The spherical mean, computed three independent ways.

The normalized mean over the unit sphere becomes a purely algebraic
functional on polynomials.  Here the monomial rule, the iterated-Laplacian
formula and the pairing formula for products of linear forms all produce
the same exact value.
"""
from rotpoly import (
    Poly,
    laplacian_power,
    pairing_mean,
    parse_poly,
    shifted_mean,
    spherical_mean,
    spherical_mean_via_laplacian,
)
from rotpoly.mean import central_binomial_sum

p = parse_poly("x1^4*x2^6", 4)
print("p =", p, " in 4 variables")
print("  monomial rule:      ", spherical_mean(p))
print("  fifth Laplacian:    ", laplacian_power(p, 5), "->", spherical_mean_via_laplacian(p))
forms = [Poly.var(4, 1)] * 4 + [Poly.var(4, 2)] * 6
print("  pairing of 10 forms:", pairing_mean(forms))

forms = [parse_poly(t, 3) for t in ("x1 + x2", "x2 - 2*x3", "x1 + i*x3", "3*x1")]
prod = forms[0] * forms[1] * forms[2] * forms[3]
print("\nproduct of four linear forms in 3 variables:")
print("  monomial rule:", spherical_mean(prod), " pairing:", pairing_mean(forms))

print("\nmean-value property: averaging p(X + t) over X gives p(t) exactly when p is harmonic")
for text in ("x1^2 - x2^2", "x1^2 + x2^2"):
    q = parse_poly(text, 2)
    print(f"  {text:14s} -> {shifted_mean(q)}")

print("\nsum over b_1+..+b_N = 2 of prod C(2b_j, b_j) against 2N^2 + 4N:")
for N in range(1, 7):
    print(f"  N={N}: {central_binomial_sum(N, 2)} vs {2 * N * N + 4 * N}")
