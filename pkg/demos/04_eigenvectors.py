"""Simultaneous eigenvectors of the commuting plane rotations.

The generators M_12, M_34, ... commute.  Products of the forms
X_{2j-1} + i eps_j X_{2j} are joint eigenvectors, and multiplying by a
function of the block norms stays harmonic when that function lies in the
kernel of a reduced Laplacian.
"""
from rotpoly import (
    EigenSignature,
    casimir,
    casimir_eigenvalue,
    common_eigen_harmonic,
    eigen_monomial,
    is_harmonic,
    lift_to_kernel,
    odd_dim_eigen_harmonic,
    parse_poly,
    rotation_generator,
)

sig = EigenSignature((2, 1), (1, -1))
Y = eigen_monomial(sig, 4)
print("Y =", Y)
for j, lam in enumerate(sig.eigenvalues()):
    ok = rotation_generator(Y, 2 * j + 1, 2 * j + 2) == Y.scale(lam)
    print(f"  M_{2 * j + 1}{2 * j + 2} Y = ({lam}) Y: {ok}")
print("  Casimir eigenvalue:", casimir_eigenvalue(sig.a, 4),
      " confirmed:", casimir(Y) == Y.scale(casimir_eigenvalue(sig.a, 4)))

q = lift_to_kernel((1, 0), 2, parse_poly("x1^2", 1))
print("\nkernel element for a = (1, 0), degree 2 in the block norms:", q)
p = common_eigen_harmonic(EigenSignature((1, 0)), q, 4)
print("  harmonic eigenvector:", p)
print("  harmonic:", is_harmonic(p))

p = odd_dim_eigen_harmonic(EigenSignature((1,)), 3, parse_poly("x1", 1), 3)
print("\nodd dimension, a = (1), degree 3:", p, "  harmonic:", is_harmonic(p))
