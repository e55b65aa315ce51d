"""Exact polynomial algebra for rotational symmetry in Q(i)[X_1..X_N].

Sparse polynomials over the Gaussian rationals, the rotation generators and
Laplacian, harmonic decomposition, the spherical mean functional, zonal
harmonics and simultaneous eigenvectors of commuting rotations.
"""
from .arith import I, ONE, ZERO, GaussianRational, as_scalar, double_factorial, parse_scalar
from .poly import (
    MINUS_INFINITY,
    Poly,
    divmod_monic,
    format_poly,
    homogeneous_degree,
    is_homogeneous,
    parse_poly,
    poly_from_dict,
    poly_to_dict,
    x_dot_x,
)
from .ops import (
    CASIMIR,
    EULER,
    LAPLACIAN,
    MUL_XX,
    Derivation,
    M,
    Op,
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
from .harmonic import (
    HarmonicDecomposition,
    dim_harmonic,
    dim_harmonic_via_boundary,
    eigensplit_xx_laplacian,
    harmonic_basis,
    harmonic_decompose,
    harmonic_from_boundary,
    is_harmonic,
    project_Lc,
    reconstruct,
)
from .mean import (
    OrthoMatrix,
    check_mean_value_harmonic,
    pairing_mean,
    rational_orthogonal_matrices,
    rotate,
    s_coeff,
    shifted_mean,
    spherical_mean,
    spherical_mean_via_laplacian,
)
from .zonal import (
    EigenSignature,
    L_kernel_lift,
    UniPoly,
    casimir_eigenvalue,
    common_eigen_harmonic,
    eigen_monomial,
    gegenbauer_solve,
    lift_to_kernel,
    odd_dim_eigen_harmonic,
    reduced_laplacian,
    zonal_harmonic,
)

__version__ = "0.1.0"

__all__ = [
    "CASIMIR",
    "Derivation",
    "EULER",
    "EigenSignature",
    "GaussianRational",
    "HarmonicDecomposition",
    "I",
    "LAPLACIAN",
    "L_kernel_lift",
    "M",
    "MINUS_INFINITY",
    "MUL_XX",
    "ONE",
    "Op",
    "OrthoMatrix",
    "Poly",
    "UniPoly",
    "ZERO",
    "apply_derivation",
    "as_scalar",
    "casimir",
    "casimir_eigenvalue",
    "check_mean_value_harmonic",
    "common_eigen_harmonic",
    "commutator",
    "decompose_annihilating_derivation",
    "dim_harmonic",
    "dim_harmonic_via_boundary",
    "divmod_monic",
    "double_factorial",
    "eigen_monomial",
    "eigensplit_xx_laplacian",
    "euler",
    "format_poly",
    "gegenbauer_solve",
    "harmonic_basis",
    "harmonic_decompose",
    "harmonic_from_boundary",
    "homogeneous_degree",
    "is_harmonic",
    "is_homogeneous",
    "laplacian",
    "laplacian_power",
    "lift_to_kernel",
    "odd_dim_eigen_harmonic",
    "pairing_mean",
    "parse_poly",
    "parse_scalar",
    "partial",
    "poly_from_dict",
    "poly_to_dict",
    "project_Lc",
    "rational_orthogonal_matrices",
    "reconstruct",
    "reduced_laplacian",
    "rotate",
    "rotation_generator",
    "s_coeff",
    "shifted_mean",
    "spherical_mean",
    "spherical_mean_via_laplacian",
    "x_dot_x",
    "zonal_harmonic",
]
