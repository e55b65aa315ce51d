from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from rotpoly import (
    HarmonicDecomposition,
    Poly,
    dim_harmonic,
    dim_harmonic_via_boundary,
    divmod_monic,
    eigensplit_xx_laplacian,
    harmonic_basis,
    harmonic_decompose,
    harmonic_from_boundary,
    is_harmonic,
    parse_poly,
    project_Lc,
    reconstruct,
    rotation_generator,
    x_dot_x,
)
from rotpoly.harmonic import basis_rank
from rotpoly.verify import brute_force_decompose

import oracles
from strategies import nonzero_scalars, polys, scalars


def P(text, N):
    return parse_poly(text, N)


half = Fraction(1, 2)


def test_is_harmonic_examples():
    assert is_harmonic(P("x1^2 - x2^2", 2))
    for N in (1, 2, 3):
        assert not is_harmonic(x_dot_x(N))
    for d in range(8):
        assert is_harmonic(P("x1 + i*x2", 2) ** d)


def test_decompose_examples():
    dec = harmonic_decompose(P("x1^2", 2))
    assert list(dec) == [P("1/2*x1^2 - 1/2*x2^2", 2), Poly.constant(2, half)]
    h = P("x1*x2*x3 + x1^2 - x3^2", 3)
    assert list(harmonic_decompose(h)) == [h]
    assert list(harmonic_decompose(x_dot_x(3) ** 2)) == [Poly.zero(3), Poly.zero(3), Poly.one(3)]
    assert list(harmonic_decompose(Poly.zero(2))) == [Poly.zero(2)]


def test_decompose_example_matches_sympy():
    parts = harmonic_decompose(P("x1^2", 2)).parts
    expr = oracles.to_sympy(parts[0]) + oracles.to_sympy(x_dot_x(2) * parts[1])
    assert oracles.from_sympy(expr, 2) == P("x1^2", 2)
    assert oracles.laplacian(oracles.to_sympy(parts[0]), 2) == 0


def test_project_examples():
    for k in range(4):
        for c in (Fraction(2), Fraction(-1, 3)):
            assert project_Lc(x_dot_x(3) ** k, c) == Poly.constant(3, c ** k)
    h = P("x1*x2 - 3*x3^3 + 9*x3*x1^2", 3)
    assert is_harmonic(h)
    assert project_Lc(h, 5) == h


def test_boundary_examples():
    for d in range(7):
        p = harmonic_from_boundary(Poly.monomial((d,)), Poly.zero(1), 2, d)
        expected = Poly(2, {(d - 2 * k, 2 * k): (-1) ** k * comb(d, 2 * k) for k in range(d // 2 + 1)})
        assert p == expected
        z = P("x1 + i*x2", 2) ** d
        assert p == Poly(2, {m: c.re for m, c in z.terms.items()})
    assert harmonic_from_boundary(Poly.one(1), Poly.zero(1), 2, 0) == Poly.one(2)
    assert harmonic_from_boundary(P("x1^2", 2), Poly.zero(2), 3, 2) == P("x1^2 - x3^2", 3)
    assert harmonic_from_boundary(Poly.zero(2), Poly.zero(2), 3, 5) == Poly.zero(3)


def test_boundary_preconditions():
    with pytest.raises(ValueError):
        harmonic_from_boundary(P("x1 + 1", 2), Poly.zero(2), 3, 1)
    with pytest.raises(ValueError):
        harmonic_from_boundary(P("x1", 2), P("x1", 2), 3, 1)
    with pytest.raises(ValueError):
        harmonic_from_boundary(P("x1", 3), Poly.zero(2), 3, 1)


def test_basis_examples():
    for d in range(1, 8):
        assert len(harmonic_basis(2, d)) == 2
    assert len(harmonic_basis(3, 2)) == 5
    assert harmonic_basis(2, 0) == [Poly.one(2)]
    b = harmonic_basis(2, 3)
    assert b == [P("x1^3 - 3*x1*x2^2", 2), P("x1^2*x2 - 1/3*x2^3", 2)]


def test_dimension_formulas():
    for N in range(2, 6):
        for d in range(0, 9):
            basis = harmonic_basis(N, d)
            assert len(basis) == dim_harmonic(N, d) == dim_harmonic_via_boundary(N, d)
            assert basis_rank(basis, N, d) == len(basis)


def test_eigensplit_examples():
    h = P("x1^2 - x2^2", 2)
    assert eigensplit_xx_laplacian(h) == [(0, h)]
    for d in (2, 4, 6):
        N = 3
        pieces = eigensplit_xx_laplacian(x_dot_x(N) ** (d // 2))
        assert pieces == [(d * (N - 2 + d), x_dot_x(N) ** (d // 2))]
    pieces = eigensplit_xx_laplacian(P("x1^2", 2))
    assert pieces == [(0, P("1/2*x1^2 - 1/2*x2^2", 2)), (4, x_dot_x(2).scale(half))]
    with pytest.raises(ValueError):
        eigensplit_xx_laplacian(P("x1^2 + x1", 2))


@given(polys(dims=(1, 2, 3, 4, 5), max_deg=10, max_terms=3))
def test_decompose_round_trip(p):
    dec = harmonic_decompose(p)
    assert isinstance(dec, HarmonicDecomposition)
    assert dec.reconstruct() == p
    assert all(is_harmonic(h) for h in dec)


@given(polys(dims=(1, 2, 3), max_deg=6, max_terms=3))
def test_decompose_matches_linear_solve(p):
    assert list(harmonic_decompose(p)) == brute_force_decompose(p)


@given(st.integers(2, 4), st.data())
def test_decompose_uniqueness(N, data):
    parts = []
    for _ in range(data.draw(st.integers(1, 3))):
        d = data.draw(st.integers(0, 5))
        basis = harmonic_basis(N, d)
        coeffs = data.draw(st.lists(scalars, min_size=len(basis), max_size=len(basis)))
        parts.append(sum((b.scale(c) for b, c in zip(basis, coeffs)), Poly.zero(N)))
    if not parts[-1]:
        parts[-1] = Poly.one(N)
    assert list(harmonic_decompose(reconstruct(parts, N))) == parts


@given(polys(dims=(2, 3, 4), max_deg=6, max_terms=3), scalars, st.data())
def test_projection_contract(p, c, data):
    N = p.dim
    lp = project_Lc(p, c)
    assert is_harmonic(lp)
    assert not divmod_monic(p - lp, x_dot_x(N) - c, N)[1]
    j, k = data.draw(st.lists(st.integers(1, N), min_size=2, max_size=2, unique=True))
    assert project_Lc(rotation_generator(p, j, k), c) == rotation_generator(lp, j, k)


@given(st.integers(2, 4), st.integers(0, 5), scalars, st.data())
def test_no_harmonic_multiple_of_sphere(N, d, c, data):
    basis = harmonic_basis(N, d)
    coeffs = data.draw(st.lists(scalars, min_size=len(basis), max_size=len(basis)))
    h = sum((b.scale(x) for b, x in zip(basis, coeffs)), Poly.zero(N))
    if h:
        assert divmod_monic(h, x_dot_x(N) - c, N)[1]


@given(st.integers(2, 4), st.integers(0, 5))
def test_rotations_preserve_harmonics(N, d):
    for h in harmonic_basis(N, d):
        assert is_harmonic(rotation_generator(h, 1, N))


@given(polys(dims=(2, 3), max_deg=3, max_terms=2), scalars, nonzero_scalars)
def test_constant_modulo_sphere(g, a, c):
    N = g.dim
    p = (x_dot_x(N) - c) * g + a
    assert project_Lc(p, c) == Poly.constant(N, a)
    for j in range(1, N):
        assert not divmod_monic(rotation_generator(p, j, N), x_dot_x(N) - c, N)[1]
