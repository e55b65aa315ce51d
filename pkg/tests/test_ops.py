from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from rotpoly import (
    CASIMIR,
    LAPLACIAN,
    MUL_XX,
    Derivation,
    M,
    Poly,
    apply_derivation,
    casimir,
    commutator,
    decompose_annihilating_derivation,
    euler,
    laplacian,
    laplacian_power,
    parse_poly,
    partial,
    rotation_generator,
    x_dot_x,
)
from rotpoly.zonal import UniPoly

import oracles
from strategies import poly_pairs, polys


def P(text, N):
    return parse_poly(text, N)


def test_partial_examples():
    assert partial(P("x1^3", 1), 1) == P("3*x1^2", 1)
    assert partial(P("x1", 2), 2) == Poly.zero(2)
    assert partial(P("x1^2*x2 + x2^3", 2), 1) == P("2*x1*x2", 2)
    with pytest.raises(IndexError):
        partial(P("x1", 2), 3)


def test_rotation_examples():
    for N in (2, 3, 5):
        for j, k in combinations(range(1, N + 1), 2):
            assert not rotation_generator(x_dot_x(N), j, k)
    assert rotation_generator(P("x1", 2), 1, 2) == P("-x2", 2)
    z3 = P("x1 + i*x2", 2) ** 3
    assert rotation_generator(z3, 1, 2) == z3.scale(3 * P("i", 1).constant_term())
    with pytest.raises(ValueError):
        rotation_generator(P("x1", 2), 1, 1)


def test_laplacian_examples():
    assert laplacian(x_dot_x(3) ** 2) == x_dot_x(3).scale(20)
    assert not laplacian(P("x1^2 - x2^2", 2))
    assert laplacian_power(P("x1^4*x2^6", 4), 5) == Poly.constant(4, 10 * 24 * 720)


def test_laplacian_of_powers_of_xx():
    for N in range(1, 6):
        for j in range(1, 5):
            assert laplacian(x_dot_x(N) ** j) == (x_dot_x(N) ** (j - 1)).scale(2 * j * (2 * j + N - 2))


def test_euler_examples():
    assert euler(P("x1*x2*x3", 3)) == P("3*x1*x2*x3", 3)
    assert euler(Poly.one(2)) == Poly.zero(2)
    assert euler(P("x1^2 + x1", 1)) == P("2*x1^2 + x1", 1)


def test_casimir_examples():
    for N in (2, 3, 4):
        for a in range(4):
            assert not casimir(x_dot_x(N) ** a)
    assert not casimir(Poly.one(3))
    # q(Y) = Y^2, t = (1, 0), N = 2: -(N-1) 2 X1^2 + 2 (X.X - X1^2) = 2 X2^2 - 2 X1^2
    assert casimir(P("x1^2", 2)) == P("2*x2^2 - 2*x1^2", 2)


def test_derivation_examples():
    L = Derivation(2, (P("x2", 2), P("-x1", 2)))
    assert not apply_derivation(L, x_dot_x(2))
    assert L == Derivation.rotation(2, 2, 1)
    zero = Derivation(2, (Poly.zero(2), Poly.zero(2)))
    assert not apply_derivation(zero, P("x1^3*x2 + 7", 2))
    assert apply_derivation(Derivation(2, (Poly.one(2), Poly.zero(2))), P("x1*x2", 2)) == P("x2", 2)
    with pytest.raises(ValueError):
        apply_derivation(L, P("x1", 3))


def test_derivation_rotation_matches_generator():
    p = P("x1^3*x2 - 2*x2*x3^2 + i*x1*x3", 3)
    for j, k in combinations(range(1, 4), 2):
        assert apply_derivation(Derivation.rotation(3, j, k), p) == rotation_generator(p, j, k)


def test_commutator_examples():
    p = P("x1^3*x2*x4 - 2*x2^2*x3 + x3*x4^3 + i*x1", 4)
    assert not commutator(M(1, 2), M(3, 4), p)
    q = P("x1^3*x2 + 2*x2*x3^2 - x1*x3 + x3^4", 3)
    assert commutator(M(1, 2), M(2, 3), q) == rotation_generator(q, 1, 3)
    for j, k in combinations(range(1, 5), 2):
        assert not commutator(M(j, k), CASIMIR, p)


def test_decompose_rejects_non_annihilating():
    with pytest.raises(ValueError):
        decompose_annihilating_derivation(Derivation(2, (Poly.one(2), Poly.zero(2))))


@given(polys(dims=(2, 3, 4, 5), max_deg=8, max_terms=4))
def test_magic_identity(p):
    N = p.dim
    e = euler(p)
    assert laplacian(p).mul_xx() == euler(e) + e.scale(N - 2) + casimir(p)


@given(polys(dims=(2, 3, 4), max_deg=6), st.data())
def test_rotation_commutes_with_laplacian_and_xx(p, data):
    j, k = data.draw(st.lists(st.integers(1, p.dim), min_size=2, max_size=2, unique=True))
    assert laplacian(rotation_generator(p, j, k)) == rotation_generator(laplacian(p), j, k)
    assert rotation_generator(p.mul_xx(), j, k) == rotation_generator(p, j, k).mul_xx()
    assert rotation_generator(p, j, k) == -rotation_generator(p, k, j)


@given(polys(dims=(1, 2, 3), max_deg=5))
def test_laplacian_matches_sympy(p):
    assert oracles.from_sympy(oracles.laplacian(oracles.to_sympy(p), p.dim), p.dim) == laplacian(p)


@given(polys(dims=(2, 3), max_deg=5), st.data())
def test_rotation_matches_sympy(p, data):
    j, k = data.draw(st.lists(st.integers(1, p.dim), min_size=2, max_size=2, unique=True))
    expected = oracles.rotation(oracles.to_sympy(p), p.dim, j, k)
    assert oracles.from_sympy(expected, p.dim) == rotation_generator(p, j, k)


@given(poly_pairs(dims=(2, 3)))
def test_product_rules(pq):
    p, q = pq
    N = p.dim
    grad = Poly.zero(N)
    for m in range(1, N + 1):
        grad = grad + partial(p, m) * partial(q, m)
    assert laplacian(p * q) == laplacian(p) * q + grad.scale(2) + p * laplacian(q)
    assert rotation_generator(p * q, 1, 2) == rotation_generator(p, 1, 2) * q + p * rotation_generator(q, 1, 2)


@given(st.integers(2, 5), st.data())
def test_annihilating_derivations_decompose(N, data):
    weights = {}
    for jk in combinations(range(1, N + 1), 2):
        if data.draw(st.booleans()):
            weights[jk] = data.draw(polys(N=N, max_deg=2, max_terms=2))
    L = Derivation.combination(N, weights)
    assert not apply_derivation(L, x_dot_x(N))
    back = decompose_annihilating_derivation(L)
    rebuilt = Derivation.combination(N, back)
    for m in range(1, N + 1):
        assert apply_derivation(rebuilt, Poly.var(N, m)) == L.coeffs[m - 1]


def test_casimir_on_function_of_linear_form():
    q = UniPoly([1, -2, 3, 0, 5])
    for t in ([1, 0], [3, -4, 2], [1, 2, 2, 1]):
        N = len(t)
        tx = Poly.linear(t)
        tt = sum(x * x for x in t)
        expect = (tx * q.derivative().compose(tx)).scale(-(N - 1)) + \
            (x_dot_x(N).scale(tt) - tx * tx) * q.derivative().derivative().compose(tx)
        assert casimir(q.compose(tx)) == expect


def test_laplacian_xx_commutator():
    p = P("x1^3*x2 - x2*x3 + 4", 3)
    assert commutator(LAPLACIAN, MUL_XX, p) == euler(p).scale(4) + p.scale(6)
