"""Hermitian idempotents, left ideals and the column matrix model."""

from fractions import Fraction

import pytest

from cliffkit import linalg
from cliffkit.algebra import (
    Multivector,
    complex_basis_vector,
    complex_unit,
    invert,
)
from cliffkit.reprs import compile_complex_rep
from cliffkit.sampling import random_unitary_versor, rng_from_seed
from cliffkit.spinors import (
    find_conjugator,
    idempotent_from_factors,
    is_minimal,
    left_ideal,
    make_idempotent,
    primitive_idempotent,
    rep_preimage,
    spinor_matrix_model,
    stabilizer_membership,
)
from cliffkit.scalars import GaussianRational

G1 = GaussianRational(1)
GI = GaussianRational(0, 1)


def test_make_idempotent_validation():
    e1 = complex_basis_vector(4, 1)
    p = make_idempotent(e1)
    assert p.p * p.p == p.p
    assert p.p.star() == p.p
    with pytest.raises(ValueError, match="square"):
        make_idempotent(e1 * 2)
    # (5/3) e1 + (4/3) i e2 squares to e but is not fixed by the star
    skew = e1 * GaussianRational(Fraction(5, 3)) + complex_basis_vector(4, 2) * GaussianRational(0, Fraction(4, 3))
    assert skew * skew == complex_unit(4)
    with pytest.raises(ValueError, match="Hermitian"):
        make_idempotent(skew)
    with pytest.raises(ValueError, match="trivial"):
        make_idempotent(complex_unit(4))


def test_idempotent_from_factors():
    n = 4
    s1 = complex_basis_vector(n, 1)
    s2 = complex_basis_vector(n, 2) * complex_basis_vector(n, 3) * GI
    p = idempotent_from_factors(n, [s1, s2])
    assert p * p == p and p.star() == p
    # anticommuting factors are rejected
    with pytest.raises(ValueError, match="commute"):
        idempotent_from_factors(n, [s1, complex_basis_vector(n, 2)])


def test_primitive_idempotent_n2():
    idem = primitive_idempotent(2)
    e = complex_unit(2)
    assert idem.s == complex_basis_vector(2, 1)
    assert idem.p == (e + idem.s) * (G1 / 2)
    space = left_ideal(idem)
    assert space.dim == 2
    assert is_minimal(space)


@pytest.mark.parametrize("n", [2, 4])
def test_minimal_ideal_dimension(n):
    idem = primitive_idempotent(n)
    space = left_ideal(idem)
    assert space.dim == 1 << (n // 2)
    assert is_minimal(space)
    assert idem.s * idem.s == complex_unit(n)
    assert idem.s.star() == idem.s
    # the ideal contains its generator and is closed under left multiplication
    assert space.contains(idem.p)
    for i in range(1, n + 1):
        assert space.contains(complex_basis_vector(n, i) * idem.p)


def test_single_factor_idempotent_not_minimal_at_n4():
    p = make_idempotent(complex_basis_vector(4, 1))
    space = left_ideal(p)
    assert space.dim == 8
    assert not is_minimal(space)


def test_spinor_space_coordinates():
    space = left_ideal(primitive_idempotent(4))
    psi = space.basis[0] + space.basis[2] * GI
    coords = space.coordinates(psi)
    assert coords is not None
    assert coords[0] == G1 and coords[2] == GI
    outside = complex_unit(4)
    assert space.coordinates(outside) is None
    assert not space.contains(outside)


@pytest.mark.parametrize("n", [2, 4])
def test_spinor_matrix_model_intertwines(n):
    space = left_ideal(primitive_idempotent(n))
    model = spinor_matrix_model(space, seed=0)
    U, Uinv = model.intertwiner.matrix, model.intertwiner.inverse
    for L, rho_gen in zip(model.left_action, model.rep.gens):
        assert linalg.mat_eq(linalg.matmul(linalg.matmul(U, L), Uinv), rho_gen)


def test_spinor_matrix_model_rejects_nonminimal():
    space = left_ideal(make_idempotent(complex_basis_vector(4, 1)))
    with pytest.raises(ValueError):
        spinor_matrix_model(space)


def test_find_conjugator_simple_pair():
    n = 2
    e = complex_unit(n)
    p1 = (e + complex_basis_vector(n, 1)) * (G1 / 2)
    p2 = (e - complex_basis_vector(n, 1)) * (G1 / 2)
    g = find_conjugator(p1, p2)
    assert g is not None
    assert g * p1 * invert(g) == p2


def test_find_conjugator_unitary_orbit():
    n = 4
    rng = rng_from_seed(5)
    base = primitive_idempotent(n).p
    g1 = random_unitary_versor(n, rng)
    g2 = random_unitary_versor(n, rng)
    p1 = g1 * base * g1.reversion()
    p2 = g2 * base * g2.reversion()
    assert p1 * p1 == p1 and p1.star() == p1
    g = find_conjugator(p1, p2, seed=5)
    assert g is not None
    assert g * p1 * invert(g) == p2


def test_rep_preimage_and_column_stabilizer():
    # the ideal of the E11 idempotent is the first-column space Mat E11; for
    # A = v e1^T the conjugate g A g^-1 = (g v)(e1^T g^-1) stays in that space
    # exactly when the first row of g is supported at position 1
    n = 2
    rep = compile_complex_rep(n)
    m = rep.target.m
    Z = GaussianRational(0)

    def matrix(entries):
        return tuple(tuple(entries.get((i, j), Z) for j in range(m)) for i in range(m))

    e11 = matrix({(0, 0): G1})
    p = rep_preimage(rep, e11)
    assert p is not None
    assert linalg.mat_eq(rep.rho(p), e11)
    assert p * p == p
    space = left_ideal(p, n)
    assert space.dim == m
    upper = rep_preimage(rep, matrix({(0, 0): G1, (1, 1): G1, (0, 1): GI}))
    lower = rep_preimage(rep, matrix({(0, 0): G1, (1, 1): G1, (1, 0): GI}))
    assert not stabilizer_membership(upper, space)
    assert stabilizer_membership(lower, space)
    assert rep_preimage(rep, e11) == p  # cached path
    with pytest.raises(ValueError):
        stabilizer_membership(p, space)  # idempotents are not invertible
