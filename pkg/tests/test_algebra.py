"""Blade arithmetic, involutions and inversion in the core algebra."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffkit.algebra import (
    Multivector,
    Signature,
    basis_vector,
    blade_from_indices,
    blade_indices,
    blade_mul,
    complex_basis_vector,
    complex_unit,
    complexify_embed,
    eta,
    invert,
    multivector_from_json,
    multivector_to_json,
    unit,
    vector,
)
from cliffkit.scalars import GaussianRational


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature(-1, 2)
    sig = Signature(2, 1)
    assert sig.n == 3
    assert sig.square(1) == 1 and sig.square(2) == 1 and sig.square(3) == -1
    with pytest.raises(ValueError):
        sig.square(4)


def test_blade_mul_examples():
    sig = Signature(2, 0)
    # e2 * e1 = -e12
    assert blade_mul(0b10, 0b01, sig) == (-1, 0b11)
    assert blade_mul(0b01, 0b10, sig) == (1, 0b11)
    # generator squares
    assert blade_mul(0b01, 0b01, sig) == (1, 0)
    assert blade_mul(0b01, 0b01, Signature(0, 1)) == (-1, 0)
    # complex algebra: int n means Euclidean squares
    assert blade_mul(0b10, 0b10, 2) == (1, 0)
    # e12 * e2 = e1
    assert blade_mul(0b11, 0b10, sig) == (1, 0b01)
    with pytest.raises(ValueError):
        blade_mul(0b100, 0b01, sig)


def test_blade_index_helpers():
    assert blade_indices(0b1011) == [1, 2, 4]
    assert blade_from_indices([1, 2, 4]) == 0b1011
    with pytest.raises(ValueError):
        blade_from_indices([0])
    with pytest.raises(ValueError):
        blade_from_indices([2, 2])


@pytest.mark.parametrize("p,q", [(3, 0), (2, 1), (1, 2), (0, 3)])
def test_blade_mul_associative_exhaustive(p, q):
    sig = Signature(p, q)
    dim = 1 << sig.n
    for a, b, c in itertools.product(range(dim), repeat=3):
        s1, ab = blade_mul(a, b, sig)
        s2, ab_c = blade_mul(ab, c, sig)
        t1, bc = blade_mul(b, c, sig)
        t2, a_bc = blade_mul(a, bc, sig)
        assert ab_c == a_bc
        assert s1 * s2 == t1 * t2


def test_generator_relations_all_small_signatures():
    for n in range(1, 6):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            e = unit(sig)
            for i in range(1, n + 1):
                vi = basis_vector(sig, i)
                for j in range(i, n + 1):
                    vj = basis_vector(sig, j)
                    anti = vi * vj + vj * vi
                    want = e * Fraction(2 * sig.square(i)) if i == j else e * 0
                    assert anti == want


def test_multivector_algebra_basics():
    sig = Signature(1, 1)
    a = vector(sig, [Fraction(1), Fraction(2)])
    b = vector(sig, [Fraction(3), Fraction(-1)])
    assert a + b == vector(sig, [Fraction(4), Fraction(1)])
    assert (a * b).grades() == [0, 2]
    assert eta(a, b) == Fraction(1 * 3 - 2 * (-1))
    assert a.grade_project(1) == a
    assert not a.grade_project(0)
    with pytest.raises(ValueError):
        (a * b).vector_coords()
    assert a.vector_coords() == (Fraction(1), Fraction(2))


mv_terms = st.dictionaries(
    st.integers(min_value=0, max_value=7),
    st.integers(min_value=-4, max_value=4),
    max_size=4,
)


@settings(deadline=None, max_examples=80)
@given(mv_terms, mv_terms)
def test_reversion_antihomomorphism(t1, t2):
    sig = Signature(2, 1)
    a = Multivector.real(sig, t1)
    b = Multivector.real(sig, t2)
    assert (a * b).reversion() == b.reversion() * a.reversion()
    assert a.reversion().reversion() == a


@settings(deadline=None, max_examples=80)
@given(mv_terms, mv_terms)
def test_grade_involution_homomorphism(t1, t2):
    sig = Signature(1, 2)
    a = Multivector.real(sig, t1)
    b = Multivector.real(sig, t2)
    assert (a * b).grade_involution() == a.grade_involution() * b.grade_involution()


def test_star_involution_laws():
    n = 3
    i = GaussianRational(0, 1)
    a = Multivector.complex_alg(n, {0b001: i, 0b110: GaussianRational(2, 1)})
    b = Multivector.complex_alg(n, {0: GaussianRational(1, 1), 0b011: i})
    assert (a * b).star() == b.star() * a.star()
    assert a.star().star() == a
    # generators are Hermitian, i is conjugated
    e1 = complex_basis_vector(n, 1)
    assert e1.star() == e1
    assert (e1 * i).star() == e1 * (-i)
    with pytest.raises(ValueError):
        basis_vector(Signature(1, 0), 1).star()


def test_complexify_embed_is_homomorphism():
    sig = Signature(1, 2)
    a = Multivector.real(sig, {0b001: 2, 0b110: Fraction(1, 3)})
    b = Multivector.real(sig, {0b010: -1, 0b111: 1})
    fa, fb = complexify_embed(a), complexify_embed(b)
    assert complexify_embed(a * b) == fa * fb
    assert complexify_embed(a + b) == fa + fb
    # a negative-square generator picks up a factor of i
    v3 = basis_vector(sig, 3)
    assert complexify_embed(v3) == complex_basis_vector(3, 3) * GaussianRational(0, 1)
    # and its image still squares to -e
    img = complexify_embed(v3)
    assert img * img == complex_unit(3) * GaussianRational(-1)


def test_invert():
    sig = Signature(2, 0)
    v = vector(sig, [Fraction(3), Fraction(4)])
    vinv = invert(v)
    assert v * vinv == unit(sig)
    assert vinv * v == unit(sig)
    # 1 + e1 has (1+e1)(1-e1) = 0 when e1^2 = e, so it is singular
    s = unit(sig) + basis_vector(sig, 1)
    assert invert(s) is None
    # isotropic vector in a split signature
    iso = vector(Signature(1, 1), [Fraction(1), Fraction(1)])
    assert invert(iso) is None


def test_space_mismatch_errors():
    a = unit(Signature(1, 1))
    b = unit(Signature(2, 0))
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(TypeError):
        Multivector.real(Signature(1, 0), {0: GaussianRational(1)})
    with pytest.raises(TypeError):
        a * "x"


def test_json_roundtrip_real_and_complex():
    sig = Signature(2, 1)
    a = Multivector.real(sig, {0: Fraction(1, 2), 0b101: Fraction(-3)})
    assert multivector_from_json(multivector_to_json(a)) == a
    b = Multivector.complex_alg(
        2, {0b01: GaussianRational(1, 2), 0b11: GaussianRational(0, Fraction(-1, 3))}
    )
    assert multivector_from_json(multivector_to_json(b)) == b
    with pytest.raises(ValueError):
        multivector_from_json({"ring": "rational", "terms": []})
