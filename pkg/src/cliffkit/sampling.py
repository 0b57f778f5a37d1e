"""Seeded random generators for vectors, versors and matrices.

Everything takes an explicit ``random.Random`` so runs are reproducible from
a single seed.  Coefficients are kept small to keep exact arithmetic fast.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Multivector, Signature, vector
from .groups import PseudoOrthogonalMatrix, Versor, reflection_matrix
from .scalars import GaussianRational


def rng_from_seed(seed) -> random.Random:
    return random.Random(seed)


def random_vector(sig: Signature, rng, lo=-3, hi=3) -> Multivector:
    while True:
        coords = [Fraction(rng.randint(lo, hi)) for _ in range(sig.n)]
        if any(coords):
            return vector(sig, coords)


def random_anisotropic_vector(sig: Signature, rng, lo=-3, hi=3) -> Multivector:
    while True:
        v = random_vector(sig, rng, lo, hi)
        sq = (v * v).scalar_part()
        if sq != 0:
            return v


def random_versor(sig: Signature, rng, num_factors=2) -> Versor:
    return Versor(
        sig, [random_anisotropic_vector(sig, rng) for _ in range(num_factors)]
    )


def random_pseudo_orthogonal(sig: Signature, rng, num_reflections=None) -> PseudoOrthogonalMatrix:
    if num_reflections is None:
        num_reflections = rng.randint(1, max(1, sig.n))
    m = PseudoOrthogonalMatrix.identity(sig)
    for _ in range(num_reflections):
        m = m * reflection_matrix(random_anisotropic_vector(sig, rng))
    return m


def rational_unit_vector(n, rng, lo=-4, hi=4):
    """A rational point on the unit sphere S^(n-1), by stereographic projection."""
    while True:
        t = [Fraction(rng.randint(lo, hi)) for _ in range(n - 1)]
        norm2 = sum(x * x for x in t)
        denom = norm2 + 1
        coords = [2 * x / denom for x in t] + [(norm2 - 1) / denom]
        if any(coords):
            return coords


def random_unitary_versor(n, rng, num_factors=2) -> Multivector:
    """Product of real unit vectors in the complex algebra: g* = g^-1."""
    g = Multivector.complex_alg(n, {0: GaussianRational(1)})
    for _ in range(num_factors):
        coords = rational_unit_vector(n, rng)
        v = Multivector.complex_alg(
            n,
            {1 << k: GaussianRational(c) for k, c in enumerate(coords) if c},
        )
        g = g * v
    return g


def random_multivector(sig: Signature, rng, max_terms=4, lo=-3, hi=3) -> Multivector:
    dim = 1 << sig.n
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        b = rng.randrange(dim)
        c = rng.randint(lo, hi)
        if c:
            terms[b] = terms.get(b, 0) + c
    return Multivector.real(sig, {b: c for b, c in terms.items() if c})
