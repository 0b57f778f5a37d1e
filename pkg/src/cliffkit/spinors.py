"""Spinor spaces as minimal left ideals of the complexified algebra.

A Hermitian idempotent p = (e + s)/2 generates the left ideal A p; the ideal
is minimal exactly when its complex dimension is 2^(n/2), and then left
multiplication on it is equivalent to the compiled column model.  All linear
algebra is exact over the Gaussian rationals.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import (
    Multivector,
    complex_unit,
    coords_vector,
    from_coords,
    invert,
    left_mul_matrix,
    right_mul_matrix,
)
from .reprs import Representation, compile_complex_rep, solve_intertwiner
from .scalars import GAUSSIAN, GaussianRational


@dataclass(frozen=True)
class HermitianIdempotent:
    """p = (e + s)/2 for a Hermitian square root of unity s != e."""

    n: int
    s: Multivector
    p: Multivector


def make_idempotent(s: Multivector) -> HermitianIdempotent:
    if not s.is_complex:
        raise ValueError("idempotents live in the complex algebra")
    n = s.n
    e = complex_unit(n)
    if s * s != e:
        raise ValueError("s does not square to the unit")
    if s.star() != s:
        raise ValueError("s is not Hermitian")
    if s == e:
        raise ValueError("s = e gives the trivial idempotent")
    half = GaussianRational(1) / 2
    p = (e + s) * half
    return HermitianIdempotent(n, s, p)


def idempotent_from_factors(n, factors):
    """Product of commuting projectors (e + s_k)/2; the s_k must commute."""
    e = complex_unit(n)
    half = GaussianRational(1) / 2
    p = e
    for s in factors:
        if s * s != e:
            raise ValueError("factor does not square to the unit")
        if s.star() != s:
            raise ValueError("factor is not Hermitian")
        p = p * ((e + s) * half)
    if p * p != p:
        raise ValueError("factors do not commute: product is not idempotent")
    if p.star() != p:
        raise ValueError("product idempotent is not Hermitian")
    if p == e:
        raise ValueError("trivial idempotent")
    return p


@dataclass(frozen=True)
class SpinorSpace:
    """Left ideal A p with a canonical (reduced echelon) basis."""

    n: int
    p: Multivector
    basis: tuple
    _rref_rows: tuple
    _pivots: tuple

    @property
    def dim(self):
        return len(self.basis)

    def reduce_coords(self, coords):
        coords = list(coords)
        for row, piv in zip(self._rref_rows, self._pivots):
            c = coords[piv]
            if c:
                for j, v in enumerate(row):
                    if v:
                        coords[j] = coords[j] - c * v
        return coords

    def contains(self, mv: Multivector) -> bool:
        if not mv.is_complex or mv.n != self.n:
            raise ValueError("element lives in a different algebra")
        return not any(self.reduce_coords(coords_vector(mv)))

    def coordinates(self, mv: Multivector):
        """Coordinates on the canonical basis, or None if mv is outside."""
        coords = list(coords_vector(mv))
        out = [GaussianRational(0)] * self.dim
        for k, (row, piv) in enumerate(zip(self._rref_rows, self._pivots)):
            c = coords[piv]
            if c:
                out[k] = c
                for j, v in enumerate(row):
                    if v:
                        coords[j] = coords[j] - c * v
        if any(coords):
            return None
        return out


def left_ideal(p, n=None) -> SpinorSpace:
    """Canonical basis of the left ideal generated by an idempotent."""
    if isinstance(p, HermitianIdempotent):
        n = p.n
        p = p.p
    elif n is None:
        n = p.n
    if not p.is_complex or p.n != n:
        raise ValueError("idempotent lives in a different algebra")
    if p * p != p:
        raise ValueError("not an idempotent")
    dim = 1 << n
    rows = []
    for b in range(dim):
        blade = Multivector.complex_alg(n, {b: GaussianRational(1)})
        rows.append(coords_vector(blade * p))
    red, pivots = linalg.rref(rows)
    red = red[: len(pivots)]
    basis = tuple(
        from_coords(Multivector.complex_alg(n, {}), row) for row in red
    )
    return SpinorSpace(n, p, basis, tuple(tuple(r) for r in red), tuple(pivots))


def is_minimal(space: SpinorSpace) -> bool:
    if space.n % 2:
        raise ValueError("minimality criterion implemented for even n")
    return space.dim == 1 << (space.n // 2)


# ---------------------------------------------------------------------------
# deterministic primitive idempotent search

def _candidate_roots(n):
    """Hermitian square roots of e among signed blades: +-e^i and +-i e^a e^b."""
    out = []
    for i in range(1, n + 1):
        blade = 1 << (i - 1)
        for sign in (1, -1):
            out.append(Multivector.complex_alg(n, {blade: GaussianRational(sign)}))
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            blade = (1 << (a - 1)) | (1 << (b - 1))
            for sign in (1, -1):
                out.append(
                    Multivector.complex_alg(n, {blade: GaussianRational(0, sign)})
                )
    return out


def primitive_idempotent(n: int) -> HermitianIdempotent:
    """First (in a fixed candidate order) primitive Hermitian idempotent
    built from n/2 commuting independent signed-blade square roots."""
    if n <= 0 or n % 2:
        raise ValueError("primitive idempotent search needs positive even n")
    k = n // 2
    candidates = _candidate_roots(n)
    e = complex_unit(n)
    target_dim = 1 << k

    def dfs(start, chosen, products):
        if len(chosen) == k:
            p = idempotent_from_factors(n, chosen)
            space = left_ideal(p, n)
            if space.dim == target_dim:
                return chosen
            return None
        for idx in range(start, len(candidates)):
            s = candidates[idx]
            if any(s * c != c * s for c in chosen):
                continue
            # independence: s must not lie in the group generated so far
            if any(s == pr or s == -pr for pr in products):
                continue
            res = dfs(idx + 1, chosen + [s], products + [pr * s for pr in products])
            if res is not None:
                return res
        return None

    chosen = dfs(0, [], [e])
    if chosen is None:
        raise AssertionError("no primitive idempotent found in the candidate set")
    p = idempotent_from_factors(n, chosen)
    if k == 1:
        return HermitianIdempotent(n, chosen[0], p)
    return HermitianIdempotent(n, p * 2 - e, p)


# ---------------------------------------------------------------------------
# matrix model and conjugation

@dataclass
class SpinorModel:
    rep: Representation
    left_action: tuple
    intertwiner: object


def spinor_matrix_model(space: SpinorSpace, seed=0) -> SpinorModel:
    """Intertwiner between left multiplication on the ideal and the compiled
    column model: U L_i = rho(e^i) U with U invertible."""
    n = space.n
    if not is_minimal(space):
        raise ValueError("matrix model applies to minimal ideals")
    rep = compile_complex_rep(n)
    N = space.dim
    left = []
    for i in range(1, n + 1):
        gen = Multivector.complex_alg(n, {1 << (i - 1): GaussianRational(1)})
        cols = []
        for psi in space.basis:
            coords = space.coordinates(gen * psi)
            if coords is None:
                raise AssertionError("ideal is not closed under left multiplication")
            cols.append(coords)
        left.append(tuple(tuple(cols[j][i_] for j in range(N)) for i_ in range(N)))
    inter = solve_intertwiner(left, rep.gens, N, GAUSSIAN, seed=seed)
    if inter is None:
        raise AssertionError("no invertible intertwiner onto the column model")
    return SpinorModel(rep, tuple(left), inter)


def find_conjugator(p1: Multivector, p2: Multivector, seed=0):
    """Invertible g with g p1 g^-1 = p2, or None.

    Solves the exact linear system g p1 = p2 g in the algebra and picks an
    invertible point of the solution space.
    """
    if p1.space_key() != p2.space_key():
        raise ValueError("idempotents live in different algebras")
    R1 = right_mul_matrix(p1)
    L2 = left_mul_matrix(p2)
    rows = linalg.matsub(R1, L2)
    basis = linalg.nullspace(rows)
    if not basis:
        return None
    candidates = [from_coords(p1, v) for v in basis]
    tried = list(candidates)
    acc = None
    for c in candidates:
        acc = c if acc is None else acc + c
        tried.append(acc)
    import random

    rng = random.Random(seed)
    for _ in range(100):
        combo = None
        for c in candidates:
            f = rng.randint(-3, 3)
            if f:
                term = c * f
                combo = term if combo is None else combo + term
        if combo is not None:
            tried.append(combo)
    for g in tried:
        if not g:
            continue
        ginv = invert(g)
        if ginv is None:
            continue
        if g * p1 * ginv == p2:
            return g
    return None


def stabilizer_membership(g: Multivector, space: SpinorSpace) -> bool:
    """Whether the adjoint by g maps the ideal into itself."""
    ginv = invert(g)
    if ginv is None:
        raise ValueError("stabilizer membership needs an invertible element")
    return all(space.contains(g * psi * ginv) for psi in space.basis)


# ---------------------------------------------------------------------------
# preimages in the compiled model

_PREIMAGE_CACHE = {}


def rep_preimage(rep: Representation, matrix):
    """Multivector x with rho(x) = matrix, or None (complex models only)."""
    if not rep.is_complex:
        raise ValueError("preimage helper supports complex models only")
    n = rep.complex_dim
    m = rep.target.m
    key = id(rep)
    A = _PREIMAGE_CACHE.get(key)
    if A is None:
        cols = []
        for b in range(1 << n):
            img = rep.blade_image(b)
            cols.append([img[i][j] for i in range(m) for j in range(m)])
        A = tuple(
            tuple(cols[b][r] for b in range(1 << n)) for r in range(m * m)
        )
        _PREIMAGE_CACHE[key] = A
    vec = [GaussianRational.coerce(matrix[i][j]) for i in range(m) for j in range(m)]
    x = linalg.solve(A, vec)
    if x is None:
        return None
    return from_coords(Multivector.complex_alg(n, {}), x)
