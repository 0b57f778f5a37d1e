"""Pin and Spin groups acting on the pseudo-orthogonal group.

Versors are products of anisotropic grade-1 elements.  The vector action
used throughout is the untwisted adjoint zeta(g): v -> g v g^-1, under which
a single vector w acts as minus the reflection across its orthogonal
hyperplane, and the total reflection omega = v^1 ... v^n acts (for even n)
as -identity.  Lifting goes the other way: a pseudo-orthogonal matrix is
factored into reflections (constructive, at most 2n of them) and the product
of the reflection vectors, patched by omega when the count is odd, is a
versor mapping onto it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import (
    Multivector,
    Signature,
    basis_vector,
    eta,
    invert,
    unit,
    vector,
)
from .reprs import Representation, TargetRing
from .scalars import GaussianRational, format_rational, parse_rational


class PseudoOrthogonalMatrix:
    """Exact rational matrix M with M^T eta M = eta."""

    __slots__ = ("sig", "mat")

    def __init__(self, sig: Signature, mat):
        n = sig.n
        mat = tuple(tuple(Fraction(x) for x in row) for row in mat)
        if len(mat) != n or any(len(row) != n for row in mat):
            raise ValueError("matrix shape does not match the signature")
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "mat", mat)
        if not self._orthogonality_holds():
            raise ValueError("matrix does not preserve the bilinear form")

    def __setattr__(self, name, value):
        raise AttributeError("PseudoOrthogonalMatrix is immutable")

    def _orthogonality_holds(self):
        n = self.sig.n
        sq = [self.sig.square(i) for i in range(1, n + 1)]
        m = self.mat
        for a in range(n):
            for b in range(a, n):
                s = Fraction(0)
                for k in range(n):
                    s += sq[k] * m[k][a] * m[k][b]
                want = sq[a] if a == b else 0
                if s != want:
                    return False
        return True

    @classmethod
    def identity(cls, sig):
        n = sig.n
        return cls(sig, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __mul__(self, other):
        if not isinstance(other, PseudoOrthogonalMatrix):
            return NotImplemented
        if other.sig != self.sig:
            raise ValueError("signature mismatch")
        return PseudoOrthogonalMatrix(self.sig, linalg.matmul(self.mat, other.mat))

    def inverse(self):
        # M^-1 = eta^-1 M^T eta, and eta is its own inverse
        n = self.sig.n
        sq = [self.sig.square(i) for i in range(1, n + 1)]
        inv = [[sq[i] * self.mat[j][i] * sq[j] for j in range(n)] for i in range(n)]
        return PseudoOrthogonalMatrix(self.sig, inv)

    def det(self):
        return linalg.det(self.mat)

    def column(self, a):
        """Image coordinates of basis vector a (0-based)."""
        return tuple(row[a] for row in self.mat)

    def apply(self, coords):
        return tuple(
            sum(row[j] * coords[j] for j in range(self.sig.n)) for row in self.mat
        )

    def is_identity(self):
        n = self.sig.n
        return all(
            self.mat[i][j] == (1 if i == j else 0)
            for i in range(n) for j in range(n)
        )

    def __eq__(self, other):
        if not isinstance(other, PseudoOrthogonalMatrix):
            return NotImplemented
        return self.sig == other.sig and self.mat == other.mat

    def __hash__(self):
        return hash((self.sig, self.mat))

    def to_json(self):
        return {
            "signature": [self.sig.p, self.sig.q],
            "matrix": [[format_rational(x) for x in row] for row in self.mat],
        }

    @classmethod
    def from_json(cls, doc, sig=None):
        if isinstance(doc, list):
            rows = doc
        else:
            rows = doc["matrix"]
            if sig is None and "signature" in doc:
                sig = Signature(*doc["signature"])
        if sig is None:
            raise ValueError("signature required to read a matrix")
        return cls(sig, [[parse_rational(str(x)) for x in row] for row in rows])


def _qform(sig, x):
    return sum(sig.square(i + 1) * x[i] * x[i] for i in range(sig.n))


def _bform(sig, x, y):
    return sum(sig.square(i + 1) * x[i] * y[i] for i in range(sig.n))


def reflection_matrix(w: Multivector) -> PseudoOrthogonalMatrix:
    """Reflection across the hyperplane orthogonal to an anisotropic vector."""
    sig = w.sig
    if sig is None:
        raise ValueError("reflections are defined in the real algebra")
    coords = w.vector_coords()
    norm = _qform(sig, coords)
    if norm == 0:
        raise ValueError("cannot reflect across an isotropic vector")
    n = sig.n
    cols = []
    for a in range(n):
        e_a = [Fraction(0)] * n
        e_a[a] = Fraction(1)
        f = 2 * sig.square(a + 1) * coords[a] / norm
        cols.append(tuple(e_a[i] - f * coords[i] for i in range(n)))
    mat = [[cols[a][i] for a in range(n)] for i in range(n)]
    return PseudoOrthogonalMatrix(sig, mat)


class Versor:
    """Product of anisotropic grade-1 elements of a real algebra."""

    __slots__ = ("sig", "factors", "product", "parity", "pin_normalized")

    def __init__(self, sig: Signature, factors):
        factors = tuple(factors)
        prod = unit(sig)
        normalized = True
        for v in factors:
            if v.sig != sig:
                raise ValueError("factor signature mismatch")
            coords = v.vector_coords()
            norm = _qform(sig, coords)
            if norm == 0:
                raise ValueError("versor factors must be anisotropic vectors")
            if norm != 1 and norm != -1:
                normalized = False
            prod = prod * v
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "product", prod)
        object.__setattr__(self, "parity", len(factors) % 2)
        object.__setattr__(self, "pin_normalized", normalized)

    def __setattr__(self, name, value):
        raise AttributeError("Versor is immutable")

    @property
    def is_spin(self):
        return self.parity == 0

    def inverse_mv(self):
        """Inverse of the product, built factor by factor."""
        sig = self.sig
        inv = unit(sig)
        denom = Fraction(1)
        for v in reversed(self.factors):
            inv = inv * v
            denom *= _qform(sig, v.vector_coords())
        return inv / denom

    def __mul__(self, other):
        if not isinstance(other, Versor):
            return NotImplemented
        if other.sig != self.sig:
            raise ValueError("signature mismatch")
        return Versor(self.sig, self.factors + other.factors)

    def negated(self):
        """A versor whose product is the negative of this one."""
        if self.factors:
            return Versor(self.sig, (-self.factors[0],) + self.factors[1:])
        v1 = basis_vector(self.sig, 1)
        s = self.sig.square(1)
        return Versor(self.sig, (v1, -v1 * Fraction(s)))

    def __repr__(self):
        return f"Versor({self.sig}, {len(self.factors)} factors, {self.product!r})"


def make_versor(sig: Signature, vectors) -> Versor:
    return Versor(sig, vectors)


def total_reflection_versor(sig: Signature) -> Versor:
    return Versor(sig, [basis_vector(sig, i) for i in range(1, sig.n + 1)])


def zeta(g: Versor) -> PseudoOrthogonalMatrix:
    """Untwisted adjoint action on grade 1: column a is g v^a g^-1."""
    sig = g.sig
    n = sig.n
    ginv = g.inverse_mv()
    cols = []
    for a in range(1, n + 1):
        img = g.product * basis_vector(sig, a) * ginv
        cols.append(img.vector_coords())
    mat = [[cols[a][i] for a in range(n)] for i in range(n)]
    return PseudoOrthogonalMatrix(sig, mat)


def adjoint_automorphism(g: Multivector, a: Multivector) -> Multivector:
    """a -> g a g^-1 for any invertible multivector g."""
    ginv = invert(g)
    if ginv is None:
        raise ValueError("adjoint by a non-invertible multivector")
    return g * a * ginv


@dataclass(frozen=True)
class CDResult:
    """Reflection factorization: M = R(w_1) o ... o R(w_r)."""

    vectors: tuple
    fallback_count: int

    @property
    def r(self):
        return len(self.vectors)


def cartan_dieudonne(M: PseudoOrthogonalMatrix) -> CDResult:
    """Factor M into at most 2n reflections across anisotropic vectors.

    The a-th step maps the current image x of basis vector e_a back to e_a,
    reflecting across x - e_a when that vector is anisotropic and otherwise
    across x + e_a followed by e_a (two reflections, the isotropic fallback).
    """
    sig = M.sig
    n = sig.n
    cols = [list(M.column(a)) for a in range(n)]
    vectors = []
    fallbacks = 0

    def apply_reflection(w):
        norm = _qform(sig, w)
        for a in range(n):
            f = 2 * _bform(sig, w, cols[a]) / norm
            if f:
                cols[a] = [cols[a][i] - f * w[i] for i in range(n)]

    for a in range(n):
        e_a = [Fraction(0)] * n
        e_a[a] = Fraction(1)
        x = cols[a]
        if x == e_a:
            continue
        w = [x[i] - e_a[i] for i in range(n)]
        if _qform(sig, w) != 0:
            apply_reflection(w)
            vectors.append(vector(sig, w))
        else:
            fallbacks += 1
            w2 = [x[i] + e_a[i] for i in range(n)]
            apply_reflection(w2)
            vectors.append(vector(sig, w2))
            apply_reflection(e_a)
            vectors.append(vector(sig, e_a))
        if cols[a] != e_a:
            raise AssertionError("reflection step failed to fix the basis vector")
    for a in range(n):
        e_a = [Fraction(1) if i == a else Fraction(0) for i in range(n)]
        if cols[a] != e_a:
            raise AssertionError("factorization left a nonidentity residue")
    return CDResult(tuple(vectors), fallbacks)


def lift_to_pin(M: PseudoOrthogonalMatrix) -> Versor:
    """A versor g with zeta(g) = M exactly.  Even n only.

    zeta of a single vector is minus its reflection, so the raw product of
    the factorization vectors maps to (-1)^r M; an odd count is patched by
    appending the total reflection, which zeta sends to -identity.
    """
    sig = M.sig
    if sig.n % 2:
        raise ValueError("pin lifting is supported for even n only")
    cd = cartan_dieudonne(M)
    factors = list(cd.vectors)
    if len(factors) % 2:
        factors.extend(basis_vector(sig, i) for i in range(1, sig.n + 1))
    g = Versor(sig, factors)
    if zeta(g) != M:
        raise AssertionError("lift does not map back onto the input matrix")
    return g


# ---------------------------------------------------------------------------
# block structure of Spin(1,3) and Spin(4,0) in the chiral matrix model

_G0 = GaussianRational(0)
_G1 = GaussianRational(1)
_GI = GaussianRational(0, 1)

PAULI1 = ((_G0, _G1), (_G1, _G0))
PAULI2 = ((_G0, -_GI), (_GI, _G0))
PAULI3 = ((_G1, _G0), (_G0, -_G1))


def _chiral_gamma(j):
    """Block form [[0, -sigma_j], [sigma_j, 0]] (j = 1, 2, 3)."""
    s = (PAULI1, PAULI2, PAULI3)[j - 1]
    rows = []
    for i in range(2):
        rows.append((_G0, _G0) + tuple(-x for x in s[i]))
    for i in range(2):
        rows.append(tuple(s[i]) + (_G0, _G0))
    return tuple(rows)


GAMMA0 = (
    (_G0, _G0, _G1, _G0),
    (_G0, _G0, _G0, _G1),
    (_G1, _G0, _G0, _G0),
    (_G0, _G1, _G0, _G0),
)


def chiral_rep(sig: Signature) -> Representation:
    """Chiral 4x4 complex model of Cl(1,3) or Cl(4,0)."""
    if sig == Signature(1, 3):
        gens = [GAMMA0] + [_chiral_gamma(j) for j in (1, 2, 3)]
    elif sig == Signature(4, 0):
        minus_i = GaussianRational(0, -1)
        gens = [GAMMA0] + [
            linalg.scalar_mul(minus_i, _chiral_gamma(j)) for j in (1, 2, 3)
        ]
    else:
        raise ValueError("chiral model available for (1,3) and (4,0) only")
    rep = Representation(sig, None, TargetRing("MatC", 4), gens, canonical=False)
    if not rep.verify():
        raise AssertionError("chiral model failed verification")
    return rep


_CHIRAL_CACHE = {}


def _chiral(sig):
    rep = _CHIRAL_CACHE.get(sig)
    if rep is None:
        rep = chiral_rep(sig)
        _CHIRAL_CACHE[sig] = rep
    return rep


def _conj_transpose(m):
    return tuple(
        tuple(m[j][i].conjugate() for j in range(len(m))) for i in range(len(m[0]))
    )


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


@dataclass(frozen=True)
class SpinBlockResult:
    block_diagonal: bool
    A: tuple
    D: tuple
    det_A: object
    det_D: object
    relation_ok: bool
    component: str


def spin_block_check(g: Versor, sig: Signature) -> SpinBlockResult:
    """Image of an even versor in the chiral model, split into 2x2 blocks.

    For (1,3) the lower block must be Tr(A*) 1 - A* with A* the conjugate
    transpose, and pin-normalized versors have det A = +-1, the restricted
    component being det A = +1.  For (4,0) both blocks of a pin-normalized
    even versor are unimodular.
    """
    if g.sig != sig:
        raise ValueError("versor signature mismatch")
    if not g.is_spin:
        raise ValueError("block structure applies to even versors")
    rep = _chiral(sig)
    m = rep.rho(g.product)
    off_zero = all(
        not m[i][j] for i in range(2) for j in range(2, 4)
    ) and all(not m[i][j] for i in range(2, 4) for j in range(2))
    A = tuple(tuple(m[i][j] for j in range(2)) for i in range(2))
    D = tuple(tuple(m[i][j] for j in range(2, 4)) for i in range(2, 4))
    det_a = _det2(A)
    det_d = _det2(D)
    if sig == Signature(1, 3):
        astar = _conj_transpose(A)
        tr = astar[0][0] + astar[1][1]
        want = tuple(
            tuple((tr if i == j else GaussianRational(0)) - astar[i][j] for j in range(2))
            for i in range(2)
        )
        relation_ok = off_zero and linalg.mat_eq(D, want)
        if g.pin_normalized and det_a == 1:
            component = "restricted"
        elif g.pin_normalized:
            component = "other"
        else:
            component = "unnormalized"
    else:
        relation_ok = off_zero and (not g.pin_normalized or (det_a == 1 and det_d == 1))
        component = "restricted" if g.pin_normalized else "unnormalized"
    return SpinBlockResult(off_zero, A, D, det_a, det_d, relation_ok, component)
