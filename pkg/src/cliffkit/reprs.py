"""Compilation of Clifford algebras onto matrix rings.

Every real algebra over a signature (p, q) is isomorphic to a matrix ring
over R, C or H, or to a direct sum of two copies of one, and the target only
depends on (p - q) mod 8.  ``compile_rep`` produces explicit generator
matrices realizing that isomorphism: it reduces the signature with two exact
shifts (an index flip and a (p, q) -> (p - 4, q + 4) move), then stacks
(1, 1)-doublings over a small table of base cases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import Multivector, Signature, basis_vector, unit
from .scalars import (
    GAUSSIAN,
    QUATERNION,
    RATIONAL,
    RINGS,
    GaussianRational,
    Quaternion,
    format_scalar,
    parse_scalar,
)

KIND_RING = {"MatR": RATIONAL, "MatC": GAUSSIAN, "MatH": QUATERNION}
KIND_REAL_DIM = {"MatR": 1, "MatC": 2, "MatH": 4}


@dataclass(frozen=True)
class TargetRing:
    """Mat(m, K) or, when summands == 2, Mat(m, K) + Mat(m, K)."""

    kind: str
    m: int
    summands: int = 1

    def __post_init__(self):
        if self.kind not in KIND_RING:
            raise ValueError(f"unknown matrix ring kind {self.kind!r}")
        if self.m < 1 or self.summands not in (1, 2):
            raise ValueError("bad target ring shape")

    @property
    def ring_tag(self):
        return KIND_RING[self.kind]

    @property
    def real_dim(self):
        return self.summands * self.m * self.m * KIND_REAL_DIM[self.kind]

    def one(self):
        one = RINGS[self.ring_tag].one
        ident = linalg.identity(self.m, one)
        return (ident, ident) if self.summands == 2 else ident

    def zero(self):
        one = RINGS[self.ring_tag].one
        z = linalg.zeros(self.m, self.m, one)
        return (z, z) if self.summands == 2 else z

    def mul(self, x, y):
        if self.summands == 2:
            return (linalg.matmul(x[0], y[0]), linalg.matmul(x[1], y[1]))
        return linalg.matmul(x, y)

    def add(self, x, y):
        if self.summands == 2:
            return (linalg.matadd(x[0], y[0]), linalg.matadd(x[1], y[1]))
        return linalg.matadd(x, y)

    def scale(self, c, x):
        if self.summands == 2:
            return (linalg.scalar_mul(c, x[0]), linalg.scalar_mul(c, x[1]))
        return linalg.scalar_mul(c, x)

    def eq(self, x, y):
        if self.summands == 2:
            return linalg.mat_eq(x[0], y[0]) and linalg.mat_eq(x[1], y[1])
        return linalg.mat_eq(x, y)

    def flatten(self, x):
        """Dense rational coordinates of an element (dict, sparse)."""
        coords = RINGS[self.ring_tag].coords
        d = KIND_REAL_DIM[self.kind]
        parts = x if self.summands == 2 else (x,)
        out = {}
        off = 0
        block = self.m * self.m * d
        for part in parts:
            for i, row in enumerate(part):
                for j, v in enumerate(row):
                    if not v:
                        continue
                    for k, comp in enumerate(coords(v)):
                        if comp:
                            out[off + (i * self.m + j) * d + k] = comp
            off += block
        return out

    def __str__(self):
        name = {"MatR": "R", "MatC": "C", "MatH": "H"}[self.kind]
        base = f"Mat({self.m},{name})"
        return base + " + " + base if self.summands == 2 else base


def classify(sig: Signature) -> TargetRing:
    """Matrix ring isomorphism class from (p - q) mod 8."""
    n = sig.n
    d = (sig.p - sig.q) % 8
    if d in (0, 2):
        return TargetRing("MatR", 1 << (n // 2))
    if d == 1:
        return TargetRing("MatR", 1 << ((n - 1) // 2), summands=2)
    if d in (3, 7):
        return TargetRing("MatC", 1 << ((n - 1) // 2))
    if d in (4, 6):
        return TargetRing("MatH", 1 << ((n - 2) // 2))
    return TargetRing("MatH", 1 << ((n - 3) // 2), summands=2)


class Representation:
    """Generator matrices for an algebra, real (signature) or complex (n).

    ``canonical`` marks representations whose target is exactly the
    classification target; derived objects such as complexified quaternionic
    models carry canonical=False.
    """

    def __init__(self, sig, complex_dim, target, gens, canonical=True):
        if (sig is None) == (complex_dim is None):
            raise ValueError("exactly one of signature / complex_dim required")
        self.sig = sig
        self.complex_dim = complex_dim
        self.target = target
        self.gens = tuple(gens)
        self.canonical = canonical
        self.verified = False
        self._blade_cache = {0: target.one()}
        if len(self.gens) != self.n:
            raise ValueError("generator count does not match the algebra")

    @property
    def n(self):
        return self.sig.n if self.sig is not None else self.complex_dim

    @property
    def is_complex(self):
        return self.sig is None

    def gen_square(self, i):
        return self.sig.square(i) if self.sig is not None else 1

    def blade_image(self, blade):
        img = self._blade_cache.get(blade)
        if img is not None:
            return img
        low = blade & -blade
        rest = blade ^ low
        g = self.gens[low.bit_length() - 1]
        img = self.target.mul(g, self.blade_image(rest))
        self._blade_cache[blade] = img
        return img

    def rho(self, mv: Multivector):
        """Image of a multivector; its space must match the source algebra."""
        if self.is_complex:
            if not mv.is_complex or mv.n != self.complex_dim:
                raise ValueError("multivector does not live in the source algebra")
        else:
            if mv.is_complex or mv.sig != self.sig:
                raise ValueError("multivector does not live in the source algebra")
        acc = self.target.zero()
        for b, c in mv.terms.items():
            acc = self.target.add(acc, self.target.scale(c, self.blade_image(b)))
        return acc

    def check_relations(self):
        """v^a v^b + v^b v^a = 2 eta^{ab} e, exactly."""
        t = self.target
        one = t.one()
        zero = t.zero()
        n = self.n
        for a in range(n):
            ga = self.gens[a]
            for b in range(a, n):
                gb = self.gens[b]
                anti = t.add(t.mul(ga, gb), t.mul(gb, ga))
                if a == b:
                    want = t.scale(Fraction(2 * self.gen_square(a + 1)), one)
                else:
                    want = zero
                if not t.eq(anti, want):
                    return False
        return True

    def check_injective(self):
        """All 2^n blade images are linearly independent over Q."""
        acc = linalg.SparseRankAccumulator()
        for b in range(1 << self.n):
            if not acc.add(self.target.flatten(self.blade_image(b))):
                return False
        return True

    def verify(self, injective=True):
        ok = self.check_relations() and (not injective or self.check_injective())
        self.verified = ok
        return ok


# ---------------------------------------------------------------------------
# base cases

F0, F1 = Fraction(0), Fraction(1)
SIGMA1 = ((F0, F1), (F1, F0))
SIGMA3 = ((F1, F0), (F0, -F1))
TAU2_MAT = ((F0, -F1), (F1, F0))

GI = GaussianRational(0, 1)


def _quat_mat(q):
    return ((q,),)


def base_rep(sig: Signature) -> Representation:
    p, q = sig.p, sig.q
    if (p, q) == (0, 0):
        return Representation(sig, None, TargetRing("MatR", 1), ())
    if (p, q) == (1, 0):
        t = TargetRing("MatR", 1, summands=2)
        return Representation(sig, None, t, [(((F1,),), ((-F1,),))])
    if (p, q) == (0, 1):
        return Representation(sig, None, TargetRing("MatC", 1), [((GI,),)])
    if (p, q) == (0, 2):
        t = TargetRing("MatH", 1)
        return Representation(
            sig, None, t,
            [_quat_mat(Quaternion(0, 1, 0, 0)), _quat_mat(Quaternion(0, 0, 1, 0))],
        )
    if (p, q) == (1, 1):
        return Representation(sig, None, TargetRing("MatR", 2), [SIGMA1, TAU2_MAT])
    if (p, q) == (2, 0):
        return Representation(sig, None, TargetRing("MatR", 2), [SIGMA1, SIGMA3])
    if (p, q) == (0, 3):
        t = TargetRing("MatH", 1, summands=2)
        gens = [
            (_quat_mat(Quaternion(0, 1, 0, 0)), _quat_mat(Quaternion(0, -1, 0, 0))),
            (_quat_mat(Quaternion(0, 0, 1, 0)), _quat_mat(Quaternion(0, 0, -1, 0))),
            (_quat_mat(Quaternion(0, 0, 0, 1)), _quat_mat(Quaternion(0, 0, 0, -1))),
        ]
        return Representation(sig, None, t, gens)
    raise ValueError(f"{sig} is not a base case")


BASE_BY_DEFECT = {
    0: Signature(0, 0),
    1: Signature(1, 0),
    -1: Signature(0, 1),
    2: Signature(2, 0),
    -2: Signature(0, 2),
    -3: Signature(0, 3),
}


# ---------------------------------------------------------------------------
# structural moves

def _block2(a, b, c, d):
    """2x2 block matrix [[a, b], [c, d]] from equally sized blocks."""
    m = len(a)
    rows = []
    for i in range(m):
        rows.append(tuple(a[i]) + tuple(b[i]))
    for i in range(m):
        rows.append(tuple(c[i]) + tuple(d[i]))
    return tuple(rows)


def double_rep(r: Representation) -> Representation:
    """Representation of (p+1, q+1) on doubled matrices.

    New generators: v+ = [[0, 1], [1, 0]], v- = [[0, -1], [1, 0]] and, for
    each old generator image A, diag(A, -A).
    """
    if r.is_complex:
        raise ValueError("doubling applies to real representations")
    if not r.verified:
        r.verify()
    if not r.verified:
        raise ValueError("input representation failed verification")
    sig = Signature(r.sig.p + 1, r.sig.q + 1)
    t = r.target
    m = t.m
    one = RINGS[t.ring_tag].one
    ident = linalg.identity(m, one)
    zero = linalg.zeros(m, m, one)
    neg_ident = linalg.scalar_mul(-one, ident)

    def dbl(fn):
        if t.summands == 2:
            return (fn(0), fn(1))
        return fn(None)

    def pick(x, idx):
        return x[idx] if idx is not None else x

    v_plus = dbl(lambda idx: _block2(zero, ident, ident, zero))
    v_minus = dbl(lambda idx: _block2(zero, neg_ident, ident, zero))
    gens = [v_plus]
    for a in range(r.sig.p):
        old = r.gens[a]
        gens.append(dbl(lambda idx, o=old: _block2(
            pick(o, idx), zero, zero, linalg.scalar_mul(-one, pick(o, idx)))))
    gens.append(v_minus)
    for a in range(r.sig.p, r.sig.n):
        old = r.gens[a]
        gens.append(dbl(lambda idx, o=old: _block2(
            pick(o, idx), zero, zero, linalg.scalar_mul(-one, pick(o, idx)))))
    # reorder: positives are v+ then old positives, negatives v- then old ones
    pos = [gens[0]] + gens[1:1 + r.sig.p]
    neg = [gens[1 + r.sig.p]] + gens[2 + r.sig.p:]
    target = TargetRing(t.kind, 2 * m, summands=t.summands)
    out = Representation(sig, None, target, pos + neg)
    if not out.verify():
        raise AssertionError("doubled representation failed verification")
    return out


def signature_shift(sig: Signature, kind: str):
    """Exact generator substitution realizing a signature move.

    Returns (new_sig, gen_map) where gen_map lists, for each generator of the
    new signature (positives first), a multivector of the old algebra.

    kind "flip": (m, k) -> (k+1, m-1), built from w1 = v1, wi = v1 vi.
    kind "mod4": (p, q) -> (p-4, q+4), the first four positive generators are
    replaced by the four complementary triple products.
    """
    p, q = sig.p, sig.q
    n = sig.n
    v = [None] + [basis_vector(sig, i) for i in range(1, n + 1)]
    if kind == "flip":
        if p < 1 or n < 2:
            raise ValueError("flip needs at least one positive generator and n > 1")
        new_sig = Signature(q + 1, p - 1)
        pos = [v[1]] + [v[1] * v[i] for i in range(p + 1, n + 1)]
        neg = [v[1] * v[i] for i in range(2, p + 1)]
        return new_sig, pos + neg
    if kind == "mod4":
        if p < 4:
            raise ValueError("mod4 shift needs at least four positive generators")
        new_sig = Signature(p - 4, q + 4)
        pos = [v[i] for i in range(5, p + 1)]
        triples = [
            v[2] * v[3] * v[4],
            v[1] * v[3] * v[4],
            v[1] * v[2] * v[4],
            v[1] * v[2] * v[3],
        ]
        neg = triples + [v[i] for i in range(p + 1, n + 1)]
        return new_sig, pos + neg
    raise ValueError(f"unknown shift kind {kind!r}")


_COMPILE_CACHE = {}


def compile_rep(sig: Signature) -> Representation:
    """Exact matrix model of the real algebra over ``sig``.

    Plan: if p - q is within the base band [-3, 2], double the base case
    min(p, q) times.  Otherwise pull the signature into the band with flip
    (p - q >= 3) or mod4 (p - q <= -4) moves, compile the pulled-back
    signature, and push the generators through the substitution.
    """
    cached = _COMPILE_CACHE.get(sig)
    if cached is not None:
        return cached
    d = sig.p - sig.q
    if -3 <= d <= 2:
        base = BASE_BY_DEFECT[d]
        rep = base_rep(base)
        rep.verify()
        for _ in range(min(sig.p, sig.q) - min(base.p, base.q)):
            rep = double_rep(rep)
    else:
        if d >= 3:
            src = Signature(sig.q + 1, sig.p - 1)
            kind = "flip"
        else:
            src = Signature(sig.p + 4, sig.q - 4)
            kind = "mod4"
        src_rep = compile_rep(src)
        new_sig, gen_map = signature_shift(src, kind)
        if new_sig != sig:
            raise AssertionError("shift plan produced the wrong signature")
        gens = [src_rep.rho(mv) for mv in gen_map]
        rep = Representation(sig, None, src_rep.target, gens)
        if not rep.verify():
            raise AssertionError(f"compiled representation for {sig} failed verification")
    want = classify(sig)
    if rep.target != want:
        raise AssertionError(f"compiled target {rep.target} != classified {want}")
    if not rep.verified and not rep.verify():
        raise AssertionError(f"compiled representation for {sig} failed verification")
    _COMPILE_CACHE[sig] = rep
    return rep


def compile_complex_rep(n: int) -> Representation:
    """Matrix model Mat(2^(n/2), C) of the complexified algebra.

    Routes through the split signature (n/2, n/2): the negative generators
    v^j there correspond to i e^j in the complex algebra, so e^j maps to
    -i times the real image.  Odd n is unsupported.
    """
    if n <= 0 or n % 2:
        raise ValueError("complex compilation needs positive even n")
    k = n // 2
    real = compile_rep(Signature(k, k))
    m = real.target.m

    def gauss(mat):
        return tuple(tuple(GaussianRational.coerce(x) for x in row) for row in mat)

    minus_i = GaussianRational(0, -1)
    gens = []
    for j in range(n):
        img = gauss(real.gens[j])
        if j >= k:
            img = linalg.scalar_mul(minus_i, img)
        gens.append(img)
    rep = Representation(None, n, TargetRing("MatC", m), gens)
    if not rep.verify():
        raise AssertionError("complex compilation failed verification")
    return rep


def even_subring_rep(sig: Signature):
    """Even subring generators w^i = v^1 v^i and their derived signature.

    Returns (derived_sig, gen_map, representation).  The derived signature is
    computed from the exact squares (w^i)^2 = -eta^11 eta^ii e; generators
    squaring to +e are listed first.
    """
    n = sig.n
    if n < 2:
        raise ValueError("even subring derivation needs n > 1")
    v1 = basis_vector(sig, 1)
    pos, neg = [], []
    for i in range(2, n + 1):
        w = v1 * basis_vector(sig, i)
        sq = (w * w).scalar_part()
        if sq == 1:
            pos.append(w)
        elif sq == -1:
            neg.append(w)
        else:
            raise AssertionError("even subring generator square is not +-1")
    derived = Signature(len(pos), len(neg))
    gen_map = pos + neg
    ambient = compile_rep(sig)
    gens = [ambient.rho(w) for w in gen_map]
    rep = Representation(derived, None, ambient.target, gens, canonical=False)
    if not rep.verify():
        raise AssertionError("even subring representation failed verification")
    return derived, gen_map, rep


# quaternion units as 2x2 complex blocks
_QBLOCKS = {
    "one": ((GaussianRational(1), GaussianRational(0)),
            (GaussianRational(0), GaussianRational(1))),
    "t1": ((GaussianRational(0), GaussianRational(0, -1)),
           (GaussianRational(0, -1), GaussianRational(0))),
    "t2": ((GaussianRational(0), GaussianRational(-1)),
           (GaussianRational(1), GaussianRational(0))),
    "t3": ((GaussianRational(0, -1), GaussianRational(0)),
           (GaussianRational(0), GaussianRational(0, 1))),
}


def quaternion_to_complex_block(x: Quaternion):
    a, b, c, d = x.coords()
    out = [[GaussianRational(0)] * 2 for _ in range(2)]
    for coeff, key in ((a, "one"), (b, "t1"), (c, "t2"), (d, "t3")):
        if coeff:
            blk = _QBLOCKS[key]
            for i in range(2):
                for j in range(2):
                    out[i][j] = out[i][j] + blk[i][j] * coeff
    return tuple(tuple(row) for row in out)


def quaternion_complexify(r: Representation) -> Representation:
    """Replace quaternion entries by 2x2 complex blocks (Mat(m,H) -> Mat(2m,C))."""
    if r.target.kind != "MatH" or r.target.summands != 1:
        raise ValueError("complexification applies to single quaternionic targets")
    m = r.target.m
    gens = []
    for g in r.gens:
        big = [[None] * (2 * m) for _ in range(2 * m)]
        for i in range(m):
            for j in range(m):
                blk = quaternion_to_complex_block(Quaternion.coerce(g[i][j]))
                for a in range(2):
                    for b in range(2):
                        big[2 * i + a][2 * j + b] = blk[a][b]
        gens.append(tuple(tuple(row) for row in big))
    out = Representation(r.sig, r.complex_dim, TargetRing("MatC", 2 * m), gens,
                         canonical=False)
    if not out.verify():
        raise AssertionError("complexified representation failed verification")
    return out


def real_irrep_dim(sig: Signature) -> int:
    """Real dimension of the natural column module of one target factor."""
    t = classify(sig)
    return t.m * KIND_REAL_DIM[t.kind]


def factor_projections(r: Representation):
    """The two single-factor representations of a direct-sum target."""
    if r.target.summands != 2:
        raise ValueError("representation target is not a direct sum")
    t = TargetRing(r.target.kind, r.target.m)
    out = []
    for idx in (0, 1):
        rep = Representation(r.sig, r.complex_dim, t,
                             [g[idx] for g in r.gens], canonical=False)
        rep.verify(injective=False)
        out.append(rep)
    return out


# ---------------------------------------------------------------------------
# intertwiners

@dataclass
class Intertwiner:
    """Invertible S with S r1(v) S^-1 = r2(v) on all generators."""

    matrix: tuple
    inverse: tuple
    ring_tag: str


def _intertwiner_nullspace(gens1, gens2, m, ring_tag):
    """Basis of {S : S A_g = B_g S} as flat coordinate vectors.

    Over R and C this solves directly in the field; over H the problem is
    linearized over Q by probing the 4 m^2 real coordinates.
    """
    if ring_tag in (RATIONAL, GAUSSIAN):
        one = RINGS[ring_tag].one
        zero = one - one
        rows = []
        for A, B in zip(gens1, gens2):
            for i in range(m):
                for j in range(m):
                    row = [zero] * (m * m)
                    for c in range(m):
                        row[i * m + c] = row[i * m + c] + A[c][j]
                    for r_ in range(m):
                        row[r_ * m + j] = row[r_ * m + j] - B[i][r_]
                    rows.append(row)
        basis = linalg.nullspace(rows)
        mats = []
        for v in basis:
            mats.append(tuple(tuple(v[i * m + j] for j in range(m)) for i in range(m)))
        return mats
    # quaternion case: real-linear probing
    units = (Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1))
    dim = 4 * m * m
    coords = RINGS[QUATERNION].coords
    columns = []
    for r_ in range(m):
        for c in range(m):
            for u in units:
                col = []
                for A, B in zip(gens1, gens2):
                    # (E A - B E) where E has u at (r_, c)
                    for i in range(m):
                        for j in range(m):
                            val = Quaternion(0)
                            if i == r_:
                                val = val + u * Quaternion.coerce(A[c][j])
                            if j == c:
                                val = val - Quaternion.coerce(B[i][r_]) * u
                            col.extend(coords(val))
                columns.append(col)
    rows = [tuple(columns[k][r] for k in range(dim)) for r in range(len(columns[0]))]
    basis = linalg.nullspace(rows)
    mats = []
    for v in basis:
        entries = []
        for r_ in range(m):
            row = []
            for c in range(m):
                base = (r_ * m + c) * 4
                row.append(Quaternion(v[base], v[base + 1], v[base + 2], v[base + 3]))
            entries.append(tuple(row))
        mats.append(tuple(entries))
    return mats


def _first_invertible(candidates, seed=0):
    if not candidates:
        return None, None
    tried = list(candidates)
    acc = None
    for c in candidates:
        acc = c if acc is None else linalg.matadd(acc, c)
        tried.append(acc)
    rng = random.Random(seed)
    for _ in range(100):
        coeffs = [rng.randint(-3, 3) for _ in candidates]
        combo = None
        for cf, c in zip(coeffs, candidates):
            if not cf:
                continue
            scaled = linalg.scalar_mul(Fraction(cf), c)
            combo = scaled if combo is None else linalg.matadd(combo, scaled)
        if combo is not None:
            tried.append(combo)
    for s in tried:
        sinv = linalg.inv(s)
        if sinv is not None:
            return s, sinv
    return None, None


def solve_intertwiner(gens1, gens2, m, ring_tag, seed=0):
    """Invertible S with S A_g S^-1 = B_g, or None if none exists."""
    basis = _intertwiner_nullspace(gens1, gens2, m, ring_tag)
    s, sinv = _first_invertible(basis, seed=seed)
    if s is None:
        return None
    for A, B in zip(gens1, gens2):
        if not linalg.mat_eq(linalg.matmul(linalg.matmul(s, A), sinv), B):
            return None
    return Intertwiner(s, sinv, ring_tag)


def rep_equivalence(r1: Representation, r2: Representation, seed=0):
    """Exact intertwiner between two representations, or None.

    Both must have the same single-factor target ring and dimension; use
    ``factor_projections`` first for direct-sum targets.
    """
    if r1.target.summands != 1 or r2.target.summands != 1:
        raise ValueError("use factor_projections before comparing direct sums")
    if (r1.target.kind, r1.target.m) != (r2.target.kind, r2.target.m):
        raise ValueError("representations target different matrix rings")
    if (r1.sig, r1.complex_dim) != (r2.sig, r2.complex_dim):
        raise ValueError("representations have different source algebras")
    return solve_intertwiner(r1.gens, r2.gens, r1.target.m, r1.target.ring_tag,
                             seed=seed)


# ---------------------------------------------------------------------------
# JSON interface

def _matrix_to_json(mat, ring_tag):
    return [[format_scalar(ring_tag, x) for x in row] for row in mat]


def _matrix_from_json(rows, ring_tag):
    return tuple(tuple(parse_scalar(ring_tag, x) for x in row) for row in rows)


def rep_to_json(r: Representation):
    t = r.target
    doc = {}
    if r.sig is not None:
        doc["signature"] = [r.sig.p, r.sig.q]
    else:
        doc["complex_dim"] = r.complex_dim
    doc["target"] = {"kind": t.kind, "m": t.m}
    if t.summands == 2:
        doc["target"]["summands"] = 2
        doc["generators"] = [
            [_matrix_to_json(g[0], t.ring_tag), _matrix_to_json(g[1], t.ring_tag)]
            for g in r.gens
        ]
    else:
        doc["generators"] = [_matrix_to_json(g, t.ring_tag) for g in r.gens]
    return doc


def rep_from_json(doc):
    tdoc = doc["target"]
    target = TargetRing(tdoc["kind"], tdoc["m"], tdoc.get("summands", 1))
    sig = None
    complex_dim = None
    if "signature" in doc:
        sig = Signature(*doc["signature"])
    else:
        complex_dim = doc["complex_dim"]
    ring = target.ring_tag
    gens = []
    for g in doc["generators"]:
        if target.summands == 2:
            gens.append((_matrix_from_json(g[0], ring), _matrix_from_json(g[1], ring)))
        else:
            gens.append(_matrix_from_json(g, ring))
    return Representation(sig, complex_dim, target, gens)
