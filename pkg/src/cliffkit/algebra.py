"""Clifford algebra elements with exact coefficients.

A multivector lives either in a real algebra over a signature (p, q), with
rational coefficients, or in the complexified algebra of dimension n, with
Gaussian rational coefficients and a Euclidean metric.  Blades are bitmasks:
bit i-1 set means the generator with index i (1-based) is present, and the
stored blade is always the ascending-index product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import (
    GAUSSIAN,
    RATIONAL,
    GaussianRational,
    format_scalar,
    parse_scalar,
)


@dataclass(frozen=True, order=True)
class Signature:
    """Number of generators squaring to +e and to -e."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("signature components must be nonnegative")

    @property
    def n(self):
        return self.p + self.q

    def square(self, i):
        """Square of generator i (1-based): +1 or -1."""
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} out of range for {self}")
        return 1 if i <= self.p else -1

    def __str__(self):
        return f"({self.p},{self.q})"


def _reorder_sign(b1, b2):
    # parity of transpositions needed to interleave two ascending blades
    a = b1 >> 1
    s = 0
    while a:
        s += (a & b2).bit_count()
        a >>= 1
    return -1 if s & 1 else 1


def blade_mul(b1, b2, sig):
    """Product of two basis blades; returns (sign, blade bitmask).

    ``sig`` may be a Signature or an int n (complex algebra, all squares +1).
    """
    if isinstance(sig, Signature):
        n = sig.n
        neg_mask = ((1 << n) - 1) ^ ((1 << sig.p) - 1)
    else:
        n = sig
        neg_mask = 0
    if b1 < 0 or b2 < 0 or b1 >> n or b2 >> n:
        raise ValueError("blade index out of range for the algebra dimension")
    sign = _reorder_sign(b1, b2)
    if (b1 & b2 & neg_mask).bit_count() & 1:
        sign = -sign
    return sign, b1 ^ b2


def blade_indices(blade):
    """Ascending 1-based generator indices of a blade bitmask."""
    out = []
    i = 1
    while blade:
        if blade & 1:
            out.append(i)
        blade >>= 1
        i += 1
    return out


def blade_from_indices(indices):
    b = 0
    for i in indices:
        if i < 1:
            raise ValueError("generator indices are 1-based")
        bit = 1 << (i - 1)
        if b & bit:
            raise ValueError("repeated generator index in blade")
        b |= bit
    return b


class Multivector:
    """Immutable sparse multivector.  Zero coefficients are never stored."""

    __slots__ = ("sig", "n", "ring", "terms", "_neg_mask")

    def __init__(self, sig, n, ring, terms):
        # use the .real / .complex_alg constructors in client code
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        if sig is None:
            object.__setattr__(self, "_neg_mask", 0)
        else:
            object.__setattr__(
                self, "_neg_mask", ((1 << n) - 1) ^ ((1 << sig.p) - 1)
            )

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def real(cls, sig, terms=None):
        if not isinstance(sig, Signature):
            raise TypeError("real multivector needs a Signature")
        clean = {}
        for b, c in (terms or {}).items():
            if not isinstance(c, (int, Fraction)):
                raise TypeError("real multivector coefficients must be rational")
            if b >> sig.n or b < 0:
                raise ValueError("blade out of range for the signature")
            if c:
                clean[b] = c
        return cls(sig, sig.n, RATIONAL, clean)

    @classmethod
    def complex_alg(cls, n, terms=None):
        if n < 0:
            raise ValueError("complex algebra dimension must be nonnegative")
        clean = {}
        for b, c in (terms or {}).items():
            if isinstance(c, (int, Fraction)):
                c = GaussianRational.coerce(c)
            elif not isinstance(c, GaussianRational):
                raise TypeError("complex multivector coefficients must be Gaussian rationals")
            if b >> n or b < 0:
                raise ValueError("blade out of range for the algebra dimension")
            if c:
                clean[b] = c
        return cls(None, n, GAUSSIAN, clean)

    def _wrap(self, terms):
        clean = {b: c for b, c in terms.items() if c}
        return Multivector(self.sig, self.n, self.ring, clean)

    @property
    def is_complex(self):
        return self.sig is None

    def space_key(self):
        return (self.sig, self.n, self.ring)

    def _check_space(self, other):
        if not isinstance(other, Multivector):
            raise TypeError("expected a Multivector")
        if self.space_key() != other.space_key():
            raise ValueError("signature or ring mismatch between multivectors")

    # -- basic ring structure ------------------------------------------------

    def __add__(self, other):
        self._check_space(other)
        terms = dict(self.terms)
        for b, c in other.terms.items():
            nv = terms.get(b, 0) + c
            if nv:
                terms[b] = nv
            else:
                terms.pop(b, None)
        return Multivector(self.sig, self.n, self.ring, terms)

    def __sub__(self, other):
        self._check_space(other)
        terms = dict(self.terms)
        for b, c in other.terms.items():
            nv = terms.get(b, 0) - c
            if nv:
                terms[b] = nv
            else:
                terms.pop(b, None)
        return Multivector(self.sig, self.n, self.ring, terms)

    def __neg__(self):
        return Multivector(self.sig, self.n, self.ring, {b: -c for b, c in self.terms.items()})

    def scale(self, c):
        if self.ring == RATIONAL and not isinstance(c, (int, Fraction)):
            raise TypeError("real multivector scaled by a non-rational")
        if self.ring == GAUSSIAN and isinstance(c, (int, Fraction)):
            c = GaussianRational.coerce(c)
        if not c:
            return Multivector(self.sig, self.n, self.ring, {})
        return Multivector(self.sig, self.n, self.ring, {b: c * v for b, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        self._check_space(other)
        neg_mask = self._neg_mask
        acc = {}
        for b1, c1 in self.terms.items():
            a1 = b1 >> 1
            for b2, c2 in other.terms.items():
                a = a1
                s = 0
                while a:
                    s += (a & b2).bit_count()
                    a >>= 1
                s += (b1 & b2 & neg_mask).bit_count()
                c = c1 * c2
                if s & 1:
                    c = -c
                b = b1 ^ b2
                nv = acc.get(b, 0) + c
                if nv:
                    acc[b] = nv
                else:
                    acc.pop(b, None)
        return Multivector(self.sig, self.n, self.ring, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, int):
            c = Fraction(c)
        if self.ring == GAUSSIAN:
            c = GaussianRational.coerce(c)
        one = Fraction(1) if self.ring == RATIONAL else GaussianRational(1)
        return self.scale(one / c)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.space_key() == other.space_key() and self.terms == other.terms

    def __hash__(self):
        return hash((self.sig, self.n, self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -------------------------------------------------------------

    def coeff(self, blade):
        zero = Fraction(0) if self.ring == RATIONAL else GaussianRational(0)
        return self.terms.get(blade, zero)

    def scalar_part(self):
        return self.coeff(0)

    def grades(self):
        return sorted({b.bit_count() for b in self.terms})

    def grade_project(self, k):
        return self._wrap({b: c for b, c in self.terms.items() if b.bit_count() == k})

    def max_grade(self):
        return max((b.bit_count() for b in self.terms), default=0)

    def is_scalar(self):
        return all(b == 0 for b in self.terms)

    def vector_coords(self):
        """Coordinates on the grade-1 basis; errors if other grades appear."""
        if any(b.bit_count() != 1 for b in self.terms):
            raise ValueError("multivector is not homogeneous of grade 1")
        zero = Fraction(0) if self.ring == RATIONAL else GaussianRational(0)
        return tuple(self.terms.get(1 << (i - 1), zero) for i in range(1, self.n + 1))

    # -- involutions ----------------------------------------------------------

    def reversion(self):
        out = {}
        for b, c in self.terms.items():
            k = b.bit_count()
            out[b] = -c if (k * (k - 1) // 2) & 1 else c
        return Multivector(self.sig, self.n, self.ring, out)

    def star(self):
        """Hermitian involution: conjugate coefficients and reverse blades."""
        if self.ring != GAUSSIAN:
            raise ValueError("star involution is defined on the complex algebra only")
        out = {}
        for b, c in self.terms.items():
            k = b.bit_count()
            cc = c.conjugate()
            out[b] = -cc if (k * (k - 1) // 2) & 1 else cc
        return Multivector(self.sig, self.n, self.ring, out)

    def grade_involution(self):
        out = {}
        for b, c in self.terms.items():
            out[b] = -c if b.bit_count() & 1 else c
        return Multivector(self.sig, self.n, self.ring, out)

    def __repr__(self):
        space = f"C({self.n})" if self.is_complex else f"Cl{self.sig}"
        if not self.terms:
            return f"<{space} 0>"
        bits = []
        for b in sorted(self.terms, key=lambda x: (x.bit_count(), x)):
            name = "e" if b == 0 else "e" + "".join(str(i) for i in blade_indices(b))
            bits.append(f"({self.terms[b]})*{name}")
        return f"<{space} " + " + ".join(bits) + ">"


# ---------------------------------------------------------------------------
# convenience constructors

def scalar_mv(sig, c):
    return Multivector.real(sig, {0: c})


def unit(sig):
    return Multivector.real(sig, {0: 1})


def basis_vector(sig, i):
    if not 1 <= i <= sig.n:
        raise ValueError(f"generator index {i} out of range for {sig}")
    return Multivector.real(sig, {1 << (i - 1): 1})


def vector(sig, coords):
    if len(coords) != sig.n:
        raise ValueError("coordinate count does not match the signature")
    return Multivector.real(sig, {1 << k: c for k, c in enumerate(coords)})


def complex_unit(n):
    return Multivector.complex_alg(n, {0: 1})


def complex_scalar(n, c):
    return Multivector.complex_alg(n, {0: c})


def complex_basis_vector(n, i):
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range for dimension {n}")
    return Multivector.complex_alg(n, {1 << (i - 1): 1})


def complex_vector(n, coords):
    if len(coords) != n:
        raise ValueError("coordinate count does not match the dimension")
    return Multivector.complex_alg(n, {1 << k: c for k, c in enumerate(coords)})


# ---------------------------------------------------------------------------
# operations

def geometric_product(a, b):
    return a * b


def grade_project(a, k):
    return a.grade_project(k)


def reversion(a):
    return a.reversion()


def star_involution(a):
    return a.star()


def eta(v, w):
    """Symmetric bilinear form on grade-1 elements: vw + wv = 2 eta(v,w) e."""
    prod = v * w + w * v
    if any(b != 0 for b in prod.terms):
        raise ValueError("eta is defined on grade-1 elements only")
    half = Fraction(1, 2)
    return prod.scalar_part() * half


def complexify_embed(a, n=None):
    """Embed a real multivector into the complex algebra of dimension n.

    Generator i maps to e^i when it squares to +e and to i*e^i when it
    squares to -e, so blades keep their bitmask and pick up a power of i.
    """
    if a.is_complex:
        raise ValueError("multivector is already complex")
    sig = a.sig
    if n is None:
        n = sig.n
    if n != sig.n:
        raise ValueError("complex dimension must equal p + q")
    neg_mask = ((1 << n) - 1) ^ ((1 << sig.p) - 1)
    i_pow = (GaussianRational(1), GaussianRational(0, 1),
             GaussianRational(-1), GaussianRational(0, -1))
    terms = {}
    for b, c in a.terms.items():
        t = (b & neg_mask).bit_count()
        terms[b] = i_pow[t & 3] * c
    return Multivector.complex_alg(n, terms)


def _field_zero_one(ring):
    if ring == RATIONAL:
        return Fraction(0), Fraction(1)
    return GaussianRational(0), GaussianRational(1)


def left_mul_matrix(a):
    """Matrix of x -> a*x on the blade basis, columns indexed by blades."""
    dim = 1 << a.n
    zero, _one = _field_zero_one(a.ring)
    cols = []
    for b2 in range(dim):
        col = [zero] * dim
        for b1, c1 in a.terms.items():
            s, b = blade_mul(b1, b2, a.sig if a.sig is not None else a.n)
            c = c1 if s > 0 else -c1
            col[b] = col[b] + c
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))


def right_mul_matrix(a):
    """Matrix of x -> x*a on the blade basis."""
    dim = 1 << a.n
    zero, _one = _field_zero_one(a.ring)
    cols = []
    for b2 in range(dim):
        col = [zero] * dim
        for b1, c1 in a.terms.items():
            s, b = blade_mul(b2, b1, a.sig if a.sig is not None else a.n)
            c = c1 if s > 0 else -c1
            col[b] = col[b] + c
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))


def coords_vector(a):
    """Dense coordinate column of a on the blade basis."""
    dim = 1 << a.n
    zero, _one = _field_zero_one(a.ring)
    return tuple(a.terms.get(b, zero) for b in range(dim))


def from_coords(model, coords):
    """Multivector in the same space as ``model`` from dense coordinates."""
    terms = {b: c for b, c in enumerate(coords) if c}
    if model.is_complex:
        return Multivector.complex_alg(model.n, terms)
    return Multivector.real(model.sig, terms)


def invert(a):
    """Exact inverse via the left regular representation; None if singular."""
    from . import linalg

    dim = 1 << a.n
    _zero, one = _field_zero_one(a.ring)
    L = left_mul_matrix(a)
    e0 = [one - one] * dim
    e0[0] = one
    x = linalg.solve(L, e0)
    if x is None:
        return None
    inv_mv = from_coords(a, x)
    # solve() gives a right inverse; in a finite-dimensional algebra a
    # one-sided inverse is two-sided, but check anyway
    unit_mv = from_coords(a, e0)
    if a * inv_mv != unit_mv or inv_mv * a != unit_mv:
        return None
    return inv_mv


# ---------------------------------------------------------------------------
# JSON interface

def multivector_to_json(a):
    ring = a.ring
    doc = {"ring": ring}
    if a.is_complex:
        doc["complex_dim"] = a.n
    else:
        doc["signature"] = [a.sig.p, a.sig.q]
    doc["terms"] = [
        {"blade": blade_indices(b), "coeff": format_scalar(ring, a.terms[b])}
        for b in sorted(a.terms, key=lambda x: (x.bit_count(), x))
    ]
    return doc


def multivector_from_json(doc):
    ring = doc.get("ring", RATIONAL)
    terms = {}
    for t in doc.get("terms", []):
        b = blade_from_indices(t["blade"])
        c = parse_scalar(ring, t["coeff"])
        terms[b] = terms.get(b, 0) + c if b in terms else c
    if "signature" in doc:
        p, q = doc["signature"]
        if ring != RATIONAL:
            raise ValueError("real multivectors use the rational ring")
        return Multivector.real(Signature(p, q), terms)
    if "complex_dim" in doc:
        if ring != GAUSSIAN:
            raise ValueError("complex multivectors use the gaussian ring")
        return Multivector.complex_alg(doc["complex_dim"], terms)
    raise ValueError("multivector JSON needs 'signature' or 'complex_dim'")
