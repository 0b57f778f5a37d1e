"""Finite Cech machinery over Z2 and the Pin-lift obstruction.

Complexes are finite simplicial complexes with simplices of dimension at
most 3.  Cochains and coboundaries are over Z2 (rows are int bitmasks, so
elimination is xor).  A matrix-valued cocycle on the edges lifts to versors
edge by edge; the triangle discrepancies form a Z2 2-cocycle, and the lift
extends to a genuine Pin-valued cocycle exactly when that class vanishes,
in which case the number of inequivalent lifts is 2^dim H^1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Signature
from .groups import PseudoOrthogonalMatrix, Versor, lift_to_pin, zeta


# ---------------------------------------------------------------------------
# GF(2) linear algebra on int bitmask rows

def gf2_rref(rows, ncols):
    """Reduced echelon form; returns (rows, pivot columns).

    Rows may carry extra high bits (augmented columns) beyond ncols; those
    are xored along but never pivoted on.
    """
    rows = [r for r in rows if r]
    pivots = []
    out = []
    for c in range(ncols):
        pr = None
        for idx, r in enumerate(rows):
            if (r >> c) & 1:
                pr = idx
                break
        if pr is None:
            continue
        piv = rows.pop(pr)
        out = [r ^ piv if (r >> c) & 1 else r for r in out]
        rows = [r ^ piv if (r >> c) & 1 else r for r in rows]
        out.append(piv)
        pivots.append(c)
    out.extend(r for r in rows if r)
    return out, pivots


def gf2_rank(rows, ncols):
    return len(gf2_rref(rows, ncols)[1])


def gf2_solve(rows, rhs, ncols):
    """Solve (rows) x = rhs over GF(2); returns solution bitmask or None."""
    aug = [r | (b << ncols) for r, b in zip(rows, rhs)]
    red, pivots = gf2_rref(aug, ncols)
    mask = (1 << ncols) - 1
    sol = 0
    for row in red[len(pivots):]:
        if row >> ncols:
            return None
    for row, c in zip(red, pivots):
        if row >> ncols:
            sol |= 1 << c
    return sol


def gf2_nullspace(rows, ncols):
    red, pivots = gf2_rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = 1 << fc
        for row, c in zip(red, pivots):
            if (row >> fc) & 1:
                v |= 1 << c
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# simplicial complexes

@dataclass(frozen=True)
class Complex:
    vertices: int
    edges: tuple
    triangles: tuple
    tetrahedra: tuple

    @classmethod
    def build(cls, vertices, edges=(), triangles=(), tetrahedra=()):
        def norm(simplices, k):
            out = []
            for s in simplices:
                t = tuple(sorted(s))
                if len(t) != k + 1 or len(set(t)) != k + 1:
                    raise ValueError(f"bad {k}-simplex {s}")
                if t[0] < 0 or t[-1] >= vertices:
                    raise ValueError(f"vertex out of range in {s}")
                out.append(t)
            out = sorted(set(out))
            return tuple(out)

        edges = norm(edges, 1)
        triangles = norm(triangles, 2)
        tetrahedra = norm(tetrahedra, 3)
        edge_set = set(edges)
        for t in triangles:
            for f in _faces(t):
                if f not in edge_set:
                    raise ValueError(f"triangle {t} has a missing edge {f}")
        tri_set = set(triangles)
        for s in tetrahedra:
            for f in _faces(s):
                if f not in tri_set:
                    raise ValueError(f"tetrahedron {s} has a missing face {f}")
        return cls(vertices, edges, triangles, tetrahedra)

    def simplices(self, k):
        if k == 0:
            return tuple((v,) for v in range(self.vertices))
        return (self.edges, self.triangles, self.tetrahedra)[k - 1]

    def to_json(self):
        doc = {"vertices": self.vertices, "simplices": {}}
        for k, name in ((1, "1"), (2, "2"), (3, "3")):
            s = self.simplices(k)
            if s:
                doc["simplices"][name] = [list(x) for x in s]
        return doc

    @classmethod
    def from_json(cls, doc):
        s = doc.get("simplices", {})
        return cls.build(
            doc["vertices"],
            edges=s.get("1", ()),
            triangles=s.get("2", ()),
            tetrahedra=s.get("3", ()),
        )


def _faces(simplex):
    return tuple(
        tuple(v for j, v in enumerate(simplex) if j != i)
        for i in range(len(simplex))
    )


def coboundary_matrix(c: Complex, k: int):
    """Rows indexed by (k+1)-simplices, columns by k-simplices (bitmasks)."""
    lower = c.simplices(k)
    upper = c.simplices(k + 1)
    index = {s: i for i, s in enumerate(lower)}
    rows = []
    for s in upper:
        bits = 0
        for f in _faces(s):
            bits |= 1 << index[f]
        rows.append(bits)
    return rows, len(lower)


def z2_betti(c: Complex, k: int) -> int:
    """dim H^k(c; Z2) = dim ker(delta_k) - rank(delta_{k-1})."""
    if not 0 <= k <= 3:
        raise ValueError("cohomology degree out of range")
    n_k = len(c.simplices(k))
    up_rows, _ = coboundary_matrix(c, k) if k < 3 else ([], 0)
    rank_up = gf2_rank(up_rows, n_k)
    if k == 0:
        rank_down = 0
    else:
        down_rows, _ = coboundary_matrix(c, k - 1)
        rank_down = gf2_rank(down_rows, len(c.simplices(k - 1)))
    return (n_k - rank_up) - rank_down


@dataclass(frozen=True)
class Z2Cochain:
    """Z2 k-cochain: value per k-simplex."""

    complex: Complex
    degree: int
    values: dict

    def bit(self, simplex):
        return self.values.get(tuple(sorted(simplex)), 0)

    def is_zero(self):
        return not any(self.values.values())

    def coboundary(self):
        upper = self.complex.simplices(self.degree + 1)
        out = {}
        for s in upper:
            v = 0
            for f in _faces(s):
                v ^= self.bit(f)
            if v:
                out[s] = 1
        return Z2Cochain(self.complex, self.degree + 1, out)

    def is_coboundary(self):
        """Whether this cochain is delta of a (k-1)-cochain."""
        lower = self.complex.simplices(self.degree - 1)
        own = self.complex.simplices(self.degree)
        rows = []
        index = {s: i for i, s in enumerate(lower)}
        for s in own:
            bits = 0
            for f in _faces(s):
                bits |= 1 << index[f]
            rows.append(bits)
        # transpose the usual orientation: unknown lives on (k-1)-simplices
        rhs = [self.bit(s) for s in own]
        return gf2_solve(rows, rhs, len(lower)) is not None


# ---------------------------------------------------------------------------
# matrix-valued cocycles

@dataclass(frozen=True)
class GroupCocycle:
    """Pseudo-orthogonal matrices on the edges, g_ij for i < j."""

    complex: Complex
    sig: Signature
    edges: dict

    @classmethod
    def build(cls, complex_, sig, edges):
        clean = {}
        for e, m in edges.items():
            e = tuple(sorted(e))
            if e not in set(complex_.edges):
                raise ValueError(f"matrix given for a non-edge {e}")
            if not isinstance(m, PseudoOrthogonalMatrix):
                m = PseudoOrthogonalMatrix(sig, m)
            if m.sig != sig:
                raise ValueError("matrix signature mismatch")
            clean[e] = m
        missing = set(complex_.edges) - set(clean)
        if missing:
            raise ValueError(f"edges without matrices: {sorted(missing)}")
        return cls(complex_, sig, clean)

    def to_json(self):
        return {
            "complex": self.complex.to_json(),
            "signature": [self.sig.p, self.sig.q],
            "edges": [
                {"e": list(e), "matrix": self.edges[e].to_json()["matrix"]}
                for e in self.complex.edges
            ],
        }

    @classmethod
    def from_json(cls, doc):
        complex_ = Complex.from_json(doc["complex"])
        sig = Signature(*doc["signature"])
        edges = {}
        for item in doc["edges"]:
            e = tuple(item["e"])
            edges[e] = PseudoOrthogonalMatrix.from_json(item["matrix"], sig=sig)
        return cls.build(complex_, sig, edges)


def check_cocycle(coc: GroupCocycle):
    """g_ij g_jk = g_ik on every triangle; returns (ok, failing triangle)."""
    for t in coc.complex.triangles:
        i, j, k = t
        if coc.edges[(i, j)] * coc.edges[(j, k)] != coc.edges[(i, k)]:
            return False, t
    return True, None


def subgroup_reduction_check(coc: GroupCocycle, h: dict, member):
    """Whether h_i^-1 g_ij h_j lands in a subgroup on every edge.

    ``h`` maps each vertex to a PseudoOrthogonalMatrix and ``member`` is the
    subgroup membership predicate.  Returns (ok, witness edge or None).
    """
    for v in range(coc.complex.vertices):
        if v not in h:
            raise ValueError(f"missing 0-cochain value at vertex {v}")
    for e in coc.complex.edges:
        i, j = e
        conj = h[i].inverse() * coc.edges[e] * h[j]
        if not member(conj):
            return False, e
    return True, None


def canonical_sign(v: Versor) -> Versor:
    """Normalize so the lowest-blade nonzero coefficient is positive."""
    if not v.product:
        raise AssertionError("versor product is zero")
    lead = min(v.product.terms)
    if v.product.terms[lead] < 0:
        return v.negated()
    return v


@dataclass
class PinLiftResult:
    success: bool
    lifts: dict
    discrepancy: Z2Cochain
    lift_count: int
    obstruction_nonzero: bool


def pin_lift_cocycle(coc: GroupCocycle) -> PinLiftResult:
    """Lift an O(p,q)-valued cocycle through zeta, edge by edge.

    Each edge matrix is lifted to a sign-normalized versor; the triangle
    products then differ from the lifted third edge by a nonzero scalar whose
    sign is the Z2 discrepancy cocycle w.  If w = delta eta for some edge
    cochain eta, resigning by eta yields a consistent Pin-valued cocycle and
    2^dim H^1 inequivalent lifts; otherwise the obstruction class in H^2 is
    nonzero and no lift exists.
    """
    c = coc.complex
    sig = coc.sig
    if sig.n % 2:
        raise ValueError("pin lifting is supported for even n only")
    raw = {e: canonical_sign(lift_to_pin(coc.edges[e])) for e in c.edges}
    w_values = {}
    for t in c.triangles:
        i, j, k = t
        prod = raw[(i, j)].product * raw[(j, k)].product * raw[(i, k)].inverse_mv()
        if not prod.is_scalar():
            raise AssertionError("triangle discrepancy is not scalar")
        s = prod.scalar_part()
        if s == 0:
            raise AssertionError("triangle discrepancy is zero")
        if s < 0:
            w_values[t] = 1
    w = Z2Cochain(c, 2, w_values)
    if not w.coboundary().is_zero():
        raise AssertionError("discrepancy is not a 2-cocycle")
    edge_index = {e: i for i, e in enumerate(c.edges)}
    rows = []
    rhs = []
    for t in c.triangles:
        bits = 0
        for f in _faces(t):
            bits |= 1 << edge_index[f]
        rows.append(bits)
        rhs.append(w.bit(t))
    eta = gf2_solve(rows, rhs, len(c.edges))
    if eta is None:
        return PinLiftResult(False, {}, w, 0, True)
    lifts = {}
    for e in c.edges:
        v = raw[e]
        if (eta >> edge_index[e]) & 1:
            v = v.negated()
        lifts[e] = v
    for t in c.triangles:
        i, j, k = t
        prod = lifts[(i, j)].product * lifts[(j, k)].product * lifts[(i, k)].inverse_mv()
        if not (prod.is_scalar() and prod.scalar_part() > 0):
            raise AssertionError("sign correction failed on a triangle")
    count = 1 << z2_betti(c, 1)
    return PinLiftResult(True, lifts, w, count, False)


# ---------------------------------------------------------------------------
# standard complexes used in tests and demos

def filled_triangle() -> Complex:
    return Complex.build(3, edges=[(0, 1), (0, 2), (1, 2)], triangles=[(0, 1, 2)])


def tetrahedron_boundary() -> Complex:
    verts = range(4)
    edges = [(i, j) for i in verts for j in verts if i < j]
    tris = [(i, j, k) for i in verts for j in verts for k in verts if i < j < k]
    return Complex.build(4, edges=edges, triangles=tris)


def projective_plane() -> Complex:
    """Six-vertex triangulation of the real projective plane."""
    tris = [
        (0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 5), (0, 4, 5),
        (1, 2, 4), (1, 2, 5), (1, 3, 5), (2, 3, 4), (3, 4, 5),
    ]
    edges = sorted({(a, b) for t in tris for a in t for b in t if a < b})
    return Complex.build(6, edges=edges, triangles=tris)


def nontrivial_1cocycle(c: Complex):
    """A Z2 1-cocycle that is not a coboundary, as a Z2Cochain, or None."""
    rows, ncols = coboundary_matrix(c, 1)
    kernel = gf2_nullspace(rows, ncols)
    # delta_0 with the unknown on vertices: one row per edge
    vert_rows = [(1 << e[0]) | (1 << e[1]) for e in c.edges]
    for v in kernel:
        rhs = [(v >> i) & 1 for i in range(ncols)]
        if gf2_solve(vert_rows, rhs, c.vertices) is None:
            values = {e: 1 for i, e in enumerate(c.edges) if (v >> i) & 1}
            return Z2Cochain(c, 1, values)
    return None
