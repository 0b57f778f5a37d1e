"""Classification and compilation onto matrix rings.

The exact generator matrices asserted here were checked by hand against the
standard low-dimensional models (Pauli and quaternion blocks).
"""

from fractions import Fraction

import pytest

from cliffkit import linalg
from cliffkit.algebra import Signature
from cliffkit.reprs import (
    TargetRing,
    base_rep,
    classify,
    compile_complex_rep,
    compile_rep,
    double_rep,
    even_subring_rep,
    factor_projections,
    quaternion_complexify,
    quaternion_to_complex_block,
    real_irrep_dim,
    rep_equivalence,
    rep_from_json,
    rep_to_json,
    signature_shift,
    solve_intertwiner,
)
from cliffkit.scalars import GAUSSIAN, GaussianRational, Quaternion

F0, F1 = Fraction(0), Fraction(1)
G0, G1, GI = GaussianRational(0), GaussianRational(1), GaussianRational(0, 1)
Q = Quaternion


def test_classify_table_spot_checks():
    assert classify(Signature(1, 3)) == TargetRing("MatH", 2)
    assert classify(Signature(3, 1)) == TargetRing("MatR", 4)
    assert classify(Signature(0, 3)) == TargetRing("MatH", 1, summands=2)
    assert classify(Signature(2, 0)) == TargetRing("MatR", 2)
    assert classify(Signature(1, 1)) == TargetRing("MatR", 2)
    assert classify(Signature(0, 1)) == TargetRing("MatC", 1)
    assert classify(Signature(1, 0)) == TargetRing("MatR", 1, summands=2)
    assert classify(Signature(8, 0)) == TargetRing("MatR", 16)
    assert classify(Signature(0, 8)) == TargetRing("MatR", 16)
    assert classify(Signature(5, 0)) == TargetRing("MatH", 2, summands=2)
    assert classify(Signature(0, 5)) == TargetRing("MatC", 4)


def test_classify_depends_on_defect_mod_8():
    for n in range(9):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            t = classify(sig)
            # total real dimension of the target always equals 2^n
            assert t.real_dim == 1 << n


def test_base_reps_verify():
    for p, q in [(0, 0), (1, 0), (0, 1), (0, 2), (1, 1), (2, 0), (0, 3)]:
        rep = base_rep(Signature(p, q))
        assert rep.verify()
        assert rep.target == classify(Signature(p, q))
    with pytest.raises(ValueError):
        base_rep(Signature(3, 0))


def test_cl20_and_cl11_models():
    # Cl(2,0): sigma1, sigma3; Cl(1,1): sigma1, tau2
    r20 = compile_rep(Signature(2, 0))
    assert r20.gens[0] == ((F0, F1), (F1, F0))
    assert r20.gens[1] == ((F1, F0), (F0, -F1))
    r11 = compile_rep(Signature(1, 1))
    assert r11.gens[0] == ((F0, F1), (F1, F0))
    assert r11.gens[1] == ((F0, -F1), (F1, F0))


def test_cl13_quaternion_model_exact():
    rep = compile_rep(Signature(1, 3))
    assert rep.target == TargetRing("MatH", 2)
    q0, q1 = Q(0), Q(1)
    t1, t2 = Q(0, 1), Q(0, 0, 1)
    assert rep.gens[0] == ((q0, q1), (q1, q0))
    assert rep.gens[1] == ((q0, -q1), (q1, q0))
    assert rep.gens[2] == ((t1, q0), (q0, -t1))
    assert rep.gens[3] == ((t2, q0), (q0, -t2))
    assert rep.verify()


def test_cl31_real_model_exact():
    rep = compile_rep(Signature(3, 1))
    assert rep.target == TargetRing("MatR", 4)
    off_id = ((F0, F0, F1, F0), (F0, F0, F0, F1), (F1, F0, F0, F0), (F0, F1, F0, F0))
    off_neg = ((F0, F0, -F1, F0), (F0, F0, F0, -F1), (F1, F0, F0, F0), (F0, F1, F0, F0))
    s1_block = ((F0, F1, F0, F0), (F1, F0, F0, F0), (F0, F0, F0, -F1), (F0, F0, -F1, F0))
    s3_block = ((F1, F0, F0, F0), (F0, -F1, F0, F0), (F0, F0, -F1, F0), (F0, F0, F0, F1))
    assert rep.gens == (off_id, s1_block, s3_block, off_neg)
    assert rep.verify()


def test_compile_all_signatures_up_to_6():
    for n in range(7):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            rep = compile_rep(sig)
            assert rep.target == classify(sig)
            assert rep.verified


def test_double_rep_structure():
    r = compile_rep(Signature(0, 1))
    d = double_rep(r)
    assert d.sig == Signature(1, 2)
    assert d.target == TargetRing("MatC", 2)
    # generator order: v+ first, then v- and the old generator diag(i, -i)
    assert d.gens[0] == ((G0, G1), (G1, G0))
    assert d.gens[1] == ((G0, -G1), (G1, G0))
    assert d.gens[2] == ((GI, G0), (G0, -GI))
    assert d.verified
    with pytest.raises(ValueError):
        double_rep(compile_complex_rep(2))


def test_signature_shift_flip():
    sig = Signature(3, 1)
    new_sig, gen_map = signature_shift(sig, "flip")
    assert new_sig == Signature(2, 2)
    assert len(gen_map) == 4
    # substituted generators satisfy the shifted relations in the old algebra
    for i, w in enumerate(gen_map, start=1):
        sq = (w * w).scalar_part()
        assert sq == new_sig.square(i)
    for i in range(4):
        for j in range(i + 1, 4):
            assert gen_map[i] * gen_map[j] + gen_map[j] * gen_map[i] == gen_map[i] * 0


def test_signature_shift_mod4():
    sig = Signature(4, 0)
    new_sig, gen_map = signature_shift(sig, "mod4")
    assert new_sig == Signature(0, 4)
    for i, w in enumerate(gen_map, start=1):
        assert (w * w).scalar_part() == new_sig.square(i)
    with pytest.raises(ValueError):
        signature_shift(Signature(2, 2), "mod4")
    with pytest.raises(ValueError):
        signature_shift(Signature(0, 2), "flip")


def test_complex_models_hermitian():
    for n in (2, 4):
        rep = compile_complex_rep(n)
        assert rep.target == TargetRing("MatC", 1 << (n // 2))
        assert rep.verified
        for g in rep.gens:
            m = len(g)
            assert all(g[i][j] == g[j][i].conjugate() for i in range(m) for j in range(m))
    with pytest.raises(ValueError):
        compile_complex_rep(3)


def test_quaternion_block_embedding_is_homomorphism():
    x = Q(1, 2, -3, Fraction(1, 2))
    y = Q(0, -1, 1, 4)
    bx, by = quaternion_to_complex_block(x), quaternion_to_complex_block(y)
    assert linalg.mat_eq(quaternion_to_complex_block(x * y), linalg.matmul(bx, by))
    assert linalg.mat_eq(quaternion_to_complex_block(x + y), linalg.matadd(bx, by))


def test_cl13_complexified_equivalent_to_dirac():
    # gamma0 = diag(1, 1, -1, -1), gamma_j = [[0, -sigma_j], [sigma_j, 0]]
    s1 = ((G0, G1), (G1, G0))
    s2 = ((G0, -GI), (GI, G0))
    s3 = ((G1, G0), (G0, -G1))

    def gamma(s):
        rows = [(G0, G0) + tuple(-x for x in s[0]), (G0, G0) + tuple(-x for x in s[1])]
        rows += [tuple(s[0]) + (G0, G0), tuple(s[1]) + (G0, G0)]
        return tuple(rows)

    gamma0 = (
        (G1, G0, G0, G0), (G0, G1, G0, G0), (G0, G0, -G1, G0), (G0, G0, G0, -G1),
    )
    dirac = [gamma0, gamma(s1), gamma(s2), gamma(s3)]
    cx = quaternion_complexify(compile_rep(Signature(1, 3)))
    assert cx.target == TargetRing("MatC", 4)
    inter = solve_intertwiner(cx.gens, dirac, 4, GAUSSIAN)
    assert inter is not None
    for a, b in zip(cx.gens, dirac):
        lhs = linalg.matmul(linalg.matmul(inter.matrix, a), inter.inverse)
        assert linalg.mat_eq(lhs, b)


def test_real_irrep_dims():
    assert real_irrep_dim(Signature(1, 3)) == 8
    assert real_irrep_dim(Signature(3, 1)) == 4
    assert real_irrep_dim(Signature(2, 0)) == 2
    assert real_irrep_dim(Signature(0, 3)) == 4


def test_even_subring_derived_signatures():
    cases = {
        Signature(1, 1): Signature(1, 0),
        Signature(2, 0): Signature(0, 1),
        Signature(4, 0): Signature(0, 3),
        Signature(1, 3): Signature(3, 0),
        Signature(0, 2): Signature(0, 1),
        Signature(0, 4): Signature(0, 3),
    }
    for sig, want in cases.items():
        derived, gen_map, rep = even_subring_rep(sig)
        assert derived == want
        assert rep.verified
        assert len(gen_map) == sig.n - 1
        # every substituted generator is an even element of the ambient algebra
        for w in gen_map:
            assert all(b.bit_count() == 2 for b in w.terms)


def test_factor_projections_inequivalent():
    rep = compile_rep(Signature(0, 3))
    f1, f2 = factor_projections(rep)
    assert f1.target == TargetRing("MatH", 1)
    # the two factors differ by the grade involution and are not equivalent
    assert rep_equivalence(f1, f2) is None
    assert rep_equivalence(f1, f1) is not None
    with pytest.raises(ValueError):
        factor_projections(compile_rep(Signature(2, 0)))
    with pytest.raises(ValueError):
        rep_equivalence(rep, rep)


def test_rep_json_roundtrip():
    for sig in (Signature(1, 3), Signature(3, 1), Signature(0, 3)):
        rep = compile_rep(sig)
        back = rep_from_json(rep_to_json(rep))
        assert back.sig == sig and back.target == rep.target
        assert back.gens == rep.gens
    rep = compile_complex_rep(2)
    back = rep_from_json(rep_to_json(rep))
    assert back.complex_dim == 2 and back.gens == rep.gens
