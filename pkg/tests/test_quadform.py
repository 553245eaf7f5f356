"""Characteristic-2 quadratic forms: invariants, decompositions, linkage."""

import random

import pytest

from symbalg import (ArfClass, HypothesisGateError, PreconditionError,
                     QuadraticForm, SymbolAlgebra, UnsupportedFieldError, arf,
                     char2_common_slot, clifford, hyperbolic_plane, invariant,
                     is_isotropic, scale_pair, sharpness_witness,
                     total_invariant, trivialize_arf, witt_decompose)
from symbalg.quadform import blocks_of
from symbalg.rewrite import presentation
from symbalg.sampling import random_element, random_nonzero


def _random_form(rng, field, npairs, ndiag=0, degree=1):
    pairs = [(random_element(rng, field, degree), random_element(rng, field, degree))
             for _ in range(npairs)]
    diag = [random_element(rng, field, degree) for _ in range(ndiag)]
    return QuadraticForm(field, pairs, diag)


def _random_invertible(rng, field, n):
    # random row operations applied to the identity keep it invertible
    rows = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = random_element(rng, field)
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    rng.shuffle(rows)
    return rows


def test_evaluate_examples(F2):
    H = hyperbolic_plane(F2)
    assert H.evaluate([F2.one, F2.zero]).is_zero()
    q = QuadraticForm(F2, [(F2.one, F2.one)])
    assert q.evaluate([F2.one, F2.one]) == F2.one
    d = QuadraticForm(F2, [], [F2.one])
    assert d.evaluate([F2.one]) == F2.one
    with pytest.raises(PreconditionError):
        q.evaluate([F2.one])


def test_scale_pair_identities(F4, L2):
    g = F4.gen()
    assert scale_pair(F4.one, (g, F4.one)) == (g, F4.one)
    b = g + 1
    assert scale_pair(b ** -1, (g, b)) == (g * b, F4.one)
    # the substitution (u,v) -> (cu, v) realizes the isometry pointwise
    rng = random.Random(71)
    for _ in range(100):
        c = random_nonzero(rng, L2, 1)
        a, b = random_element(rng, L2, 1), random_element(rng, L2, 1)
        q = QuadraticForm(L2, [scale_pair(c, (a, b))])
        u, v = random_element(rng, L2, 1), random_element(rng, L2, 1)
        scaled_value = c * (a * u * u + u * v + b * v * v)
        assert q.evaluate([c * u, v]) == scaled_value


def test_is_isotropic_finite(F2, F4):
    H = hyperbolic_plane(F2)
    r = is_isotropic(H)
    assert r.status == "isotropic" and H.evaluate(r.witness).is_zero()
    q = QuadraticForm(F2, [(F2.one, F2.one)])
    assert is_isotropic(q).status == "anisotropic"
    # u(F_4) = 2: the only binary anisotropic shapes have ab outside wp(F_4)
    g = F4.gen()
    assert is_isotropic(QuadraticForm(F4, [(g, F4.one)])).status == "anisotropic"
    assert is_isotropic(QuadraticForm(F4, [(F4.one, F4.one)])).status == "isotropic"


def test_is_isotropic_local_norm_form(L2):
    t = L2.t
    q = QuadraticForm(L2, [(L2.one, L2.one), scale_pair(t, (L2.one, L2.one))])
    assert is_isotropic(q, 1).status == "anisotropic"
    # scaling the whole form cannot create zeros
    assert is_isotropic(q.scaled(t), 1).status == "anisotropic"


def test_is_isotropic_local_decisions(L2):
    t = L2.t
    # single block: ab in the local Artin-Schreier image
    q = QuadraticForm(L2, [(t + t ** 3, L2.one)])
    r = is_isotropic(q, 1)
    assert r.status == "isotropic"  # decided even though the zero is irrational
    # pair with different residue extensions
    q2 = QuadraticForm(L2, [(L2.one, L2.one), (L2.one / t, L2.one)])
    r2 = is_isotropic(q2, 1)
    assert r2.status == "isotropic"
    if r2.witness is not None:
        assert q2.evaluate(r2.witness).is_zero()
    # pair, same extension, ratio a norm: isotropic with witness
    q3 = QuadraticForm(L2, [(L2.one, L2.one), (L2.one, t ** 2)])
    r3 = is_isotropic(q3, 1)
    assert r3.status == "isotropic" and r3.witness is not None
    assert q3.evaluate(r3.witness).is_zero()


def test_is_isotropic_witnesses_verify(L2):
    rng = random.Random(72)
    found = 0
    for _ in range(40):
        q = _random_form(rng, L2, rng.randrange(1, 4))
        r = is_isotropic(q, 1)
        if r.witness is not None:
            assert any(not c.is_zero() for c in r.witness)
            assert q.evaluate(r.witness).is_zero()
            found += 1
    assert found > 10


def test_dims_above_u_always_isotropic_local(L2):
    rng = random.Random(73)
    for _ in range(12):
        q = _random_form(rng, L2, 3)  # dimension 6 > u = 4
        if not q.is_nonsingular():
            continue
        assert is_isotropic(q, 1).status == "isotropic"


def test_witt_examples(F2):
    H = hyperbolic_plane(F2)
    dec = witt_decompose(H.perp(H))
    assert dec.witt_index == 2 and dec.anisotropic_kernel.dim == 0
    q = QuadraticForm(F2, [(F2.zero, F2.one), (F2.one, F2.one)])
    dec = witt_decompose(q)
    assert dec.witt_index == 1 and dec.anisotropic_kernel.dim == 2
    assert arf(dec.anisotropic_kernel).representative == F2.one
    dec = witt_decompose(QuadraticForm(F2, [(F2.one, F2.one)]))
    assert dec.witt_index == 0


def test_witt_basis_change_records_isometry(F4):
    rng = random.Random(74)
    q = _random_form(rng, F4, 3)
    dec = witt_decompose(q)
    # the recorded rows evaluate to kernel | m x H in the stated order
    rows = dec.change_of_basis
    m = dec.witt_index
    for i in range(m):
        e, f = rows[2 * i], rows[2 * i + 1]
        assert q.evaluate(e).is_zero()
        assert q.evaluate(f) == F4.one


def test_witt_invariance_under_basis_change(F2, F4):
    rng = random.Random(75)
    for field, dims, bases in ((F2, (2, 3, 4), 12), (F4, (2, 3), 12)):
        for npairs in dims:
            q = _random_form(rng, field, npairs)
            dec0 = witt_decompose(q)
            a0 = arf(q)
            for _ in range(bases):
                rows = _random_invertible(rng, field, q.dim)
                q2 = q.transform(rows)
                if not q2.is_nonsingular():
                    continue
                dec2 = witt_decompose(q2)
                assert dec2.witt_index == dec0.witt_index
                assert dec2.anisotropic_kernel.dim == dec0.anisotropic_kernel.dim
                assert arf(q2) == a0


def test_arf_examples(F2, L2):
    assert arf(hyperbolic_plane(F2)).is_trivial()
    q = QuadraticForm(F2, [(F2.one, F2.one)])
    assert arf(q).representative == F2.one  # wp(F_2) = {0}
    assert arf(q.perp(hyperbolic_plane(F2))) == arf(q)
    with pytest.raises(PreconditionError):
        arf(QuadraticForm(F2, [], [F2.one]))
    # scaled blocks contribute a*b regardless of the scale
    t = L2.t
    q2 = QuadraticForm(L2, [(L2.one, L2.one), scale_pair(t, (L2.one, L2.one))])
    assert arf(q2).is_trivial()


def test_arf_additivity(F2, F4, L2):
    rng = random.Random(76)
    for field in (F2, F4, L2):
        for _ in range(60):
            q1 = _random_form(rng, field, rng.randrange(1, 3))
            q2 = _random_form(rng, field, rng.randrange(1, 3))
            assert arf(q1.perp(q2)) == arf(q1) + arf(q2)


def test_clifford_examples(F2, L2):
    t = L2.t
    # r = 2 formula
    a1, b1, a2, b2 = L2.one, L2.one, t, L2.one / t
    q = QuadraticForm(L2, [(a1, b1), (a2, b2)])
    if arf(q).is_trivial():
        E = clifford(q)
        assert E.factors[0] == SymbolAlgebra(a1 * b1, b2 * b1)
    # H | H: first slot zero, split
    hh = hyperbolic_plane(F2).perp(hyperbolic_plane(F2))
    E = clifford(hh)
    assert E.k == 1 and E.factors[0].alpha.is_zero()
    # norm-form-shaped input gives the ramified quaternion
    qn = QuadraticForm(L2, [(L2.one, L2.one), scale_pair(t, (L2.one, L2.one))])
    E = clifford(qn)
    assert total_invariant(E).value == 1


def test_clifford_gates(F2, L2):
    q = QuadraticForm(F2, [(F2.one, F2.one)])
    with pytest.raises(PreconditionError):
        clifford(q)  # nontrivial Arf
    with pytest.raises(PreconditionError):
        clifford(hyperbolic_plane(F2))  # dimension 2


def test_clifford_handles_degenerate_blocks(L2):
    t = L2.t
    # [a, 0] blocks are rebalanced before the formula applies
    q = QuadraticForm(L2, [(t, L2.zero), (L2.zero, L2.zero)])
    assert arf(q).is_trivial()
    E = clifford(q)
    assert all(not A.beta.is_zero() for A in E.factors)


def test_clifford_witt_class_invariance_local(L2):
    """Forms with the same anisotropic kernel and trivial Arf give
    Brauer-equal quaternion products (sampled through the oracle)."""
    t = L2.t
    base = QuadraticForm(L2, [(L2.one, L2.one), scale_pair(t, (L2.one, L2.one))])
    padded = base.perp(hyperbolic_plane(L2))
    e1 = total_invariant(clifford(base))
    e2 = total_invariant(clifford(padded))
    assert e1 == e2
    rng = random.Random(77)
    hits = 0
    for _ in range(25):
        q = _random_form(rng, L2, 2)
        if not q.is_nonsingular() or not arf(q).is_trivial():
            continue
        if any(b.is_zero() for _, b in q.pairs):
            continue
        hits += 1
        assert total_invariant(clifford(q.perp(hyperbolic_plane(L2)))) \
            == total_invariant(clifford(q))
    assert hits > 5


def test_trivialize_arf_shortcut_and_gates(L2, F2):
    t = L2.t
    q = QuadraticForm(L2, [(L2.one, L2.one), scale_pair(t, (L2.one, L2.one))])
    out = trivialize_arf(q, 1)
    assert out == q
    assert is_isotropic(out, 1).status == "anisotropic"
    assert arf(out).is_trivial()
    with pytest.raises(PreconditionError):
        trivialize_arf(hyperbolic_plane(L2).perp(hyperbolic_plane(L2)), 1)  # isotropic
    with pytest.raises(PreconditionError):
        trivialize_arf(QuadraticForm(F2, [(F2.one, F2.one)]), 1)  # dim 2 < 4


def test_blocks_of_roundtrip(F4):
    rng = random.Random(78)
    for _ in range(20):
        q = _random_form(rng, F4, 2, ndiag=1)
        blocks, rows = blocks_of(q)
        assert blocks.dim == q.dim
        for _ in range(20):
            coeffs = [random_element(rng, F4) for _ in range(q.dim)]
            vec = [F4.zero] * q.dim
            for c, r in zip(coeffs, rows):
                vec = [a + c * b for a, b in zip(vec, r)]
            assert q.evaluate(vec) == blocks.evaluate(coeffs)


def test_sharpness_witness_n2(L2):
    phi, E = sharpness_witness(2, L2, 1)
    assert phi.dim == 4
    assert arf(phi).is_trivial()
    assert is_isotropic(phi, 1).status == "anisotropic"
    assert total_invariant(E).value == 1  # class 1/2: length exactly 1 = u/2 - 1
    assert E.k == 1


def test_sharpness_witness_gates(L2, F2):
    with pytest.raises(PreconditionError):
        sharpness_witness(1, L2)
    with pytest.raises(UnsupportedFieldError):
        sharpness_witness(3, L2)  # would need u = 6
    with pytest.raises(UnsupportedFieldError):
        sharpness_witness(2, F2)  # u(F_2) = 2 != 4


def test_char2_common_slot_equal_products(L2):
    A = presentation([SymbolAlgebra(L2.one, L2.t)])
    side, A2, B2, _ = char2_common_slot(A, A, 1)
    assert side == "Left" and A2 == A and B2 == A


def test_char2_common_slot_split_factor(L2):
    A = presentation([SymbolAlgebra(L2.t, L2.one)])  # [a, 1): split
    B = presentation([SymbolAlgebra(L2.one, L2.t)])
    side, A2, B2, _ = char2_common_slot(A, B, 1)
    assert side == "Left"
    assert A2.factors[0].alpha == B2.factors[0].alpha


def test_char2_common_slot_boundary_random(L2):
    rng = random.Random(79)
    done = 0
    while done < 12:
        A = presentation([SymbolAlgebra(random_element(rng, L2, 1),
                                        random_nonzero(rng, L2, 1))])
        B = presentation([SymbolAlgebra(random_element(rng, L2, 1),
                                        random_nonzero(rng, L2, 1))])
        side, A2, B2, (trA, trB) = char2_common_slot(A, B, 1)
        if side == "Left":
            assert A2.factors[0].alpha == B2.factors[0].alpha
        else:
            assert A2.factors[0].beta == B2.factors[0].beta
        assert total_invariant(A2) == total_invariant(A)
        assert total_invariant(B2) == total_invariant(B)
        done += 1
