"""Structure-constant core: products, certificates, zero divisors."""

import random

import pytest

from symbalg import (ArtinSchreierExtension, PreconditionError, SymbolAlgebra,
                     SymbolCertificate, TensorProduct, commute,
                     find_zero_divisor, invariant, subalgebra_dimension,
                     verify_symbol_pair)
from symbalg.algebra import (center_basis, centralizer_basis, embed_element,
                             inverse_or_zero_divisor)
from symbalg.sampling import random_element, random_symbol


def _random_sparse(rng, host, support=3):
    out = host.zero()
    idx = host.basis_indices()
    for _ in range(support):
        m = idx[rng.randrange(len(idx))]
        out = out + host.monomial(m, random_element(rng, host.field))
    return out


def test_defining_relations(F4):
    A = SymbolAlgebra(F4.gen(), F4.gen() + 1)
    T = A.tensor()
    x, y = T.x(), T.y()
    assert y * x == x * y + y
    assert x * x == x + F4.gen()
    assert y * y == T.scalar(F4.gen() + 1)


def test_p3_defining_relations(F3):
    A = SymbolAlgebra(F3.one, F3.element(2))
    T = A.tensor()
    x, y = T.x(), T.y()
    assert y * x == x * y + y
    assert x ** 3 == x + F3.one
    assert y ** 3 == T.scalar(F3.element(2))


def test_lemma_style_sum_generator(F4):
    # p=2: (x+y)^2 = (x+y) + (alpha+beta)
    alpha, beta = F4.gen(), F4.one
    T = SymbolAlgebra(alpha, beta).tensor()
    z = T.x() + T.y()
    assert z * z == z + T.scalar(alpha + beta)


def test_multiply_associative_random(F4, F3):
    rng = random.Random(21)
    for field, p in ((F4, 2), (F3, 3)):
        for k in (1, 2):
            host = TensorProduct([random_symbol(rng, field) for _ in range(k)])
            for _ in range(1000):
                a = _random_sparse(rng, host)
                b = _random_sparse(rng, host)
                c = _random_sparse(rng, host)
                assert (a * b) * c == a * (b * c)


def test_verify_symbol_pair_defining(F4, F3, L2):
    rng = random.Random(22)
    for field in (F4, F3, L2):
        for _ in range(10):
            A = random_symbol(rng, field, 1)
            T = A.tensor()
            assert verify_symbol_pair(SymbolCertificate(T.x(), T.y(), A.alpha, A.beta))


def test_verify_symbol_pair_two_factor_sum(F4):
    A = SymbolAlgebra(F4.gen(), F4.one)
    B = SymbolAlgebra(F4.one, F4.gen())
    T = TensorProduct([A, B])
    cert = SymbolCertificate(T.x(0) + T.x(1), T.y(0), A.alpha + B.alpha, A.beta)
    assert verify_symbol_pair(cert)


def test_verify_symbol_pair_rejects_wrong_beta(F4):
    A = SymbolAlgebra(F4.gen(), F4.one)
    T = A.tensor()
    rep = verify_symbol_pair(SymbolCertificate(T.x(), T.y(), A.alpha, A.beta + F4.gen()))
    assert not rep
    assert "Y^p" in rep.failed


def test_subalgebra_dimensions(F4, F3):
    for field in (F4, F3):
        A = random_symbol(random.Random(23), field)
        T = A.tensor()
        assert subalgebra_dimension([T.one()]) == 1
        assert subalgebra_dimension([T.x(), T.y()]) == field.p ** 2
        assert subalgebra_dimension([T.x()]) == field.p


def test_subalgebra_dimension_two_factor_pair(F2):
    # {x1+x2, y1} in a two-factor p=2 product spans a 4-dimensional algebra
    A = SymbolAlgebra(F2.one, F2.one)
    B = SymbolAlgebra(F2.zero + F2.one, F2.one)
    T = TensorProduct([A, B])
    assert subalgebra_dimension([T.x(0) + T.x(1), T.y(0)]) == 4


def test_commute_examples(F4):
    A = SymbolAlgebra(F4.gen(), F4.one)
    B = SymbolAlgebra(F4.one, F4.gen())
    T = TensorProduct([A, B])
    assert commute(T.x(0) + T.x(1), T.x(1))
    assert not commute(T.x(0), T.y(0))
    st, yinv = inverse_or_zero_divisor(T.y(0))
    assert st == "inv"
    w = yinv * T.y(1)
    assert commute(T.y(0), w)


def test_center_is_scalars(F4, F3):
    # K a field: alpha outside wp(F)
    A = SymbolAlgebra(F4.gen(), F4.gen())
    assert len(center_basis(A.tensor())) == 1
    B = SymbolAlgebra(F3.one, F3.element(2))
    assert len(center_basis(B.tensor())) == 1
    # also holds in the split case (still a central simple algebra)
    C = SymbolAlgebra(F4.one, F4.gen())
    assert len(center_basis(C.tensor())) == 1


def test_lemma_two_a_quadruple(F4):
    A = SymbolAlgebra(F4.gen(), F4.one + F4.gen())
    B = SymbolAlgebra(F4.one, F4.gen())
    T = TensorProduct([A, B])
    X1, Y1 = T.x(0) + T.x(1), T.y(0)
    _, yinv = inverse_or_zero_divisor(T.y(0))
    X2, Y2 = T.x(1), yinv * T.y(1)
    assert verify_symbol_pair(SymbolCertificate(X1, Y1, A.alpha + B.alpha, A.beta))
    assert verify_symbol_pair(SymbolCertificate(X2, Y2, B.alpha, B.beta / A.beta))
    for u in (X1, Y1):
        for v in (X2, Y2):
            assert commute(u, v)
    assert subalgebra_dimension([X1, Y1]) * subalgebra_dimension([X2, Y2]) == 16


def test_centralizer_dimension(F3):
    A = SymbolAlgebra(F3.one, F3.element(2))
    B = SymbolAlgebra(F3.element(2), F3.one)
    T = TensorProduct([A, B])
    X, Y = T.x(0) + T.x(1), T.y(0) + T.y(1)
    cb = centralizer_basis(T, [X, Y])
    assert len(cb) == 9
    for c in cb:
        assert commute(c, X) and commute(c, Y)


def test_zero_divisor_split_presentations(F4):
    # [0, beta) and [alpha, 1) are matrix algebras; witnesses verify
    for A in (SymbolAlgebra(F4.zero, F4.gen()), SymbolAlgebra(F4.gen(), F4.one)):
        w = find_zero_divisor(A)
        assert w is not None and not w.is_zero()
        assert inverse_or_zero_divisor(w)[0] == "zerodiv"


def test_zero_divisor_all_finite_algebras_split(F4, F3):
    rng = random.Random(24)
    for field in (F4, F3):
        for _ in range(12):
            A = random_symbol(rng, field)
            w = find_zero_divisor(A)
            assert w is not None
            assert inverse_or_zero_divisor(w)[0] == "zerodiv"


def test_zero_divisor_budget_exhausted_on_division_algebra(L2):
    A = SymbolAlgebra(L2.one, L2.t)
    assert find_zero_divisor(A, budget=1) is None
    # cross-check: the residue oracle says nonsplit
    assert invariant(A).value == 1


def test_zero_divisor_found_on_split_local(L2):
    # [t, t) has invariant 0; a rational norm witness exists (N(x) = t)
    A = SymbolAlgebra(L2.t, L2.t)
    assert invariant(A).value == 0
    w = find_zero_divisor(A, budget=1)
    assert w is not None
    assert inverse_or_zero_divisor(w)[0] == "zerodiv"


def test_host_dimension_cap(F2):
    factors = [SymbolAlgebra(F2.one, F2.one) for _ in range(7)]
    T = TensorProduct(factors)
    assert T.dimension == 2 ** 14
    with pytest.raises(PreconditionError):
        T.one()


def test_embed_element_preserves_relations(F4):
    A = SymbolAlgebra(F4.gen(), F4.one)
    B = SymbolAlgebra(F4.one, F4.gen())
    C = SymbolAlgebra(F4.gen() + 1, F4.gen())
    small = TensorProduct([A, B])
    big = TensorProduct([A, C, B])
    a = small.x(0) + small.y(1)
    b = small.y(0) * small.x(1)
    emb = lambda e: embed_element(e, big, [0, 2])
    assert emb(a * b) == emb(a) * emb(b)
    assert emb(a + b) == emb(a) + emb(b)
