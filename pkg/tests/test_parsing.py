"""Grammar round trips and parse errors."""

import pytest

from symbalg import (GF, FunctionField, ParseError, parse_element, parse_field,
                     parse_quadratic_form, parse_symbol_product)


def test_parse_field_descriptors():
    f = parse_field("GF(2)")
    assert isinstance(f, GF) and f.q == 2
    f = parse_field("GF(3)")
    assert f.p == 3 and f.n == 1
    f = parse_field("GF(2^2; z^2+z+1)")
    assert f.q == 4 and f.modulus == (1, 1, 1)
    f = parse_field("GF(4)")
    assert f.q == 4  # first irreducible modulus chosen deterministically
    assert f.modulus == (1, 1, 1)
    f = parse_field("GF(9)")
    assert f.q == 9 and f.p == 3
    f = parse_field("GF(2)(t)")
    assert isinstance(f, FunctionField) and not f.is_local
    f = parse_field("GF(2)((t))")
    assert f.is_local
    f = parse_field("GF(2^2; z^2+z+1)((t))")
    assert f.is_local and f.base.q == 4


def test_parse_field_errors():
    for bad in ("GF(6)", "GF(2", "GF(2))", "GF(2)(t", "XF(2)"):
        with pytest.raises(ParseError):
            parse_field(bad)


def test_parse_element_basics():
    F4 = parse_field("GF(2^2; z^2+z+1)")
    g = F4.gen()
    assert parse_element("z", F4) == g
    assert parse_element("z^2", F4) == g + 1
    assert parse_element("z+1", F4) == g + 1
    assert parse_element("(z+1)*(z+1)", F4) == g
    assert parse_element("1/z", F4) == g.inverse()
    L = parse_field("GF(2)((t))")
    t = L.t
    assert parse_element("(t^2+1)/(t+1)", L) == t + 1
    assert parse_element("t^3+t+1", L) == t ** 3 + t + 1
    F3 = parse_field("GF(3)")
    assert parse_element("2*2", F3) == F3.one
    assert parse_element("-1", F3) == F3.element(2)


def test_parse_element_errors():
    F2 = parse_field("GF(2)")
    for bad in ("z", "t", "1+", "(1", "^2", "1//2"):
        with pytest.raises((ParseError, ZeroDivisionError)):
            parse_element(bad, F2)
    # error positions are reported as columns
    try:
        parse_element("1+%", F2)
    except ParseError as e:
        assert e.pos is not None


def test_parse_symbol_product():
    L = parse_field("GF(2)((t))")
    T = parse_symbol_product("[1,t)*[t,t+1)", L)
    assert T.k == 2
    assert T.factors[0].alpha == L.one and T.factors[0].beta == L.t
    assert T.factors[1].alpha == L.t and T.factors[1].beta == L.t + 1
    with pytest.raises(ParseError):
        parse_symbol_product("[1,t)*", L)
    with pytest.raises(ParseError):
        parse_symbol_product("[1,t]", L)


def test_parse_quadratic_form():
    L = parse_field("GF(2)((t))")
    q = parse_quadratic_form("[1,1]+t*[1,1]+<t,1>", L)
    assert len(q.pairs) == 2 and len(q.diagonal) == 2
    # the scaled block went through the scale identity
    assert q.pairs[1] == (L.one / L.t, L.t)
    q2 = parse_quadratic_form("[0,1]", L)
    assert q2.pairs == [(L.zero, L.one)]
    with pytest.raises(ParseError):
        parse_quadratic_form("[1,1", L)


def test_render_parse_roundtrip_presentation(L4):
    from symbalg.sampling import random_presentation
    from symbalg.serialize import presentation_from_json, presentation_to_json
    import random
    rng = random.Random(81)
    for _ in range(20):
        T = random_presentation(rng, L4, 2)
        obj = presentation_to_json(T)
        back = presentation_from_json(obj, L4)
        assert back == T
