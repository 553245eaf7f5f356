"""Text grammars: field descriptors, field elements, symbol products, forms.

Descriptors:  GF(p) | GF(p^n) | GF(p^n; m(z)) [ (t) | ((t)) ]
Elements:     arithmetic over integers and the names z (field generator) and
              t (function-field variable), with + - * / ^ and parentheses.
Symbols:      [alpha,beta) joined by * for tensor products.
Forms:        [a,b] blocks and <c1,...,ct> diagonals joined by +.

When GF(p^n) is written without a modulus the lexicographically first monic
irreducible polynomial of degree n over F_p is used; this is computed by
enumeration, not looked up, so the choice is reproducible from the rules
alone.  Everything parses to exact objects; errors carry column positions.
"""

from __future__ import annotations

import re

from .errors import ParseError, UnsupportedFieldError
from .gf import GF, is_prime
from .ratfunc import FunctionField

_TOKEN_RE = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|-|/|\(|\)|\[|\]|<|>|,|;)")


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                if text[pos:].strip() == "":
                    break
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            self.toks.append((m.group(1), m.start(1)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, tok):
        if self.peek() != tok:
            raise ParseError(f"expected {tok!r}, found {self.peek()!r}", self.pos())
        return self.next()

    def done(self):
        return self.i >= len(self.toks)


# ---------------------------------------------------------------------------
# field descriptors

def _first_irreducible(p, n):
    # smallest monic degree-n polynomial over F_p that is irreducible, in the
    # base-p ordering of the non-leading coefficients
    from .gf import poly_is_irreducible
    for code in range(p ** n):
        coeffs = []
        c = code
        for _ in range(n):
            coeffs.append(c % p)
            c //= p
        m = tuple(coeffs) + (1,)
        if poly_is_irreducible(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")


def parse_field(text):
    ts = _Tokens(text)
    ts.expect("GF")
    ts.expect("(")
    ptok = ts.next()
    if ptok is None or not ptok.isdigit():
        raise ParseError("expected a prime", ts.pos())
    p = int(ptok)
    n = 1
    if ts.peek() == "^":
        ts.next()
        ntok = ts.next()
        if ntok is None or not ntok.isdigit():
            raise ParseError("expected an integer degree", ts.pos())
        n = int(ntok)
    if not is_prime(p):
        # tolerate GF(q) with q = p^n written as a plain prime power
        q = p
        p = None
        for cand in range(2, q + 1):
            if is_prime(cand):
                nn = 0
                m = q
                while m % cand == 0:
                    m //= cand
                    nn += 1
                if m == 1:
                    p, n = cand, nn
                    break
        if p is None:
            raise ParseError(f"{q} is not a prime power", ts.pos())
    modulus = None
    if ts.peek() == ";":
        ts.next()
        coeffs = _parse_fp_poly(ts, p, "z")
        modulus = coeffs
    ts.expect(")")
    if modulus is None and n > 1:
        modulus = _first_irreducible(p, n)
    base = GF(p, modulus)
    if ts.done():
        return base
    ts.expect("(")
    local = False
    if ts.peek() == "(":
        ts.next()
        local = True
    var = ts.next()
    if var is None or not var.isalpha():
        raise ParseError("expected a variable name", ts.pos())
    ts.expect(")")
    if local:
        ts.expect(")")
    if not ts.done():
        raise ParseError("trailing input after field descriptor", ts.pos())
    return FunctionField(base, var, local=local)


def _parse_fp_poly(ts, p, var):
    """Dense coefficient tuple of a polynomial in `var` over F_p."""
    coeffs = {}
    sign = 1
    while True:
        c = 1
        deg = 0
        got = False
        if ts.peek() is not None and ts.peek().isdigit():
            c = int(ts.next())
            got = True
        if ts.peek() == var:
            ts.next()
            deg = 1
            got = True
            if ts.peek() == "^":
                ts.next()
                deg = int(ts.next())
        elif ts.peek() == "*":
            ts.next()
            ts.expect(var)
            deg = 1
            got = True
            if ts.peek() == "^":
                ts.next()
                deg = int(ts.next())
        if not got:
            raise ParseError("expected a polynomial term", ts.pos())
        coeffs[deg] = (coeffs.get(deg, 0) + sign * c) % p
        if ts.peek() == "+":
            ts.next()
            sign = 1
        elif ts.peek() == "-":
            ts.next()
            sign = -1
        else:
            break
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return tuple(out)


# ---------------------------------------------------------------------------
# elements

def _atom(ts, field):
    tok = ts.peek()
    if tok == "(":
        ts.next()
        v = _expr(ts, field)
        ts.expect(")")
        return v
    if tok == "-":
        ts.next()
        return -_power(ts, field)
    if tok is None:
        raise ParseError("unexpected end of input", ts.pos())
    if tok.isdigit():
        ts.next()
        return field.from_int(int(tok))
    if tok.isidentifier():
        ts.next()
        if isinstance(field, FunctionField):
            if tok == field.varname:
                return field.t
            if tok == field.base.genname:
                if field.base.n == 1:
                    raise ParseError(f"{tok!r} is not defined over a prime base field", ts.pos())
                return field.from_base(field.base.gen())
        else:
            if tok == field.genname:
                if field.n == 1:
                    raise ParseError(f"{tok!r} is not defined over a prime field", ts.pos())
                return field.gen()
        raise ParseError(f"unknown name {tok!r} in this field", ts.pos())
    raise ParseError(f"unexpected token {tok!r}", ts.pos())


def _power(ts, field):
    v = _atom(ts, field)
    if ts.peek() == "^":
        ts.next()
        etok = ts.next()
        if etok is None or not etok.isdigit():
            raise ParseError("expected an integer exponent", ts.pos())
        return v ** int(etok)
    return v


def _term(ts, field):
    v = _power(ts, field)
    while ts.peek() in ("*", "/"):
        op = ts.next()
        w = _power(ts, field)
        v = v * w if op == "*" else v / w
    return v


def _expr(ts, field):
    neg = False
    if ts.peek() == "-":
        ts.next()
        neg = True
    v = _term(ts, field)
    if neg:
        v = -v
    while ts.peek() in ("+", "-"):
        op = ts.next()
        w = _term(ts, field)
        v = v + w if op == "+" else v - w
    return v


def parse_element(text, field):
    ts = _Tokens(text)
    v = _expr(ts, field)
    if not ts.done():
        raise ParseError("trailing input after element", ts.pos())
    return v


# ---------------------------------------------------------------------------
# symbol products and quadratic forms

def parse_symbol_product(text, field):
    from .algebra import SymbolAlgebra
    from .rewrite import presentation
    ts = _Tokens(text)
    factors = []
    while True:
        ts.expect("[")
        alpha = _expr(ts, field)
        ts.expect(",")
        beta = _expr(ts, field)
        ts.expect(")")
        factors.append(SymbolAlgebra(alpha, beta))
        if ts.peek() == "*":
            ts.next()
            continue
        break
    if not ts.done():
        raise ParseError("trailing input after symbol product", ts.pos())
    return presentation(factors)


def parse_quadratic_form(text, field):
    from .quadform import QuadraticForm
    ts = _Tokens(text)
    pairs = []
    diagonal = []
    scale = None
    while True:
        # optional scalar factor: c*[a,b]
        if ts.peek() not in ("[", "<"):
            scale = _power(ts, field)
            ts.expect("*")
        if ts.peek() == "[":
            ts.next()
            a = _expr(ts, field)
            ts.expect(",")
            b = _expr(ts, field)
            ts.expect("]")
            if scale is not None:
                from .quadform import scale_pair
                a, b = scale_pair(scale, (a, b))
                scale = None
            pairs.append((a, b))
        elif ts.peek() == "<":
            ts.next()
            while True:
                diagonal.append(_expr(ts, field))
                if ts.peek() == ",":
                    ts.next()
                    continue
                break
            ts.expect(">")
        else:
            raise ParseError("expected a [a,b] block or <...> diagonal", ts.pos())
        if ts.peek() == "+":
            ts.next()
            continue
        break
    if not ts.done():
        raise ParseError("trailing input after quadratic form", ts.pos())
    return QuadraticForm(field, pairs, diagonal)
