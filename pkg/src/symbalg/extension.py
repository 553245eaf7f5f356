"""Degree-p Artin-Schreier extensions K = F[x : x^p - x = alpha].

Elements are polynomials in x of degree < p over the base field; arithmetic
reduces through x^p = x + alpha.  When alpha lies in the image of the
Artin-Schreier operator, K is not a field but a split etale algebra; all the
operations here, in particular the conjugate-product norm, remain defined.
The conjugation x -> x + i (i running over the prime field) plays the role
of the Galois action, and the norm of f is the product of its p conjugates,
always a base-field element.
"""

from __future__ import annotations

from .errors import FieldMismatchError
from .forms import MultiPoly


class ArtinSchreierExtension:
    """K = F[x]/(x^p - x - alpha) over the base field of alpha."""

    def __init__(self, alpha):
        self.base = alpha.field
        self.p = alpha.field.p
        self.alpha = alpha
        self.zero = ExtElement(self, (self.base.zero,) * self.p)
        one = [self.base.zero] * self.p
        one[0] = self.base.one
        self.one = ExtElement(self, tuple(one))
        self.x = self.element([self.base.zero, self.base.one])
        # (x+i)^j tables for conjugation and products, i in F_p, j < p
        self._shift_pow = {}
        for i in range(self.p):
            pows = [self.one]
            xi = self.element([self.base.from_int(i), self.base.one])
            for _ in range(1, self.p):
                pows.append(pows[-1] * xi)
            self._shift_pow[i] = pows

    def element(self, coeffs):
        """Element with ascending coefficients c0 + c1 x + ... (padded)."""
        coeffs = list(coeffs)
        if len(coeffs) > self.p:
            raise ValueError("degree must stay below p")
        coeffs += [self.base.zero] * (self.p - len(coeffs))
        return ExtElement(self, tuple(coeffs))

    def from_coordinates(self, coords):
        """Element from norm-form coordinates (highest power of x first)."""
        return self.element(list(reversed(list(coords))))

    def from_base(self, c):
        return self.element([c])

    def _reduce(self, raw):
        # raw: list of coefficients, possibly of length up to 2p-1
        coeffs = list(raw) + [self.base.zero] * max(0, self.p - len(raw))
        for d in range(len(coeffs) - 1, self.p - 1, -1):
            c = coeffs[d]
            if not c.is_zero():
                coeffs[d - self.p + 1] = coeffs[d - self.p + 1] + c
                coeffs[d - self.p] = coeffs[d - self.p] + c * self.alpha
            coeffs[d] = self.base.zero
        return ExtElement(self, tuple(coeffs[:self.p]))

    def __eq__(self, other):
        return (isinstance(other, ArtinSchreierExtension)
                and other.base == self.base and other.alpha == self.alpha)

    def __hash__(self):
        return hash(("AS", self.alpha))

    def __repr__(self):
        return f"{self.base!r}[x : x^{self.p}-x = {self.alpha!r}]"


class ExtElement:
    """Polynomial of degree < p in the extension generator."""

    __slots__ = ("ext", "coeffs")

    def __init__(self, ext, coeffs):
        self.ext = ext
        self.coeffs = coeffs

    def coordinates(self):
        """Norm-form coordinate tuple, highest power of x first."""
        return tuple(reversed(self.coeffs))

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.ext != self.ext:
                raise FieldMismatchError("elements of different extensions")
            return other
        if isinstance(other, int):
            return self.ext.from_base(self.ext.base.from_int(other))
        if type(other) is type(self.ext.alpha):
            return self.ext.from_base(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.ext, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(self.ext, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ext.p
        raw = [self.ext.base.zero] * (2 * p - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                if not b.is_zero():
                    raw[i + j] = raw[i + j] + a * b
        return self.ext._reduce(raw)

    __rmul__ = __mul__

    def scale(self, c):
        return ExtElement(self.ext, tuple(a * c for a in self.coeffs))

    def __truediv__(self, other):
        if isinstance(other, ExtElement):
            return self * other.inverse()
        return self.scale(self.ext.base.one / other)

    def __pow__(self, e):
        r = self.ext.one
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def conjugate(self, i):
        """Image under x -> x + i."""
        out = self.ext.zero
        for d, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + self.ext._shift_pow[i % self.ext.p][d].scale(c)
        return out

    def norm(self):
        """Product of all p conjugates; always lands in the base field."""
        prod = self.ext.one
        for i in range(self.ext.p):
            prod = prod * self.conjugate(i)
        for c in prod.coeffs[1:]:
            assert c.is_zero(), "conjugate product escaped the base field"
        return prod.coeffs[0]

    def inverse(self):
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("element has norm zero (zero divisor)")
        cof = self.ext.one
        for i in range(1, self.ext.p):
            cof = cof * self.conjugate(i)
        return cof.scale(self.ext.base.one / n)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, ExtElement) and other.ext == self.ext
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coeffs)

    def __repr__(self):
        parts = []
        for d in range(self.ext.p - 1, -1, -1):
            c = self.coeffs[d]
            if c.is_zero():
                continue
            cs = repr(c)
            if d == 0:
                parts.append(cs)
            else:
                xs = "x" if d == 1 else f"x^{d}"
                parts.append(xs if cs == "1" else f"({cs})*{xs}")
        return "+".join(parts) if parts else "0"


def as_norm(ext: ArtinSchreierExtension, f: ExtElement):
    """Norm of f: the product of f's conjugates under x -> x+i."""
    if f.ext != ext:
        raise FieldMismatchError("element does not live in the given extension")
    return f.norm()


def norm_form(ext: ArtinSchreierExtension) -> MultiPoly:
    """The norm as a degree-p homogeneous form in p variables.

    Coordinates are taken against the basis (x^(p-1), ..., x, 1), so for p=2
    the result is the quadratic form alpha*u^2 + u*v + v^2, i.e. the [alpha,1]
    block attached to the extension.
    """
    p = ext.p
    F = ext.base
    # work in (polynomials in p coordinate variables) tensor K
    # a symbolic element is a dict: exponent tuple -> ExtElement
    def sym_mul(a, b):
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                prod = c1 * c2
                if e in out:
                    out[e] = out[e] + prod
                else:
                    out[e] = prod
        return {e: c for e, c in out.items() if not c.is_zero()}

    def generic(i):
        # conjugate_i of the generic element sum_d X_{p-1-d} x^d
        out = {}
        for d in range(p):
            e = [0] * p
            e[p - 1 - d] = 1
            out_e = ext._shift_pow[i][d]
            out[tuple(e)] = out_e
        return out

    prod = {(0,) * p: ext.one}
    for i in range(p):
        prod = sym_mul(prod, generic(i))
    coeffs = {}
    for e, c in prod.items():
        for hi in c.coeffs[1:]:
            assert hi.is_zero(), "norm form coefficient escaped the base field"
        if not c.coeffs[0].is_zero():
            coeffs[e] = c.coeffs[0]
    return MultiPoly(F, p, coeffs)
