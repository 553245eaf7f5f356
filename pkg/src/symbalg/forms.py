"""Sparse multivariate polynomials over an exact field.

Just enough machinery to carry the homogeneous degree-p forms this package
manipulates: norm forms of degree-p extensions and the slot-modification
form built from a tensor product.  Exponent tuples index a coefficient dict;
evaluation, arithmetic and variable embedding are exact.
"""

from __future__ import annotations


class MultiPoly:
    """Polynomial in `nvars` variables with coefficients in `field`."""

    __slots__ = ("field", "nvars", "coeffs")

    def __init__(self, field, nvars, coeffs=None):
        self.field = field
        self.nvars = nvars
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if not c.is_zero():
                    self.coeffs[tuple(e)] = c

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars)

    @classmethod
    def constant(cls, field, nvars, c):
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls(field, nvars, {tuple(e): field.one})

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.field, self.nvars, out)

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = out.get(e)
                s = prod if s is None else s + prod
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.field, self.nvars, out)

    def scale(self, c):
        if c.is_zero():
            return MultiPoly(self.field, self.nvars)
        return MultiPoly(self.field, self.nvars, {e: c * v for e, v in self.coeffs.items()})

    def evaluate(self, values):
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        total = self.field.zero
        for e, c in self.coeffs.items():
            term = c
            for x, k in zip(values, e):
                for _ in range(k):
                    term = term * x
            total = total + term
        return total

    def embed(self, nvars, offset):
        """The same polynomial viewed in a larger variable list, its own
        variables shifted to start at `offset`."""
        out = {}
        for e, c in self.coeffs.items():
            ee = [0] * nvars
            for i, k in enumerate(e):
                ee[offset + i] = k
            out[tuple(ee)] = c
        return MultiPoly(self.field, nvars, out)

    def degree(self):
        return max((sum(e) for e in self.coeffs), default=0)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.coeffs}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and other.nvars == self.nvars
                and other.coeffs == self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, key=lambda t: (-sum(t), t)):
            c = self.coeffs[e]
            mono = "*".join(f"X{i}" + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(e) if k)
            cs = repr(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)
