"""Rational functions in one variable over a finite field, stored exactly.

A polynomial is a tuple of GF integer codes, constant term first, with no
trailing zeros (the empty tuple is 0).  A rational function is a reduced
fraction num/den with monic denominator; this canonical form makes equality
a tuple comparison.  The same representation backs both the rational function
field GF(q)(t) and the Laurent-local field GF(q)((t)): local questions
(valuation, residue, principal part) are answered by exact series expansion
of the fraction at t=0, so no floating precision enters anywhere.
"""

from __future__ import annotations

from .errors import FieldMismatchError
from .gf import GF, GFElement, render_poly_int


# ---------------------------------------------------------------------------
# polynomial layer (tuples of GF codes)

def ptrim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def padd(k: GF, a, b):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return ptrim(tuple(k.add_raw(x, y) for x, y in zip(a, b)))


def pneg(k: GF, a):
    return tuple(k.neg_raw(x) for x in a)


def psub(k: GF, a, b):
    return padd(k, a, pneg(k, b))


def pmul(k: GF, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = k.add_raw(out[i + j], k.mul_raw(x, y))
    return ptrim(out)


def pscale(k: GF, a, c):
    if c == 0:
        return ()
    return ptrim(tuple(k.mul_raw(x, c) for x in a))


def pdivmod(k: GF, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = k.inv_raw(b[-1])
    while len(a) >= len(b) and a:
        if a[-1]:
            c = k.mul_raw(a[-1], inv)
            off = len(a) - len(b)
            q[off] = c
            for i, bi in enumerate(b):
                a[off + i] = k.add_raw(a[off + i], k.neg_raw(k.mul_raw(c, bi)))
        a.pop()
    return ptrim(q), ptrim(a)


def pgcd(k: GF, a, b):
    a, b = ptrim(a), ptrim(b)
    while b:
        a, b = b, pdivmod(k, a, b)[1]
    return pmonic(k, a)


def pmonic(k: GF, a):
    if not a or a[-1] == 1:
        return a
    return pscale(k, a, k.inv_raw(a[-1]))


def pderiv(k: GF, a):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        r = i % k.p
        acc = 0
        for _ in range(r):
            acc = k.add_raw(acc, c)
        out.append(acc)
    return ptrim(out)


def ppow(k: GF, a, e):
    r = (1,)
    while e:
        if e & 1:
            r = pmul(k, r, a)
        a = pmul(k, a, a)
        e >>= 1
    return r


def pvaluation(a):
    """Order of vanishing at t=0 (index of first nonzero coefficient)."""
    for i, c in enumerate(a):
        if c:
            return i
    return None  # zero polynomial


def peval(k: GF, a, x):
    """Evaluate at a GF code x (for root checks in witness plumbing)."""
    acc = 0
    for c in reversed(a):
        acc = k.add_raw(k.mul_raw(acc, x), c)
    return acc


def ppth_root(k: GF, a):
    """p-th root of a polynomial, or None; in char p it exists iff only
    exponents divisible by p occur (coefficients take roots via Frobenius)."""
    p = k.p
    out = []
    for i, c in enumerate(a):
        if i % p == 0:
            out.append(k._pthroot[c])
        elif c:
            return None
    return ptrim(out)


# ---------------------------------------------------------------------------

class FunctionField:
    """GF(q)(t) as exact fractions; with local=True the same arithmetic is
    read as (a dense subfield of) the Laurent field GF(q)((t))."""

    is_finite = False

    def __init__(self, base: GF, varname="t", local=False):
        self.base = base
        self.p = base.p
        self.varname = varname
        self.is_local = local
        self.construction = "laurent-local" if local else "rational-functions"
        self.zero = RatFuncElement(self, (), (1,))
        self.one = RatFuncElement(self, (1,), (1,))
        self.t = RatFuncElement(self, (0, 1), (1,))

    def element(self, num, den=(1,)):
        """Build and canonicalize num/den from GF-code coefficient tuples."""
        k = self.base
        num, den = ptrim(tuple(num)), ptrim(tuple(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        g = pgcd(k, num, den)
        if len(g) > 1:
            num = pdivmod(k, num, g)[0]
            den = pdivmod(k, den, g)[0]
        if den[-1] != 1:
            c = k.inv_raw(den[-1])
            num = pscale(k, num, c)
            den = pscale(k, den, c)
        return RatFuncElement(self, num, den)

    def from_int(self, n):
        return RatFuncElement(self, ptrim((n % self.p,)), (1,))

    def from_base(self, a: GFElement):
        return RatFuncElement(self, ptrim((a.val,)), (1,))

    def from_poly_ints(self, coeffs):
        """Polynomial in t with small-integer coefficients (mod p)."""
        return self.element(tuple(c % self.p for c in coeffs))

    def constant_of(self, a):
        """The base-field value of a constant element (raises otherwise)."""
        if len(a.num) > 1 or len(a.den) > 1:
            raise ValueError("element is not constant")
        return GFElement(self.base, a.num[0] if a.num else 0)

    def is_constant(self, a):
        return len(a.num) <= 1 and len(a.den) <= 1

    def wp(self, v):
        return v ** self.p - v

    def __eq__(self, other):
        return (isinstance(other, FunctionField) and other.base == self.base
                and other.varname == self.varname and other.is_local == self.is_local)

    def __hash__(self):
        return hash((self.construction, self.base, self.varname))

    def __repr__(self):
        b = repr(self.base)
        return f"{b}(({self.varname}))" if self.is_local else f"{b}({self.varname})"

    def render_element(self, a):
        k = self.base
        num = render_gf_poly(k, a.num, self.varname)
        if a.den == (1,):
            return num
        den = render_gf_poly(k, a.den, self.varname)
        ns = num if ("+" not in num and "-" not in num) else f"({num})"
        ds = den if ("+" not in den and "-" not in den) else f"({den})"
        return f"{ns}/{ds}"


def render_gf_poly(k: GF, coeffs, var):
    if not coeffs:
        return "0"
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not c:
            continue
        cs = k.render_element(GFElement(k, c))
        if d == 0:
            parts.append(cs if ("+" not in cs) else f"({cs})")
            continue
        tv = var if d == 1 else f"{var}^{d}"
        if cs == "1":
            parts.append(tv)
        elif "+" in cs:
            parts.append(f"({cs})*{tv}")
        else:
            parts.append(f"{cs}*{tv}")
    return "+".join(parts)


class RatFuncElement:
    """Reduced fraction of polynomials over the base finite field."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RatFuncElement):
            if other.field != self.field:
                raise FieldMismatchError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, GFElement):
            if other.field != self.field.base:
                raise FieldMismatchError("constant from a different base field")
            return self.field.from_base(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = self.field.base
        num = padd(k, pmul(k, self.num, o.den), pmul(k, o.num, self.den))
        return self.field.element(num, pmul(k, self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        k = self.field.base
        return RatFuncElement(self.field, pneg(k, self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = self.field.base
        return self.field.element(pmul(k, self.num, o.num), pmul(k, self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        k = self.field.base
        return self.field.element(pmul(k, self.num, o.den), pmul(k, self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        k = self.field.base
        if e < 0:
            if not self.num:
                raise ZeroDivisionError("inverse of zero")
            return self.field.element(ppow(k, self.den, -e), ppow(k, self.num, -e))
        return self.field.element(ppow(k, self.num, e), ppow(k, self.den, e))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return (isinstance(other, RatFuncElement) and other.field == self.field
                and other.num == self.num and other.den == self.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def sort_key(self):
        return (len(self.num), len(self.den), self.num, self.den)

    def inverse(self):
        return self.field.one / self

    def __repr__(self):
        return self.field.render_element(self)

    # -- calculus and local data ------------------------------------------

    def derivative(self):
        """Formal d/dt by the quotient rule, exact."""
        k = self.field.base
        num = psub(k, pmul(k, pderiv(k, self.num), self.den),
                   pmul(k, self.num, pderiv(k, self.den)))
        return self.field.element(num, pmul(k, self.den, self.den))

    def valuation(self):
        """Order at t=0 (negative for poles); None for the zero element."""
        if not self.num:
            return None
        return pvaluation(self.num) - pvaluation(self.den)

    def series_coeffs(self, upto):
        """Laurent coefficients c_v, ..., c_upto at t=0 as GF codes, where v
        is the valuation; returns (v, [codes]) with exact arithmetic."""
        if not self.num:
            return 0, []
        k = self.field.base
        vn = pvaluation(self.num)
        vd = pvaluation(self.den)
        v = vn - vd
        if v > upto:
            return v, []
        n = self.num[vn:]
        d = self.den[vd:]
        m = upto - v + 1
        inv0 = k.inv_raw(d[0])
        out = []
        state = list(n[:m]) + [0] * max(0, m - len(n))
        for i in range(m):
            c = k.mul_raw(state[i], inv0)
            out.append(c)
            if c:
                for j in range(1, min(len(d), m - i)):
                    state[i + j] = k.add_raw(state[i + j], k.neg_raw(k.mul_raw(c, d[j])))
        return v, out

    def residue_at_zero(self):
        """Coefficient of t^(-1) in the Laurent expansion, as a base element."""
        v, coeffs = self.series_coeffs(-1)
        idx = -1 - v
        if idx < 0 or idx >= len(coeffs):
            return GFElement(self.field.base, 0)
        return GFElement(self.field.base, coeffs[idx])

    def principal_plus_constant(self):
        """Pairs (j, c_j) for the terms c_j t^j with j <= 0, as GF elements."""
        v, coeffs = self.series_coeffs(0)
        out = []
        for i, c in enumerate(coeffs):
            if c:
                out.append((v + i, GFElement(self.field.base, c)))
        return out

    def sqrt(self):
        """Square root within the field, or None (char 2 only)."""
        return self.pth_root() if self.field.p == 2 else None

    def pth_root(self):
        k = self.field.base
        rn = ppth_root(k, self.num)
        rd = ppth_root(k, self.den)
        if rn is None or rd is None:
            return None
        return self.field.element(rn, rd)


# ---------------------------------------------------------------------------
# rational Artin-Schreier equations: v^p - v = w with v required rational.
# v |-> v^p is F_p-linear, so after pinning the denominator (it must be the
# p-th root of w's reduced denominator) the equation becomes an F_p-linear
# system on the numerator coefficients' F_p-digits.

def wp_solve_ratfunc(w: RatFuncElement):
    """All rational v with v^p - v = w (there are 0 or p of them).

    Over the Laurent field a solution may exist as an irrational series even
    when this returns []; callers that only need decidability should use the
    local principal-part reduction instead.
    """
    F = w.field
    k = F.base
    p, m = k.p, k.n
    if w.is_zero():
        return [F.from_int(i) for i in range(p)]
    d = ppth_root(k, w.den)
    if d is None:
        return []
    wn = w.num
    degd = len(d) - 1
    degw = len(wn) - 1
    N = max(degd, (degw + p - 1) // p, degw - (p - 1) * degd)
    dp1 = ppow(k, d, p - 1)
    ncols = (N + 1) * m
    width = max(p * N, N + (p - 1) * degd, degw) + 1
    nrows = width * m

    def lhs_digits(poly):
        # F_p-digit vector of n^p - n*d^(p-1) for the basis numerator `poly`
        np_ = tuple(0 if i % p else k.pow_raw(poly[i // p], p) if i // p < len(poly) else 0
                    for i in range(p * (len(poly) - 1) + 1)) if poly else ()
        np_ = ptrim(np_)
        val = psub(k, np_, pmul(k, poly, dp1))
        digs = []
        for i in range(width):
            c = val[i] if i < len(val) else 0
            digs.extend(k._digits(c))
        return digs

    cols = []
    for i in range(N + 1):
        for j in range(m):
            basis_num = (0,) * i + (k._undigits([0] * j + [1] + [0] * (m - j - 1)),)
            cols.append(lhs_digits(ptrim(basis_num)))
    target = []
    for i in range(width):
        c = wn[i] if i < len(wn) else 0
        target.extend(k._digits(c))

    sols = _solve_modp_all(cols, target, nrows, ncols, p)
    out = []
    for s in sols:
        coeffs = []
        for i in range(N + 1):
            digs = s[i * m:(i + 1) * m]
            coeffs.append(k._undigits(list(digs)))
        v = F.element(ptrim(tuple(coeffs)), d)
        if F.wp(v) == w:
            out.append(v)
    out.sort(key=lambda e: e.sort_key())
    return out


def _solve_modp_all(cols, target, nrows, ncols, p):
    """All solutions of the mod-p system (columns given); [] if inconsistent."""
    aug = [[cols[c][r] for c in range(ncols)] + [target[r]] for r in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        sel = None
        for r in range(row, nrows):
            if aug[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = pow(aug[row][col], p - 2, p)
        aug[row] = [(x * inv) % p for x in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col] % p:
                c = aug[r][col]
                aug[r] = [(x - c * y) % p for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, nrows):
        if aug[r][ncols] % p:
            return []
    free = [c for c in range(ncols) if c not in pivots]
    sols = []

    def emit(assign):
        x = [0] * ncols
        for c, v in zip(free, assign):
            x[c] = v
        for r, c in enumerate(pivots):
            s = aug[r][ncols]
            for fc, fv in zip(free, assign):
                s = (s - aug[r][fc] * fv) % p
            x[c] = s % p
        sols.append(x)

    # free variables beyond the structural kernel would explode; the kernel of
    # v -> v^p - v on any finite-dimensional slice has dimension at most 1
    if len(free) > 2:
        combos = [[0] * len(free)]
        for i in range(len(free)):
            for v in range(1, p):
                combos.append([v if j == i else 0 for j in range(len(free))])
    else:
        combos = _all_tuples(p, len(free))
    for assign in combos:
        emit(assign)
    # dedupe
    seen = set()
    uniq = []
    for s in sols:
        ts = tuple(s)
        if ts not in seen:
            seen.add(ts)
            uniq.append(s)
    return uniq


def _all_tuples(p, n):
    if n == 0:
        return [[]]
    rest = _all_tuples(p, n - 1)
    return [[v] + r for v in range(p) for r in rest]
