"""Exact arithmetic in small finite fields GF(p^n).

Elements are stored as integers in ``range(q)``: the base-p digits of the
integer are the coefficients (constant term first) of the residue polynomial
in the generator ``z`` modulo the field's modulus polynomial.  Multiplication
and inversion go through discrete log/antilog tables, so construction cost is
O(q) and every arithmetic operation afterwards is a table lookup.  This keeps
the structure-constant and search kernels fast for the desk-scale fields the
package targets (q up to a few thousand).

The modulus polynomial is part of the field description and is validated for
irreducibility at construction time; there is no hidden Conway-polynomial
table, so two fields agree exactly when their (p, modulus) data agree.
"""

from __future__ import annotations

from .errors import FieldMismatchError, UnsupportedFieldError


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient tuples, constant term first)

def _ptrim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _padd(a, b, p):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return _ptrim([(x + y) % p for x, y in zip(a, b)])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1]:
            c = a[-1] * inv_lead % p
            off = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[off + i] = (a[off + i] - c * mi) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(a, e, m, p):
    r = (1,)
    b = _pmod(a, m, p)
    while e:
        if e & 1:
            r = _pmod(_pmul(r, b, p), m, p)
        b = _pmod(_pmul(b, b, p), m, p)
        e >>= 1
    return r


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def poly_is_irreducible(m, p):
    """Irreducibility over F_p of the dense coefficient tuple `m` (Rabin test)."""
    m = _ptrim(m)
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    # x^(p^n) == x mod m, and gcd(x^(p^(n/r)) - x, m) == 1 for prime r | n
    x = (0, 1)
    if _ppowmod(x, p ** n, m, p) != _pmod(x, m, p):
        return False
    r = 2
    nn = n
    primes = set()
    while r * r <= nn:
        if nn % r == 0:
            primes.add(r)
            while nn % r == 0:
                nn //= r
        r += 1
    if nn > 1:
        primes.add(nn)
    for r in primes:
        h = _padd(_ppowmod(x, p ** (n // r), m, p), tuple(-c % p for c in x), p)
        if len(_pgcd(m, h, p)) - 1 != 0:
            return False
    return True


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------

class GF:
    """Finite field GF(p^n) with an explicit modulus polynomial.

    ``modulus`` is a coefficient tuple over F_p (constant term first, monic,
    length n+1, irreducible).  For prime fields pass n=1 and no modulus.
    """

    construction = "finite-field"
    is_finite = True
    is_local = False

    def __init__(self, p, modulus=None, genname="z"):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.genname = genname
        if modulus is None:
            modulus = (0, 1)
        modulus = _ptrim(modulus)
        modulus = tuple(c % p for c in modulus)
        n = len(modulus) - 1
        if n < 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if n > 1 and not poly_is_irreducible(modulus, p):
            raise ValueError("modulus polynomial is reducible over F_p")
        self.n = n
        self.q = p ** n
        self.modulus = modulus
        self._build_tables()
        self.zero = GFElement(self, 0)
        self.one = GFElement(self, 1)

    # -- table construction --------------------------------------------

    def _digits(self, val):
        p, n = self.p, self.n
        out = []
        for _ in range(n):
            out.append(val % p)
            val //= p
        return out

    def _undigits(self, digs):
        val = 0
        for c in reversed(digs):
            val = val * self.p + (c % self.p)
        return val

    def _raw_mul(self, a, b):
        pa = _ptrim(self._digits(a))
        pb = _ptrim(self._digits(b))
        return self._undigits(list(_pmod(_pmul(pa, pb, self.p), self.modulus, self.p)) + [0] * self.n)

    def _build_tables(self):
        q = self.q
        # discrete log tables: find a generator of the multiplicative group
        order = q - 1
        fac = []
        m = order
        d = 2
        while d * d <= m:
            if m % d == 0:
                fac.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            fac.append(m)

        def mul_order_ok(g):
            for r in fac:
                e = order // r
                x = 1
                gg = g
                while e:
                    if e & 1:
                        x = self._raw_mul(x, gg)
                    gg = self._raw_mul(gg, gg)
                    e >>= 1
                if x == 1:
                    return False
            return True

        gen = None
        for g in range(2, q) if q > 2 else [1]:
            if q == 2:
                gen = 1
                break
            if mul_order_ok(g):
                gen = g
                break
        assert gen is not None
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            exp[i + order] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        self._exp, self._log, self._gen = exp, log, gen
        # additive tables as digitwise mod-p sums (precomputed for small q)
        p, n = self.p, self.n
        if p == 2:
            self._add = None  # xor fast path
        else:
            self._add = [[self._undigits([(u + v) % p for u, v in zip(self._digits(a), self._digits(b))])
                          for b in range(q)] for a in range(q)]
        self._neg = [self._undigits([(-u) % p for u in self._digits(a)]) for a in range(q)]
        # Frobenius x -> x^p and its inverse (p-th root), traces to F_p
        self._frob = [self.pow_raw(a, p) for a in range(q)]
        self._pthroot = [0] * q
        for a in range(q):
            self._pthroot[self._frob[a]] = a
        self._trace = []
        for a in range(q):
            t = 0
            x = a
            for _ in range(n):
                t = self.add_raw(t, x)
                x = self._frob[x]
            self._trace.append(t)  # element of the prime field, stored as int code
        # Artin-Schreier tables: wp(v) = v^p - v, and its fibers
        self._wp = [self.add_raw(self._frob[a], self._neg[a]) for a in range(q)]
        self._wp_fibers = {}
        for v in range(q):
            self._wp_fibers.setdefault(self._wp[v], []).append(v)

    # -- raw integer-coded arithmetic ------------------------------------

    def add_raw(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._add[a][b]

    def neg_raw(self, a):
        return self._neg[a]

    def mul_raw(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv_raw(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in GF")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow_raw(self, a, e):
        if a == 0:
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    # -- public element API ----------------------------------------------

    def element(self, val):
        return GFElement(self, val % self.q if isinstance(val, int) else val)

    def from_int(self, k):
        """Image of the integer k under Z -> F_p -> GF(q)."""
        return GFElement(self, k % self.p)

    def from_coeffs(self, coeffs):
        """Element with the given F_p coefficients, constant term first."""
        if len(coeffs) > self.n:
            raise ValueError("too many coefficients")
        return GFElement(self, self._undigits(list(coeffs) + [0] * (self.n - len(coeffs))))

    def gen(self):
        if self.n == 1:
            raise UnsupportedFieldError("prime field has no proper generator z")
        return GFElement(self, self.p)  # the class of z

    def elements(self):
        """All field elements in the fixed representation order (int codes ascending)."""
        return [GFElement(self, v) for v in range(self.q)]

    def trace_to_prime(self, a):
        """Absolute trace GF(q) -> F_p, returned as an integer in range(p)."""
        t = self._trace[a.val if isinstance(a, GFElement) else a]
        return t  # codes of prime-subfield elements are their integer values

    def pth_root(self, a):
        return GFElement(self, self._pthroot[a.val])

    def wp(self, v):
        """The Artin-Schreier operator v^p - v."""
        return GFElement(self, self._wp[v.val])

    def wp_solve(self, c):
        """All v with v^p - v = c; the set is empty or has exactly p members."""
        return [GFElement(self, v) for v in self._wp_fibers.get(c.val, [])]

    def wp_canonical_rep(self, c):
        """Canonical representative of c + wp(GF(q)): smallest int code in the coset."""
        best = min(self.add_raw(c.val, self._neg[w]) for w in self._wp_fibers)
        return GFElement(self, best)

    # -- misc -------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, GF) and other.p == self.p
                and other.modulus == self.modulus and other.genname == self.genname)

    def __hash__(self):
        return hash(("GF", self.p, self.modulus, self.genname))

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n}; {self.render_modulus()})"

    def render_modulus(self):
        return render_poly_int(self.modulus, self.genname)

    def render_element(self, a):
        return render_poly_int(_ptrim(self._digits(a.val)), self.genname)


def render_poly_int(coeffs, var):
    """Human/grammar form of an F_p coefficient tuple, highest degree first."""
    if not coeffs:
        return "0"
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not c:
            continue
        if d == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}{var}" if d == 1 else f"{head}{var}^{d}")
    return "+".join(parts)


class GFElement:
    """An element of a GF instance; immutable, hashable, totally ordered."""

    __slots__ = ("field", "val")

    def __init__(self, field, val):
        self.field = field
        self.val = val

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.field, self.field.add_raw(self.val, o.val))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.field, self.field.add_raw(self.val, self.field.neg_raw(o.val)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.field, self.field.mul_raw(self.val, o.val))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.field, self.field.mul_raw(self.val, self.field.inv_raw(o.val)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if e < 0:
            return GFElement(self.field, self.field.pow_raw(self.field.inv_raw(self.val), -e))
        return GFElement(self.field, self.field.pow_raw(self.val, e))

    def __neg__(self):
        return GFElement(self.field, self.field.neg_raw(self.val))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.val == self.field.from_int(other).val
        return isinstance(other, GFElement) and other.field == self.field and other.val == self.val

    def __hash__(self):
        return hash((self.val, self.field.p, self.field.modulus))

    def __bool__(self):
        return self.val != 0

    def is_zero(self):
        return self.val == 0

    def sort_key(self):
        return self.val

    def inverse(self):
        return GFElement(self.field, self.field.inv_raw(self.val))

    def __repr__(self):
        return self.field.render_element(self)
