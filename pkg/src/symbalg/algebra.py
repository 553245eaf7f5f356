"""Structure-constant model of symbol algebras and their tensor products.

A symbol algebra is presented by (p, alpha, beta) with relations
x^p - x = alpha, y^p = beta, yx - xy = y; a tensor product of k of them over
a common field is a p^(2k)-dimensional algebra with monomial basis
x1^e1 y1^f1 (x) ... (x) xk^ek yk^fk, all exponents below p.  Elements are
finitely supported coefficient maps over that basis.  Multiplication pushes
y past x with y^f x^j = (x+f)^j y^f, then reduces exponents through
x^p = x + alpha and y^p = beta; per-factor products are precomputed into a
structure table once per host.

The certificate machinery reifies generator pairs: verify_symbol_pair checks
the defining relations of a claimed pair inside the host and that the pair
generates a p^2-dimensional unital subalgebra.  Hosts are capped at
dimension 6561 (p=3 with four factors); larger products exist only at the
presentation level.
"""

from __future__ import annotations

from .errors import FieldMismatchError, PreconditionError
from .extension import ArtinSchreierExtension
from .fields import laurent_pool
from .linalg import Span, kernel, solve
from .ratfunc import wp_solve_ratfunc

DIMENSION_CAP = 6561


class SymbolAlgebra:
    """Presentation data (p, alpha, beta) of one symbol algebra."""

    __slots__ = ("p", "alpha", "beta", "field")

    def __init__(self, alpha, beta):
        if alpha.field != beta.field:
            raise FieldMismatchError("slots from different fields")
        if beta.is_zero():
            raise PreconditionError("second slot must be nonzero")
        self.field = alpha.field
        self.p = self.field.p
        self.alpha = alpha
        self.beta = beta

    def tensor(self, *others):
        return TensorProduct([self, *others])

    def extension(self):
        """The commutative subalgebra F[x : x^p - x = alpha]."""
        return ArtinSchreierExtension(self.alpha)

    def is_recognizably_split(self):
        """Split by presentation alone: [alpha,1) or [0,beta)."""
        return self.alpha.is_zero() or self.beta == self.field.one

    def __eq__(self, other):
        return (isinstance(other, SymbolAlgebra) and other.field == self.field
                and other.alpha == self.alpha and other.beta == self.beta)

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __repr__(self):
        return f"[{self.alpha!r},{self.beta!r})_{self.p}"


class TensorProduct:
    """Ordered tensor product of symbol algebras over one field."""

    def __init__(self, factors):
        factors = list(factors)
        if not factors:
            raise PreconditionError("tensor product needs at least one factor")
        field = factors[0].field
        for f in factors:
            if f.field != field:
                raise FieldMismatchError("factors over different fields")
        self.field = field
        self.p = field.p
        self.factors = factors
        self.k = len(factors)
        self.dimension = self.p ** (2 * self.k)
        self._tables = {}

    def _check_cap(self):
        if self.dimension > DIMENSION_CAP:
            raise PreconditionError(
                f"host dimension {self.dimension} exceeds the structure-constant cap {DIMENSION_CAP}")

    # -- structure table ---------------------------------------------------

    def _factor_table(self, i):
        """(e,f,e2,f2) -> ((d, rem, coeff), ...) expansion of the product of
        two basis monomials of factor i."""
        tab = self._tables.get(i)
        if tab is not None:
            return tab
        p = self.p
        A = self.factors[i]
        K = ArtinSchreierExtension(A.alpha)
        tab = {}
        betapow = [self.field.one, A.beta]
        for e in range(p):
            for f in range(p):
                for e2 in range(p):
                    xpart = K._shift_pow[0][e] * K._shift_pow[f][e2]
                    for f2 in range(p):
                        fs = f + f2
                        carry, rem = divmod(fs, p)
                        scalar = betapow[carry]
                        entry = []
                        for d, c in enumerate(xpart.coeffs):
                            if not c.is_zero():
                                entry.append((d, rem, c * scalar))
                        tab[(e, f, e2, f2)] = tuple(entry)
        self._tables[i] = tab
        return tab

    # -- element constructors -----------------------------------------------

    def element(self, coeffs):
        self._check_cap()
        clean = {}
        for m, c in coeffs.items():
            if not c.is_zero():
                clean[tuple(m)] = c
        return AlgebraElement(self, clean)

    def zero(self):
        return self.element({})

    def one(self):
        return self.element({(0,) * (2 * self.k): self.field.one})

    def scalar(self, c):
        return self.element({(0,) * (2 * self.k): c})

    def monomial(self, exps, coeff=None):
        return self.element({tuple(exps): coeff if coeff is not None else self.field.one})

    def x(self, i=0):
        m = [0] * (2 * self.k)
        m[2 * i] = 1
        return self.monomial(m)

    def y(self, i=0):
        m = [0] * (2 * self.k)
        m[2 * i + 1] = 1
        return self.monomial(m)

    def embed_ext(self, i, f):
        """Image of f in F[x_i] as an algebra element."""
        out = self.zero()
        for d, c in enumerate(f.coeffs):
            if not c.is_zero():
                m = [0] * (2 * self.k)
                m[2 * i] = d
                out = out + self.monomial(m, c)
        return out

    def basis_indices(self):
        """All multi-indices in the fixed lexicographic order."""
        out = [()]
        for _ in range(2 * self.k):
            out = [m + (d,) for m in out for d in range(self.p)]
        return sorted(out)

    def __eq__(self, other):
        return (isinstance(other, TensorProduct) and other.factors == self.factors
                and other.field == self.field)

    def __repr__(self):
        return " (x) ".join(repr(f) for f in self.factors)


class AlgebraElement:
    """Finitely supported coefficient map over the monomial basis."""

    __slots__ = ("host", "coeffs")

    def __init__(self, host, coeffs):
        self.host = host
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.host != self.host:
                raise FieldMismatchError("elements of different hosts")
            return other
        if isinstance(other, int):
            return self.host.scalar(self.host.field.from_int(other))
        if type(other) is type(self.host.field.zero):
            return self.host.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for m, c in o.coeffs.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return AlgebraElement(self.host, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.host, {m: -c for m, c in self.coeffs.items()})

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

    def scale(self, c):
        if c.is_zero():
            return self.host.zero()
        return AlgebraElement(self.host, {m: c * v for m, v in self.coeffs.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        host = self.host
        k = host.k
        tables = [host._factor_table(i) for i in range(k)]
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in o.coeffs.items():
                base = c1 * c2
                # expand factorwise and take the cross product of the parts
                partial = [((), base)]
                for i in range(k):
                    entry = tables[i][(m1[2 * i], m1[2 * i + 1], m2[2 * i], m2[2 * i + 1])]
                    nxt = []
                    for pref, coeff in partial:
                        for d, rem, c in entry:
                            nxt.append((pref + (d, rem), coeff * c))
                    partial = nxt
                for m, c in partial:
                    s = out.get(m)
                    s = c if s is None else s + c
                    if s.is_zero():
                        out.pop(m, None)
                    else:
                        out[m] = s
        return AlgebraElement(host, out)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, e):
        r = self.host.one()
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __eq__(self, other):
        if isinstance(other, (int,)) or type(other) is type(self.host.field.zero):
            other = self._coerce(other)
        return (isinstance(other, AlgebraElement) and other.host == self.host
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self):
        return not self.coeffs

    def scalar_part(self):
        """The coefficient of the identity monomial."""
        return self.coeffs.get((0,) * (2 * self.host.k), self.host.field.zero)

    def is_scalar(self):
        return all(all(d == 0 for d in m) for m in self.coeffs)

    def vector(self, basis=None):
        basis = basis if basis is not None else self.host.basis_indices()
        z = self.host.field.zero
        return [self.coeffs.get(m, z) for m in basis]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs):
            c = self.coeffs[m]
            mono = []
            for i in range(self.host.k):
                e, f = m[2 * i], m[2 * i + 1]
                nm = "" if self.host.k == 1 else str(i + 1)
                if e:
                    mono.append(f"x{nm}" + (f"^{e}" if e > 1 else ""))
                if f:
                    mono.append(f"y{nm}" + (f"^{f}" if f > 1 else ""))
            ms = "*".join(mono) if mono else "1"
            cs = repr(c)
            parts.append(ms if cs == "1" and mono else (f"({cs})*{ms}" if mono else f"({cs})"))
        return " + ".join(parts)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product in the host algebra (same as the * operator)."""
    return a * b


def commute(a: AlgebraElement, b: AlgebraElement) -> bool:
    return (a * b) == (b * a)


def subalgebra_dimension(gens):
    """Dimension of the unital subalgebra generated by the given elements.

    Span closure: starting from 1, repeatedly right-multiply the basis found
    so far by the generators until the span is stable.
    """
    if not gens:
        return 1
    host = gens[0].host
    basis = host.basis_indices()
    sp = Span(host.field, len(basis))
    frontier = []
    for el in [host.one(), *gens]:
        if sp.add(el.vector(basis)):
            frontier.append(el)
    while frontier:
        new = []
        for el in frontier:
            for g in gens:
                prod = el * g
                if sp.add(prod.vector(basis)):
                    new.append(prod)
        frontier = new
    return sp.dim


class SymbolCertificate:
    """A claimed generator pair (X, Y) realizing [alpha, beta) in a host."""

    __slots__ = ("X", "Y", "claimed_alpha", "claimed_beta")

    def __init__(self, X, Y, claimed_alpha, claimed_beta):
        if X.host != Y.host:
            raise FieldMismatchError("certificate generators in different hosts")
        self.X = X
        self.Y = Y
        self.claimed_alpha = claimed_alpha
        self.claimed_beta = claimed_beta

    def __repr__(self):
        return (f"SymbolCertificate(alpha={self.claimed_alpha!r}, "
                f"beta={self.claimed_beta!r})")


class CertReport:
    """Outcome of verify_symbol_pair; truthy iff every relation held."""

    __slots__ = ("ok", "failed")

    def __init__(self, ok, failed=None):
        self.ok = ok
        self.failed = failed

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "certificate ok" if self.ok else f"certificate FAILED: {self.failed}"


def verify_symbol_pair(cert: SymbolCertificate) -> CertReport:
    """Check X^p - X = alpha, Y^p = beta, YX - XY = Y, and that {X, Y}
    generates a p^2-dimensional unital subalgebra."""
    if cert.claimed_beta.is_zero():
        raise PreconditionError("claimed beta must be nonzero")
    host = cert.X.host
    p = host.p
    X, Y = cert.X, cert.Y
    if (X ** p - X) != host.scalar(cert.claimed_alpha):
        return CertReport(False, "X^p - X != alpha")
    if (Y ** p) != host.scalar(cert.claimed_beta):
        return CertReport(False, "Y^p != beta")
    if (Y * X - X * Y) != Y:
        return CertReport(False, "YX - XY != Y")
    if subalgebra_dimension([X, Y]) != p * p:
        return CertReport(False, "generated subalgebra is not p^2-dimensional")
    return CertReport(True)


# ---------------------------------------------------------------------------
# linear-algebra helpers on hosts

def _mult_matrix_rows(elem, side="left"):
    """Rows of the multiplication operator (on the basis order) acting by
    elem; row r = coordinates of elem * basis[r] (or basis[r] * elem)."""
    host = elem.host
    basis = host.basis_indices()
    rows = []
    for m in basis:
        b = host.monomial(m)
        prod = elem * b if side == "left" else b * elem
        rows.append(prod.vector(basis))
    return rows


def inverse_or_zero_divisor(a: AlgebraElement):
    """('inv', a^-1) when a is invertible, ('zerodiv', v) with a*v = 0 (v != 0)
    otherwise; ('zero', None) for a = 0."""
    if a.is_zero():
        return ("zero", None)
    host = a.host
    basis = host.basis_indices()
    cols = _mult_matrix_rows(a, "left")          # cols[j] = a * basis[j]
    rows = [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]
    ker = kernel(host.field, rows, len(basis))
    if ker:
        vec = ker[0]
        v = host.element({m: c for m, c in zip(basis, vec)})
        return ("zerodiv", v)
    one = host.one().vector(basis)
    sol = solve(host.field, rows, one)
    inv = host.element({m: c for m, c in zip(basis, sol)})
    return ("inv", inv)


def centralizer_basis(host: TensorProduct, elems):
    """Basis (as elements) of the centralizer of the given elements."""
    basis = host.basis_indices()
    n = len(basis)
    field = host.field
    # coordinates of candidate space: start with the full space
    space = [host.monomial(m) for m in basis]
    for e in elems:
        rows = []
        images = [b * e - e * b for b in space]
        for i in range(n):
            rows.append([img.vector(basis)[i] for img in images])
        ker = kernel(field, rows, len(space))
        new_space = []
        for vec in ker:
            el = host.zero()
            for c, b in zip(vec, space):
                if not c.is_zero():
                    el = el + b.scale(c)
            new_space.append(el)
        space = new_space
        if not space:
            break
    return space


def center_basis(host: TensorProduct):
    gens = []
    for i in range(host.k):
        gens.append(host.x(i))
        gens.append(host.y(i))
    return centralizer_basis(host, gens)


def solve_companion(host: TensorProduct, Y: AlgebraElement, space=None):
    """Solve Y X - X Y = Y for X (optionally inside the span of `space`),
    returning the reduced-echelon particular solution: the deterministic
    minimal-support choice under the fixed basis order."""
    basis = host.basis_indices()
    n = len(basis)
    field = host.field
    cand = space if space is not None else [host.monomial(m) for m in basis]
    images = [Y * b - b * Y for b in cand]
    rows = [[img.vector(basis)[i] for img in images] for i in range(n)]
    rhs = Y.vector(basis)
    sol = solve(field, rows, rhs)
    if sol is None:
        return None
    out = host.zero()
    for c, b in zip(sol, cand):
        if not c.is_zero():
            out = out + b.scale(c)
    return out


# ---------------------------------------------------------------------------

def embed_element(a: AlgebraElement, host: TensorProduct, positions):
    """Image of a under the inclusion that sends factor j of a's host to
    factor positions[j] of the bigger host (all other factors untouched)."""
    k = host.k
    out = {}
    for m, c in a.coeffs.items():
        mm = [0] * (2 * k)
        for j in range(a.host.k):
            mm[2 * positions[j]] = m[2 * j]
            mm[2 * positions[j] + 1] = m[2 * j + 1]
        out[tuple(mm)] = c
    return host.element(out)


def zero_divisor_from_norm_zero(A: SymbolAlgebra, f):
    """Zero divisor of [alpha,beta) built from f in F[x] with N(f) = 0."""
    host = A.tensor()
    a = host.embed_ext(0, f)
    cof = host.one()
    for i in range(1, A.p):
        cof = cof * host.embed_ext(0, f.conjugate(i))
    assert not a.is_zero() and (a * cof).is_zero()
    return a


def find_zero_divisor(A: SymbolAlgebra, budget=2):
    """A nonzero element with singular left multiplication, or None.

    Finite base fields: decided exactly (the Artin-Schreier algebra either
    splits off a root of x^p - x = alpha, or beta is searched for in the norm
    group of the field extension; over a finite field the norm map is onto,
    so a witness always exists).  Rational/Laurent fields: bounded search for
    rational witnesses up to the budget; None means budget exhausted, not
    proven nonsplit.
    """
    field = A.field
    K = ArtinSchreierExtension(A.alpha)
    host = A.tensor()

    def from_norm_one(f):
        # f in K with N(f) = beta: (f^-1 y)^p = 1, so f^-1 y - 1 kills the
        # geometric sum
        Y = host.embed_ext(0, f.inverse()) * host.y(0)
        a = Y - 1
        cof = host.zero()
        for i in range(A.p):
            cof = cof + Y ** i
        assert (a * cof).is_zero() and not a.is_zero()
        return a

    if field.is_finite:
        roots = field.wp_solve(A.alpha)
        if roots:
            return zero_divisor_from_norm_zero(A, K.x - K.from_base(roots[0]))
        for f in _ext_candidates_finite(K):
            if f.norm() == A.beta:
                return from_norm_one(f)
        return None

    # rational / Laurent-local base field
    roots = wp_solve_ratfunc(A.alpha)
    if roots:
        return zero_divisor_from_norm_zero(A, K.x - K.from_base(roots[0]))
    pool = laurent_pool(field, budget)
    for f in _ext_candidates_pool(K, pool):
        n = f.norm()
        if n.is_zero():
            return zero_divisor_from_norm_zero(A, f)
        ratio = n / A.beta
        root = ratio.pth_root()
        if root is not None and not root.is_zero():
            return from_norm_one(f.scale(field.one / root))
    return None


def _ext_candidates_finite(K):
    els = K.base.elements()
    out = []
    for coords in _coord_tuples(els, K.p):
        f = K.element(list(coords))
        if not f.is_zero():
            out.append(f)
    return out


def _ext_candidates_pool(K, pool):
    for coords in _coord_tuples(pool, K.p):
        f = K.element(list(coords))
        if not f.is_zero():
            yield f


def _coord_tuples(pool, n):
    if n == 0:
        yield ()
        return
    for rest in _coord_tuples(pool, n - 1):
        for v in pool:
            yield rest + (v,)
