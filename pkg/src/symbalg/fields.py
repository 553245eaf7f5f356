"""Field descriptors and the operations shared by every supported base field.

Supported constructions: GF(p), GF(p^n) with explicit modulus, GF(q)(t) as
exact fractions, and GF(q)((t)) with the same exact fraction representation
read locally.  Every construction exposes wp (the Artin-Schreier operator
v^p - v); wp_solve and canonical coset representatives are available where a
terminating procedure exists.

Each field also declares the ambient hypotheses the linkage machinery needs:
`degree_bound` is the declared maximal dimension of an anisotropic degree-p
form, `u_invariant` the nonsingular quadratic bound for p=2, and
`has_iq3_zero` whether the field is declared to kill the third power of the
quadratic fundamental ideal.  The declarations are field-plugin data, not
computed facts.
"""

from __future__ import annotations

from .errors import UnsupportedFieldError
from .gf import GF, GFElement
from .ratfunc import FunctionField, RatFuncElement, wp_solve_ratfunc


def prime_field(p):
    return GF(p)

def finite_field(p, modulus, genname="z"):
    return GF(p, modulus, genname)

def rational_function_field(base: GF, varname="t"):
    return FunctionField(base, varname, local=False)

def laurent_field(base: GF, varname="t"):
    return FunctionField(base, varname, local=True)


def wp(v):
    """v^p - v in v's field."""
    return v ** v.field.p - v


def wp_solve(field, c):
    """All v in the field with v^p - v = c; the set has 0 or p members.

    Only finite fields admit a terminating exhaustive procedure; other
    constructions raise.  (Rational solutions over GF(q)(t) are reachable
    through ratfunc.wp_solve_ratfunc, but that is not the full solution set
    of the Laurent field and is deliberately not exposed here.)
    """
    if not field.is_finite:
        raise UnsupportedFieldError("wp_solve is only defined over finite fields")
    return field.wp_solve(c)


def wp_canonical_rep(c):
    """Canonical representative of c modulo wp(F).

    Finite fields: the least int-coded member of the coset.  Laurent-local
    fields: the reduced principal part at t=0 with pole orders prime to p,
    plus the canonical constant (see symbalg.local).  GF(q)(t) without the
    local reading has no supported reduction.
    """
    field = c.field
    if field.is_finite:
        return field.wp_canonical_rep(c)
    if getattr(field, "is_local", False):
        from .local import reduce_wp_local
        return reduce_wp_local(c)
    raise UnsupportedFieldError("no canonical wp-coset representative over GF(q)(t)")


def in_wp_image(c):
    return wp_canonical_rep(c).is_zero()


# ---------------------------------------------------------------------------
# declared hypotheses (field plugin data)

def degree_bound(field):
    """Declared maximal dimension d of an anisotropic degree-p form, or None."""
    if field.is_finite:
        return field.p  # Chevalley-Warning
    if field.is_local:
        return field.p ** 2  # C_2 field
    return None


def u_invariant(field):
    """Declared u-invariant for p=2 fields, or None."""
    if field.p != 2:
        return None
    if field.is_finite:
        return 2
    if field.is_local:
        return 4
    return None


def has_iq3_zero(field):
    """Whether the plugin declares I_q^3 = 0 (p=2 only)."""
    return field.p == 2 and (field.is_finite or field.is_local)


# ---------------------------------------------------------------------------
# deterministic enumeration pools for searches

def finite_elements(field):
    if not field.is_finite:
        raise UnsupportedFieldError("finite enumeration over an infinite field")
    return field.elements()


def laurent_pool(field: FunctionField, depth):
    """All sums c_j t^j with -depth <= j <= depth, coefficients in GF(q),
    in a fixed order (grading by depth, then coefficient codes).  Used as the
    per-coordinate candidate pool of bounded local searches."""
    k = field.base
    pools = []
    seen = set()
    for s in range(depth + 1):
        width = 2 * s + 1
        batch = []
        for codes in _tuples(k.q, width):
            num = list(codes)
            # value = sum codes[i] * t^(i-s)
            den = (0,) * s + (1,) if s else (1,)
            el = field.element(tuple(num), den)
            key = (el.num, el.den)
            if key not in seen:
                seen.add(key)
                batch.append(el)
        batch.sort(key=lambda e: e.sort_key())
        pools.append(batch)
    flat = []
    for b in pools:
        flat.extend(b)
    return flat


def _tuples(q, n):
    if n == 0:
        yield ()
        return
    for rest in _tuples(q, n - 1):
        for v in range(q):
            yield (v,) + rest
