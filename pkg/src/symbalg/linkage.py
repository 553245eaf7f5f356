"""Slot modification, common-slot linkage, and symbol-length reduction.

The central object is the degree-p form phi attached to a tensor product of
symbol algebras on V = F + F + F[x_1] + ... + F[x_k]:

    phi(u, v, f_1, ..., f_k) = u^p (a_1+...+a_k) - u^(p-1) v + v^p
                               + N(f_1) b_1 + ... + N(f_k) b_k.

A zero with u != 0 lets the whole left-slot sum be concentrated into the
first factor (case a); a zero with u = 0 concentrates norm values into the
second slot (case b); any zero at all makes the first factor a matrix
algebra (case c), certified here by an explicit zero divisor.  Common-slot
linkage runs the same machinery on the difference form of two products, and
the reduction loop repeatedly links the first factor against the rest and
merges.  Every transformation is a chain of certificate-producing rewrite
steps collected into a trace.
"""

from __future__ import annotations

from .algebra import SymbolAlgebra, find_zero_divisor, zero_divisor_from_norm_zero
from .errors import (BudgetExhaustedError, FieldMismatchError,
                     HypothesisGateError, PreconditionError)
from .extension import ArtinSchreierExtension, norm_form
from .fields import degree_bound, laurent_pool, u_invariant
from .forms import MultiPoly
from .rewrite import (Presentation, RewriteTrace, apply_pair, apply_single,
                      lift_trace, presentation, rebase, split_recognize)


class SlotVector:
    """A point of V = F + F + F[x_1] + ... + F[x_k]."""

    __slots__ = ("host", "u", "v", "fs")

    def __init__(self, host, u, v, fs):
        if len(fs) != host.k:
            raise PreconditionError("one extension component per factor required")
        self.host = host
        self.u = u
        self.v = v
        self.fs = list(fs)

    def flatten(self):
        out = [self.u, self.v]
        for f in self.fs:
            out.extend(f.coordinates())
        return out

    def is_zero_vector(self):
        return self.u.is_zero() and self.v.is_zero() and all(f.is_zero() for f in self.fs)

    def scaled_by_inverse_u(self):
        iu = self.host.field.one / self.u
        return SlotVector(self.host, self.host.field.one, self.v * iu,
                          [f.scale(iu) for f in self.fs])

    def __repr__(self):
        return f"SlotVector(u={self.u!r}, v={self.v!r}, fs={self.fs!r})"


class PhiForm:
    """The degree-p slot-modification form of a tensor product."""

    __slots__ = ("host", "poly", "exts")

    def __init__(self, host, poly, exts):
        self.host = host
        self.poly = poly
        self.exts = exts

    @property
    def nvars(self):
        return 2 + self.host.k * self.host.p

    def evaluate(self, w: SlotVector):
        return self.poly.evaluate(w.flatten())

    def defining_value(self, w: SlotVector):
        """The defining expression computed through norms directly; the
        polynomial must agree with this on every vector."""
        host = self.host
        p = host.p
        total = host.field.zero
        for A in host.factors:
            total = total + A.alpha
        total = total * w.u ** p - w.u ** (p - 1) * w.v + w.v ** p
        for A, f in zip(host.factors, w.fs):
            total = total + f.norm() * A.beta
        return total

    def slot_vector(self, flat):
        host = self.host
        p = host.p
        fs = []
        for i in range(host.k):
            coords = flat[2 + i * p: 2 + (i + 1) * p]
            fs.append(self.exts[i].from_coordinates(coords))
        return SlotVector(host, flat[0], flat[1], fs)


def build_phi(T: Presentation) -> PhiForm:
    field = T.field
    p = T.p
    n = 2 + T.k * p
    poly = MultiPoly.zero(field, n)
    total_alpha = field.zero
    for A in T.factors:
        total_alpha = total_alpha + A.alpha
    poly = poly + MultiPoly.variable(field, n, 0, p).scale(total_alpha)
    uv = MultiPoly.variable(field, n, 0, p - 1) * MultiPoly.variable(field, n, 1)
    poly = poly - uv
    poly = poly + MultiPoly.variable(field, n, 1, p)
    exts = []
    for i, A in enumerate(T.factors):
        K = ArtinSchreierExtension(A.alpha)
        exts.append(K)
        poly = poly + norm_form(K).embed(n, 2 + i * p).scale(A.beta)
    return PhiForm(T, poly, exts)


# ---------------------------------------------------------------------------
# zero searches

def _exhaustive_zero(field, nvars, value_of):
    """First projective zero over a finite field (first nonzero coord = 1),
    scanning coordinates by element code; None when the form is anisotropic."""
    els = field.elements()
    z = field.zero

    def tails(n):
        if n == 0:
            yield ()
            return
        for e in els:
            for rest in tails(n - 1):
                yield (e,) + rest

    for lead in range(nvars):
        head = (z,) * lead + (field.one,)
        for tail in tails(nvars - lead - 1):
            vec = list(head + tail)
            if value_of(vec).is_zero():
                return vec
    return None


def _bounded_zero(field, nvars, value_of, budget):
    """Graded bounded search over Laurent-polynomial coordinates."""
    for depth in range(budget + 1):
        pool = laurent_pool(field, depth)

        def tails(n):
            if n == 0:
                yield ()
                return
            for e in pool:
                for rest in tails(n - 1):
                    yield (e,) + rest

        for vec in tails(nvars):
            if all(c.is_zero() for c in vec):
                continue
            if value_of(list(vec)).is_zero():
                return list(vec)
    return None


def find_isotropic(form, budget=1):
    """A nontrivial zero of the form: exhaustive projective enumeration over
    finite fields (None = anisotropic, decided), graded bounded enumeration
    over Laurent/rational fields (budget exhaustion raises)."""
    if isinstance(form, PhiForm):
        poly, field, n = form.poly, form.host.field, form.nvars
        wrap = form.slot_vector
    else:
        poly, field, n = form, form.field, form.nvars
        wrap = lambda flat: flat
    if field.is_finite:
        flat = _exhaustive_zero(field, n, poly.evaluate)
        return wrap(flat) if flat is not None else None
    flat = _bounded_zero(field, n, poly.evaluate, budget)
    if flat is None:
        raise BudgetExhaustedError("no zero found within the enumeration budget")
    return wrap(flat)


def _phi_quadratic_blocks(T: Presentation, extra_alpha=None):
    """For p = 2 the slot form is the quadratic form
    [sum alpha, 1] | b_1[a_1,1] | ... ; returns (QuadraticForm, unscale)
    where unscale maps a block witness back to slot coordinates."""
    from .quadform import QuadraticForm, scale_pair
    field = T.field
    total = field.zero if extra_alpha is None else extra_alpha
    for A in T.factors:
        total = total + A.alpha
    pairs = [(total, field.one)]
    scales = [field.one]
    for A in T.factors:
        pairs.append(scale_pair(A.beta, (A.alpha, field.one)))
        scales.append(A.beta)

    def unscale(witness):
        out = []
        for i, c in enumerate(scales):
            u, v = witness[2 * i], witness[2 * i + 1]
            out.extend([u / c, v])
        return out

    return QuadraticForm(field, pairs), unscale


def _phi_zero(T, phi, budget, quadratic):
    """(SlotVector or None, decided: bool) for the product's own form."""
    field = T.field
    if field.is_finite:
        flat = _exhaustive_zero(field, phi.nvars, phi.poly.evaluate)
        return (phi.slot_vector(flat) if flat is not None else None), True
    if quadratic and field.p == 2 and getattr(field, "is_local", False):
        from .quadform import is_isotropic
        q, unscale = _phi_quadratic_blocks(T)
        res = is_isotropic(q, budget)
        if res.status == "anisotropic":
            return None, True
        if res.witness is not None:
            w = phi.slot_vector(unscale(res.witness))
            assert phi.evaluate(w).is_zero()
            return w, True
        return None, False  # isotropic, but no rational witness found
    flat = _bounded_zero(field, phi.nvars, phi.poly.evaluate, budget)
    return (phi.slot_vector(flat) if flat is not None else None), flat is not None


# ---------------------------------------------------------------------------
# Proposition cases

def apply_case_a(T: Presentation, w: SlotVector):
    """Concentrate the whole left-slot sum in the first factor using a slot
    vector with u != 0; the first slot of the output is phi(1, v/u, f/u)."""
    if w.u.is_zero():
        raise PreconditionError("case (a) needs u != 0")
    phi = build_phi(T)
    ws = w.scaled_by_inverse_u()
    trace = RewriteTrace(T)
    cur = T
    for i, f in enumerate(ws.fs):
        if not f.is_zero() and not f.norm().is_zero():
            # [a, b) -> [a, N(f)b) -> [a + N(f)b, N(f)b)
            cur, step = apply_single(cur, i, "ScaleSecond", f)
            trace.append(step)
            cur, step = apply_single(cur, i, "AddBetaToAlpha")
            trace.append(step)
    for i in range(1, cur.k):
        cur, step = apply_pair(cur, 0, i, "TransferAlpha")
        trace.append(step)
    if not ws.v.is_zero():
        cur, step = apply_single(cur, 0, "AddWpToAlpha", ws.v)
        trace.append(step)
    expected = phi.evaluate(ws)
    assert cur.factors[0].alpha == expected, "case (a) slot mismatch"
    return cur, trace


def _default_reorder(w: SlotVector):
    nz = [i for i, f in enumerate(w.fs) if not f.is_zero()]
    zz = [i for i, f in enumerate(w.fs) if f.is_zero()]
    return nz + zz


def apply_case_b(T: Presentation, w: SlotVector, reorder=None):
    """Concentrate norm values in the second slot of the first factor using
    a slot vector with u = 0; the second slot becomes phi(0, v, f)."""
    if not w.u.is_zero():
        raise PreconditionError("case (b) needs u = 0")
    field = T.field
    reorder = list(reorder) if reorder is not None else _default_reorder(w)
    trace = RewriteTrace(T)
    cur, step = rebase(T, reorder)
    w = SlotVector(cur, w.u, w.v, [w.fs[i] for i in reorder])
    trace.append(step)
    t = 0
    while t < cur.k and not w.fs[t].is_zero():
        t += 1
    if t == 0:
        raise PreconditionError("case (b) needs at least one nonzero f, leading after reorder")
    for i in range(t, cur.k):
        if not w.fs[i].is_zero():
            raise PreconditionError("nonzero f components must come first in the reorder")
    # precondition scan: partial sums and the final slot value
    partial = field.zero
    norms = []
    for s in range(t):
        n = w.fs[s].norm()
        if n.is_zero():
            raise PreconditionError(f"component {s + 1} has norm zero")
        norms.append(n)
        partial = partial + n * cur.factors[s].beta
        if partial.is_zero():
            raise PreconditionError(f"partial sum vanishes at s = {s + 1}")
    total = partial + w.v ** field.p
    if total.is_zero():
        raise PreconditionError("total norm sum plus v^p vanishes")
    phi_value = build_phi(cur).evaluate(w)
    for i in range(t):
        cur, step = apply_single(cur, i, "ScaleSecond", w.fs[i])
        trace.append(step)
    for i in range(1, t):
        cur, step = apply_pair(cur, 0, i, "MergeSlots")
        trace.append(step)
    if not w.v.is_zero():
        cur, step = apply_single(cur, 0, "AddPthPowerToBeta", w.v)
        trace.append(step)
    assert cur.factors[0].beta == phi_value == total, "case (b) slot mismatch"
    return cur, trace


def split_first_via_zero(T: Presentation, w: SlotVector):
    """Realize case (c): a zero of phi makes the first factor explicitly
    split.  Returns (T', trace, witness) with T'.factors[0] recognizably
    split and a verified zero divisor for it."""
    field = T.field
    p = T.p
    if not w.u.is_zero():
        cur, trace = apply_case_a(T, w)
        assert cur.factors[0].alpha.is_zero()
        witness = find_zero_divisor(cur.factors[0])
        return cur, trace, witness
    # u = 0: route by the degeneracy of the zero
    for i, f in enumerate(w.fs):
        if not f.is_zero() and f.norm().is_zero():
            # that factor contains the zero divisor f(x_i) outright
            perm = [i] + [j for j in range(T.k) if j != i]
            trace = RewriteTrace(T)
            cur, step = rebase(T, perm)
            trace.append(step)
            witness = zero_divisor_from_norm_zero(cur.factors[0], f)
            return cur, trace, witness
    nz = [i for i in range(T.k) if not w.fs[i].is_zero()]
    if not nz:
        raise PreconditionError("zero vector cannot split anything")
    reorder = _default_reorder(w)
    trace = RewriteTrace(T)
    cur, step = rebase(T, reorder)
    w = SlotVector(cur, w.u, w.v, [w.fs[i] for i in reorder])
    trace.append(step)
    t = len(nz)
    # minimal s with vanishing partial sum, if any
    partial = field.zero
    s_min = None
    for s in range(t):
        partial = partial + w.fs[s].norm() * cur.factors[s].beta
        if partial.is_zero():
            s_min = s + 1
            break
    if s_min is not None:
        for i in range(s_min):
            cur, step = apply_single(cur, i, "ScaleSecond", w.fs[i])
            trace.append(step)
        for i in range(1, s_min - 1):
            cur, step = apply_pair(cur, 0, i, "MergeSlots")
            trace.append(step)
        # now slot sums make the pair (factor s_min-1, factor 0) complementary:
        # beta_0 = -beta_{s-1}; transferring leaves [alpha', -1) in front
        cur, step = apply_pair(cur, s_min - 1, 0, "TransferAlpha")
        trace.append(step)
        assert cur.factors[0].beta == -field.one
        if p != 2:
            K0 = ArtinSchreierExtension(cur.factors[0].alpha)
            cur, step = apply_single(cur, 0, "ScaleSecond", K0.from_base(-field.one))
            trace.append(step)
        assert cur.factors[0].beta == field.one
        witness = find_zero_divisor(cur.factors[0])
        return cur, trace, witness
    # all partial sums nonzero: the total must be -v^p with v != 0
    if w.v.is_zero():
        raise PreconditionError("vector is not a zero of the slot form")
    for i in range(t):
        cur, step = apply_single(cur, i, "ScaleSecond", w.fs[i])
        trace.append(step)
    for i in range(1, t):
        cur, step = apply_pair(cur, 0, i, "MergeSlots")
        trace.append(step)
    assert cur.factors[0].beta == -(w.v ** p)
    K0 = ArtinSchreierExtension(cur.factors[0].alpha)
    cur, step = apply_single(cur, 0, "ScaleSecond", K0.from_base(-(field.one / w.v)))
    trace.append(step)
    assert cur.factors[0].beta == field.one
    witness = find_zero_divisor(cur.factors[0])
    return cur, trace, witness


# ---------------------------------------------------------------------------
# common slot

def _split_to_left(T, zero, target_alpha):
    """Split the first factor via the zero, then present it as
    [target_alpha, 1)."""
    cur, trace, witness = split_first_via_zero(T, zero)
    to = SymbolAlgebra(target_alpha, T.field.one)
    cur, step = split_recognize(cur, 0, to=to, witness=witness)
    trace.append(step)
    return cur, trace


def common_slot_impl(A: Presentation, B: Presentation, budget=1, quadratic=False):
    if A.field != B.field:
        raise FieldMismatchError("products over different fields")
    if not A.factors or not B.factors:
        raise PreconditionError("common slot needs nonempty products")
    field = A.field
    empty_A = RewriteTrace(A)
    empty_B = RewriteTrace(B)

    # recognizably split first factors shortcut the whole search
    if A.factors[0].is_recognizably_split():
        gamma = B.factors[0].alpha
        witness = find_zero_divisor(A.factors[0])
        cur, step = split_recognize(A, 0, to=SymbolAlgebra(gamma, field.one), witness=witness)
        trA = RewriteTrace(A)
        trA.append(step)
        return ("Left", cur, B, (trA, empty_B))
    if B.factors[0].is_recognizably_split():
        alpha = A.factors[0].alpha
        witness = find_zero_divisor(B.factors[0])
        cur, step = split_recognize(B, 0, to=SymbolAlgebra(alpha, field.one), witness=witness)
        trB = RewriteTrace(B)
        trB.append(step)
        return ("Left", A, cur, (empty_A, trB))

    # already sharing a slot: nothing to do
    if A.factors[0].alpha == B.factors[0].alpha:
        return ("Left", A, B, (empty_A, empty_B))
    if A.factors[0].beta == B.factors[0].beta:
        return ("Right", A, B, (empty_A, empty_B))

    phiA = build_phi(A)
    phiB = build_phi(B)
    zA, decidedA = _phi_zero(A, phiA, budget, quadratic)
    if zA is not None:
        A2, trA = _split_to_left(A, zA, B.factors[0].alpha)
        return ("Left", A2, B, (trA, empty_B))
    zB, decidedB = _phi_zero(B, phiB, budget, quadratic)
    if zB is not None:
        B2, trB = _split_to_left(B, zB, A.factors[0].alpha)
        return ("Left", A, B2, (empty_A, trB))

    # both forms anisotropic (or at least zero-free in budget): difference form
    w = _difference_zero(A, B, phiA, phiB, budget, quadratic)
    if w is None:
        raise BudgetExhaustedError("no zero of the difference form within budget")
    wA, wB = w
    if not wA.u.is_zero():
        A2, trA = apply_case_a(A, wA)
        B2, trB = apply_case_a(B, wB)
        assert A2.factors[0].alpha == B2.factors[0].alpha
        return ("Left", A2, B2, (trA, trB))
    # u = 0 branch: reroute degenerate vectors, else case (b) on both sides
    if all(f.is_zero() for f in wB.fs):
        A2, trA = _split_to_left(A, wA, B.factors[0].alpha)
        return ("Left", A2, B, (trA, empty_B))
    if all(f.is_zero() for f in wA.fs):
        zB = SlotVector(B, field.zero, -wA.v, wB.fs)
        B2, trB = _split_to_left(B, zB, A.factors[0].alpha)
        return ("Left", A, B2, (empty_A, trB))
    if _degenerate_for_case_b(A, wA):
        A2, trA = _split_to_left(A, wA, B.factors[0].alpha)
        return ("Left", A2, B, (trA, empty_B))
    if _degenerate_for_case_b(B, wB):
        B2, trB = _split_to_left(B, wB, A.factors[0].alpha)
        return ("Left", A, B2, (empty_A, trB))
    A2, trA = apply_case_b(A, wA)
    B2, trB = apply_case_b(B, wB)
    assert A2.factors[0].beta == B2.factors[0].beta
    return ("Right", A2, B2, (trA, trB))


def _degenerate_for_case_b(T, w):
    """True when the u=0 vector fails a case (b) precondition, which makes
    the product's own form isotropic and the split route applicable."""
    field = T.field
    partial = field.zero
    for i, f in enumerate(w.fs):
        if f.is_zero():
            continue
        n = f.norm()
        if n.is_zero():
            return True
        partial = partial + n * T.factors[i].beta
        if partial.is_zero():
            return True
    return (partial + w.v ** field.p).is_zero()


def _difference_zero(A, B, phiA, phiB, budget, quadratic):
    """Zero of phi_A(u,v,f) - phi_B(u,0,f'); returns (SlotVector_A,
    SlotVector_B) on the shared u, or None."""
    field = A.field
    p = field.p
    ka, kb = A.k, B.k
    n = 2 + (ka + kb) * p

    if quadratic and p == 2 and getattr(field, "is_local", False):
        from .quadform import QuadraticForm, is_isotropic, scale_pair
        total = field.zero
        for f in A.factors + B.factors:
            total = total + f.alpha
        pairs = [(total, field.one)]
        scales = [field.one]
        for f in A.factors + B.factors:
            pairs.append(scale_pair(f.beta, (f.alpha, field.one)))
            scales.append(f.beta)
        res = is_isotropic(QuadraticForm(field, pairs), budget)
        if res.witness is None:
            return None
        flat = []
        for i, c in enumerate(scales):
            u, v = res.witness[2 * i], res.witness[2 * i + 1]
            flat.extend([u / c, v])
        shared_u, shared_v = flat[0], flat[1]
        fa = flat[2:2 + 2 * ka]
        fb = flat[2 + 2 * ka:]
        wA = phiA.slot_vector([shared_u, shared_v] + fa)
        wB = phiB.slot_vector([shared_u, field.zero] + fb)
        assert (phiA.evaluate(wA) - phiB.evaluate(wB)).is_zero()
        return wA, wB

    # generic: assemble the difference polynomial on (u, v, fA..., fB...)
    polyA = phiA.poly.embed(n, 0)
    shifted = {}
    for e, c in phiB.poly.coeffs.items():
        if e[1]:
            continue  # psi is evaluated at v = 0
        ee = [0] * n
        ee[0] = e[0]
        for j, k in enumerate(e[2:]):
            ee[2 + ka * p + j] = k
        key = tuple(ee)
        shifted[key] = shifted.get(key, field.zero) + c
    diff = polyA - MultiPoly(field, n, shifted)
    if field.is_finite:
        flat = _exhaustive_zero(field, n, diff.evaluate)
    else:
        flat = _bounded_zero(field, n, diff.evaluate, budget)
    if flat is None:
        return None
    wA = phiA.slot_vector(flat[:2 + ka * p])
    wB = phiB.slot_vector([flat[0], field.zero] + flat[2 + ka * p:])
    return wA, wB


def common_slot(A: Presentation, B: Presentation, budget=1):
    """Modify the two products so their first factors share a slot.

    Returns (side, A', B', (trace_A, trace_B)): side "Left" means the first
    slots agree, "Right" the second slots.  The zero search runs by plain
    enumeration; char2_common_slot in the quadratic-form module drives the
    same orchestration with the exact local quadratic solver.
    """
    return common_slot_impl(A, B, budget, quadratic=False)


# ---------------------------------------------------------------------------
# symbol-length reduction

class ReduceResult:
    __slots__ = ("presentation", "trace", "budget_exhausted")

    def __init__(self, presentation, trace, budget_exhausted=False):
        self.presentation = presentation
        self.trace = trace
        self.budget_exhausted = budget_exhausted

    def __repr__(self):
        return f"ReduceResult({self.presentation!r}, steps={len(self.trace)})"


def reduce_symbol_length(T: Presentation, budget=1):
    """Shorten a presentation by repeated linkage and merging.

    Loop: drop recognizably split factors (with zero-divisor witnesses),
    link the first factor against the rest, merge the pair sharing a slot.
    Terminates at the declared bound for the field: empty over finite
    fields, at most one symbol over GF(q)((t)).
    """
    field = T.field
    p = field.p
    d = degree_bound(field)
    u = u_invariant(field)
    if d is None and u is None:
        raise HypothesisGateError("field declares neither a degree-p bound nor u(F)")
    quadratic = (p == 2)
    trace = RewriteTrace(T)
    cur = T
    exhausted = False

    def mergeable(k):
        if k < 2:
            return False
        if p == 2 and u is not None:
            return 2 * k >= u
        return p * k >= d - 1

    def drop_one_split_factor():
        """Drop a factor that is split and witnessable: recognizably split,
        or killed by a zero of its own slot form.  Returns True on a drop."""
        nonlocal cur, exhausted
        for i in range(len(cur.factors)):
            if cur.factors[i].is_recognizably_split():
                witness = find_zero_divisor(cur.factors[i])
                cur, step = split_recognize(cur, i, to=None, witness=witness)
                trace.append(step)
                return True
        for i in range(len(cur.factors)):
            single = presentation([cur.factors[i]], field=field)
            phi = build_phi(single)
            z, decided = _phi_zero(single, phi, budget, quadratic)
            if z is None:
                exhausted = exhausted or not decided
                continue
            single2, tr, witness = split_first_via_zero(single, z)
            prefix = cur.factors[:i]
            suffix = cur.factors[i + 1:]
            lifted = lift_trace(tr, list(prefix), list(suffix))
            trace.extend(lifted)
            cur = lifted.final
            cur, step = split_recognize(cur, i, to=None, witness=witness)
            trace.append(step)
            return True
        return False

    while True:
        if drop_one_split_factor():
            continue
        k = len(cur.factors)
        if k < 2 or not mergeable(k):
            break
        A = presentation([cur.factors[0]], field=field)
        B = presentation(cur.factors[1:], field=field)
        try:
            side, A2, B2, (trA, trB) = common_slot_impl(A, B, budget, quadratic)
        except BudgetExhaustedError:
            exhausted = True
            break
        lifted_A = lift_trace(trA, [], list(B.factors))
        trace.extend(lifted_A)
        lifted_B = lift_trace(trB, list(A2.factors), [])
        trace.extend(lifted_B)
        combined = presentation(list(A2.factors) + list(B2.factors), field=field)
        rule = "MergeSameAlpha" if side == "Left" else "MergeSameBeta"
        combined, step = apply_pair(combined, 0, 1, rule)
        trace.append(step)
        cur = combined
    if p == 2 and u is not None:
        target = max(u // 2 - 1, 0)
    else:
        target = max(-(-(d - 1) // p) - 1, 0)
    return ReduceResult(cur, trace, len(cur.factors) > target)
