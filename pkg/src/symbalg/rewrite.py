"""Certificate-producing rewrite steps on symbol-algebra presentations.

Each rule transforms presentation data and returns, alongside the result, a
RewriteStep holding the touched positions, the rule parameters needed for a
deterministic replay, and explicit generator-pair certificates verified in
the smallest host containing the touched factors.  Over a Laurent-local base
field every step also records the total residue invariant before and after;
the two must agree, and the step constructor checks that they do.

Rules on one factor:   scale_second_slot, add_beta_to_alpha, add_wp_to_alpha,
                       add_pth_power_to_beta, split_recognize
Rules on two factors:  transfer_alpha, merge_slots, merge_same_alpha,
                       merge_same_beta
"""

from __future__ import annotations

from .algebra import (AlgebraElement, SymbolAlgebra, SymbolCertificate,
                      TensorProduct, centralizer_basis, solve_companion,
                      verify_symbol_pair)
from .errors import PreconditionError
from .extension import ArtinSchreierExtension, ExtElement

RULES = ("ScaleSecond", "AddBetaToAlpha", "AddWpToAlpha", "AddPthPowerToBeta",
         "SplitRecognize", "TransferAlpha", "MergeSlots", "MergeSameAlpha",
         "MergeSameBeta")


class Presentation(TensorProduct):
    """Tensor product that may be empty (the split class, just the field)."""

    def __init__(self, factors, field=None):
        factors = list(factors)
        if factors:
            super().__init__(factors)
        else:
            if field is None:
                raise ValueError("empty presentation needs an explicit field")
            self.field = field
            self.p = field.p
            self.factors = []
            self.k = 0
            self.dimension = 1
            self._tables = {}

    def replace(self, updates, drop=()):
        out = list(self.factors)
        for i, f in updates.items():
            out[i] = f
        out = [f for i, f in enumerate(out) if i not in drop]
        return Presentation(out, field=self.field)

    def __repr__(self):
        if not self.factors:
            return "<split (empty product)>"
        return super().__repr__()


def presentation(factors, field=None):
    return Presentation(factors, field=field)


class RewriteStep:
    """One applied rule instance with its certificates and oracle data."""

    __slots__ = ("rule", "params", "before", "after", "certificates",
                 "invariant_before", "invariant_after")

    def __init__(self, rule, params, before, after, certificates):
        assert rule in RULES
        self.rule = rule
        self.params = params
        self.before = before
        self.after = after
        self.certificates = certificates
        self.invariant_before = None
        self.invariant_after = None
        if getattr(before.field, "is_local", False):
            from .local import total_invariant
            self.invariant_before = total_invariant(before)
            self.invariant_after = total_invariant(after)
            if self.invariant_before != self.invariant_after:
                raise AssertionError(
                    f"{rule} changed the local invariant: "
                    f"{self.invariant_before} -> {self.invariant_after}")

    def __repr__(self):
        return f"<{self.rule} {self.params}>"


class Rebase:
    """Reordering of tensor factors: a canonical isomorphism, not a rule.

    after.factors[i] == before.factors[perm[i]]; recorded so traces stay
    chain-consistent across the factor permutations Proposition-style case
    analysis needs."""

    __slots__ = ("rule", "params", "before", "after", "certificates",
                 "invariant_before", "invariant_after")

    def __init__(self, before, perm):
        if sorted(perm) != list(range(before.k)):
            raise ValueError("not a permutation of the factors")
        self.rule = "Rebase"
        self.params = {"perm": list(perm)}
        self.before = before
        self.after = Presentation([before.factors[i] for i in perm], field=before.field)
        self.certificates = []
        self.invariant_before = None
        self.invariant_after = None

    def __repr__(self):
        return f"<Rebase {self.params['perm']}>"


class RewriteTrace:
    """Chain of steps; consecutive presentations must match exactly."""

    def __init__(self, start):
        self.start = start
        self.steps = []

    def append(self, step):
        if self.steps and step.before != self.steps[-1].after:
            raise ValueError("trace chain broken: step.before != previous after")
        if not self.steps and step.before != self.start:
            raise ValueError("trace chain broken at the start")
        self.steps.append(step)

    def extend(self, other):
        for s in other.steps:
            self.append(s)

    @property
    def final(self):
        return self.steps[-1].after if self.steps else self.start

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def _checked(cert):
    rep = verify_symbol_pair(cert)
    if not rep:
        raise AssertionError(f"emitted certificate failed verification: {rep.failed}")
    return cert


# ---------------------------------------------------------------------------
# single-factor rules.  Each `*_core` takes the SymbolAlgebra and returns
# (new_symbol, certificates, params); `apply_single` lifts it to a position
# inside a presentation.

def _scale_second_slot_core(A: SymbolAlgebra, f: ExtElement):
    n = f.norm()
    if n.is_zero():
        raise PreconditionError("scaling element has norm zero")
    out = SymbolAlgebra(A.alpha, n * A.beta)
    host = A.tensor()
    X = host.x()
    Y = host.embed_ext(0, f) * host.y()
    cert = _checked(SymbolCertificate(X, Y, out.alpha, out.beta))
    return out, [cert], {"f": [repr(c) for c in f.coeffs]}


def _add_beta_to_alpha_core(A: SymbolAlgebra):
    out = SymbolAlgebra(A.alpha + A.beta, A.beta)
    host = A.tensor()
    cert = _checked(SymbolCertificate(host.x() + host.y(), host.y(), out.alpha, out.beta))
    return out, [cert], {}


def _add_wp_to_alpha_core(A: SymbolAlgebra, v):
    out = SymbolAlgebra(A.alpha + v ** A.p - v, A.beta)
    host = A.tensor()
    cert = _checked(SymbolCertificate(host.x() + v, host.y(), out.alpha, out.beta))
    return out, [cert], {"v": repr(v)}


def _add_pth_power_to_beta_core(A: SymbolAlgebra, v):
    beta2 = A.beta + v ** A.p
    if beta2.is_zero():
        raise PreconditionError("beta + v^p must be nonzero")
    host = A.tensor()
    Y2 = host.y() + v
    X2 = solve_companion(host, Y2)
    if X2 is None:
        raise AssertionError("no companion generator exists for y+v")
    w = X2 ** A.p - X2
    if not w.is_scalar():
        raise AssertionError("companion's Artin-Schreier value is not central")
    alpha2 = w.scalar_part()
    out = SymbolAlgebra(alpha2, beta2)
    cert = _checked(SymbolCertificate(X2, Y2, alpha2, beta2))
    return out, [cert], {"v": repr(v)}


def _split_recognize_core(A: SymbolAlgebra, to: SymbolAlgebra | None, witness):
    if not A.is_recognizably_split() and witness is None:
        raise PreconditionError("split_recognize needs [alpha,1), [0,beta) or a witness")
    params = {}
    if witness is not None:
        from .algebra import inverse_or_zero_divisor
        if witness.host != A.tensor():
            raise PreconditionError("witness must live in the factor's own host")
        if inverse_or_zero_divisor(witness)[0] != "zerodiv":
            raise PreconditionError("claimed witness is not a zero divisor")
        params["witness"] = {"".join(map(str, m)): repr(c) for m, c in sorted(witness.coeffs.items())}
    if to is not None:
        params["to"] = {"alpha": repr(to.alpha), "beta": repr(to.beta)}
    return to, [], params


SINGLE_CORES = {
    "ScaleSecond": _scale_second_slot_core,
    "AddBetaToAlpha": _add_beta_to_alpha_core,
    "AddWpToAlpha": _add_wp_to_alpha_core,
    "AddPthPowerToBeta": _add_pth_power_to_beta_core,
}


def apply_single(T: Presentation, i, rule, *args):
    if rule == "SplitRecognize":
        out, certs, params = _split_recognize_core(T.factors[i], *args)
        after = T.replace({i: out}) if out is not None else T.replace({}, drop=(i,))
    else:
        out, certs, params = SINGLE_CORES[rule](T.factors[i], *args)
        after = T.replace({i: out})
    params = {"factor": i, **params}
    step = RewriteStep(rule, params, T, after, certs)
    return after, step


# plain one-symbol entry points (the lemma-level API)

def scale_second_slot(A: SymbolAlgebra, f: ExtElement):
    """[alpha, beta) -> [alpha, N(f) beta), certified by (x, f y)."""
    T = presentation([A])
    after, step = apply_single(T, 0, "ScaleSecond", f)
    return after.factors[0], step


def add_beta_to_alpha(A: SymbolAlgebra):
    """[alpha, beta) -> [alpha+beta, beta), certified by (x+y, y)."""
    T = presentation([A])
    after, step = apply_single(T, 0, "AddBetaToAlpha")
    return after.factors[0], step


def add_wp_to_alpha(A: SymbolAlgebra, v):
    """[alpha, beta) -> [alpha + v^p - v, beta), certified by (x+v, y)."""
    T = presentation([A])
    after, step = apply_single(T, 0, "AddWpToAlpha", v)
    return after.factors[0], step


def add_pth_power_to_beta(A: SymbolAlgebra, v):
    """[alpha, beta) -> [alpha', beta + v^p): the new second generator is
    y+v and its companion alpha' comes out of the deterministic linear solve."""
    T = presentation([A])
    after, step = apply_single(T, 0, "AddPthPowerToBeta", v)
    return after.factors[0], step


# ---------------------------------------------------------------------------
# two-factor rules

def _pair_host(A, B):
    return TensorProduct([A, B])


def _y_inverse(host, beta, j):
    # y^-1 = beta^-1 y^(p-1)
    return host.y(j) ** (host.p - 1) * (host.field.one / beta)


def _transfer_alpha_core(A: SymbolAlgebra, B: SymbolAlgebra):
    host = _pair_host(A, B)
    X1 = host.x(0) + host.x(1)
    Y1 = host.y(0)
    U = _y_inverse(host, A.beta, 0) * host.y(1)
    out1 = SymbolAlgebra(A.alpha + B.alpha, A.beta)
    out2 = SymbolAlgebra(B.alpha, B.beta / A.beta)
    certs = [_checked(SymbolCertificate(X1, Y1, out1.alpha, out1.beta)),
             _checked(SymbolCertificate(host.x(1), U, out2.alpha, out2.beta))]
    return (out1, out2), certs, {}


def _merge_slots_core(A: SymbolAlgebra, B: SymbolAlgebra):
    bd = A.beta + B.beta
    if bd.is_zero():
        raise PreconditionError("beta + delta must be nonzero")
    host = _pair_host(A, B)
    X1 = host.x(0) + host.x(1)
    Y1 = host.y(0) + host.y(1)
    out1 = SymbolAlgebra(A.alpha + B.alpha, bd)
    cert1 = _checked(SymbolCertificate(X1, Y1, out1.alpha, out1.beta))
    space = centralizer_basis(host, [X1, Y1])
    if len(space) != host.p ** 2:
        raise AssertionError("centralizer of the merged pair has wrong dimension")
    U = _y_inverse(host, A.beta, 0) * host.y(1)
    XC = solve_companion(host, U, space)
    if XC is None:
        raise AssertionError("no companion for y^-1 w inside the centralizer")
    w = XC ** host.p - XC
    if not w.is_scalar():
        raise AssertionError("centralizer companion's Artin-Schreier value is not central")
    out2 = SymbolAlgebra(w.scalar_part(), B.beta / A.beta)
    cert2 = _checked(SymbolCertificate(XC, U, out2.alpha, out2.beta))
    return (out1, out2), [cert1, cert2], {}


def _merge_same_alpha_core(A: SymbolAlgebra, B: SymbolAlgebra):
    if A.alpha != B.alpha:
        raise PreconditionError("first slots differ")
    host = _pair_host(A, B)
    out = SymbolAlgebra(A.alpha, A.beta * B.beta)
    cert = _checked(SymbolCertificate(host.x(0), host.y(0) * host.y(1), out.alpha, out.beta))
    return (out,), [cert], {"dropped": "matrix factor"}


def _merge_same_beta_core(A: SymbolAlgebra, B: SymbolAlgebra):
    if A.beta != B.beta:
        raise PreconditionError("second slots differ")
    host = _pair_host(A, B)
    out = SymbolAlgebra(A.alpha + B.alpha, A.beta)
    cert = _checked(SymbolCertificate(host.x(0) + host.x(1), host.y(0), out.alpha, out.beta))
    return (out,), [cert], {"dropped": "matrix factor"}


PAIR_CORES = {
    "TransferAlpha": _transfer_alpha_core,
    "MergeSlots": _merge_slots_core,
    "MergeSameAlpha": _merge_same_alpha_core,
    "MergeSameBeta": _merge_same_beta_core,
}


def apply_pair(T: Presentation, i, j, rule):
    outs, certs, params = PAIR_CORES[rule](T.factors[i], T.factors[j])
    if len(outs) == 2:
        after = T.replace({i: outs[0], j: outs[1]})
    else:
        after = T.replace({i: outs[0]}, drop=(j,))
    params = {"first": i, "second": j, **params}
    step = RewriteStep(rule, params, T, after, certs)
    return after, step


def transfer_alpha(A: SymbolAlgebra, B: SymbolAlgebra):
    """(A, B) -> ([alpha+gamma, beta), [gamma, beta^-1 delta)) with the
    generator pairs (x+z, y) and (z, y^-1 w)."""
    T = presentation([A, B])
    after, step = apply_pair(T, 0, 1, "TransferAlpha")
    return (after.factors[0], after.factors[1]), step


def merge_slots(A: SymbolAlgebra, B: SymbolAlgebra):
    """(A, B) -> ([alpha+gamma, beta+delta), C); C is presented from the
    centralizer of the certified merged pair, generated by y^-1 w and its
    linear-solve companion."""
    T = presentation([A, B])
    after, step = apply_pair(T, 0, 1, "MergeSlots")
    return (after.factors[0], after.factors[1]), step


def merge_same_alpha(A: SymbolAlgebra, B: SymbolAlgebra):
    """[alpha,beta) (x) [alpha,gamma) -> [alpha, beta gamma); the split
    matrix factor is dropped from the presentation and noted in the step."""
    T = presentation([A, B])
    after, step = apply_pair(T, 0, 1, "MergeSameAlpha")
    return after.factors[0], step


def merge_same_beta(A: SymbolAlgebra, B: SymbolAlgebra):
    """[alpha,gamma) (x) [beta,gamma) -> [alpha+beta, gamma)."""
    T = presentation([A, B])
    after, step = apply_pair(T, 0, 1, "MergeSameBeta")
    return after.factors[0], step


def lift_entry(entry, prefix, suffix):
    """Re-express a step on a sub-presentation as a step on the full product
    with `prefix` factors in front and `suffix` factors behind."""
    off = len(prefix)
    before = Presentation(prefix + entry.before.factors + suffix, field=entry.before.field)
    if isinstance(entry, Rebase):
        perm = (list(range(off)) + [p + off for p in entry.params["perm"]]
                + list(range(off + entry.before.k, off + entry.before.k + len(suffix))))
        return Rebase(before, perm)
    after = Presentation(prefix + entry.after.factors + suffix, field=entry.after.field)
    params = dict(entry.params)
    for key in ("factor", "first", "second"):
        if key in params:
            params[key] = params[key] + off
    return RewriteStep(entry.rule, params, before, after, entry.certificates)


def lift_trace(trace, prefix, suffix):
    out = RewriteTrace(Presentation(prefix + trace.start.factors + suffix,
                                    field=trace.start.field))
    for entry in trace:
        out.append(lift_entry(entry, prefix, suffix))
    return out


def rebase(T: Presentation, perm):
    step = Rebase(T, perm)
    return step.after, step


def split_recognize(T: Presentation, i, to=None, witness=None):
    """Replace a split factor by another split presentation, or drop it.

    Legal when the factor is recognizably split ([alpha,1) or [0,beta)) or a
    zero-divisor witness is supplied; `to` must itself be recognizably split
    or None (drop)."""
    if to is not None and not to.is_recognizably_split():
        raise PreconditionError("replacement presentation is not recognizably split")
    return apply_single(T, i, "SplitRecognize", to, witness)
