"""JSON forms of presentations, elements, and rewrite traces.

Schemas (stable, published through the CLI docs):

presentation:  {"p": int, "factors": [{"alpha": str, "beta": str}, ...]}
element:       {"<e1f1...>": "coeff", ...}   multi-index digit strings
certificate:   {"X": element, "Y": element, "alpha": str, "beta": str}
trace:         [{"rule": str, "params": {...}, "before": presentation,
                 "after": presentation, "certificates": [certificate, ...],
                 "oracle_invariant_before"?: int,
                 "oracle_invariant_after"?: int}, ...]

Strings use the element grammar of the parsing module, so every file
round-trips: parse -> replay -> identical final presentation, and identical
invocations produce byte-identical JSON.
"""

from __future__ import annotations

import json

from .algebra import SymbolAlgebra, TensorProduct
from .errors import ParseError
from .extension import ArtinSchreierExtension
from .parsing import parse_element
from .rewrite import (PAIR_CORES, Presentation, Rebase, RewriteTrace,
                      apply_pair, apply_single, presentation, rebase,
                      split_recognize)


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def presentation_to_json(T):
    return {"p": T.p, "factors": [{"alpha": repr(A.alpha), "beta": repr(A.beta)}
                                  for A in T.factors]}


def presentation_from_json(obj, field):
    factors = [SymbolAlgebra(parse_element(f["alpha"], field), parse_element(f["beta"], field))
               for f in obj["factors"]]
    if obj.get("p") != field.p:
        raise ParseError(f"presentation is for p={obj.get('p')}, field has p={field.p}")
    return presentation(factors, field=field)


def element_to_json(a):
    return {"".join(map(str, m)): repr(c) for m, c in sorted(a.coeffs.items())}


def element_from_json(obj, host):
    coeffs = {}
    for key, cs in obj.items():
        m = tuple(int(ch) for ch in key)
        coeffs[m] = parse_element(cs, host.field)
    return host.element(coeffs)


def certificate_to_json(cert):
    return {"X": element_to_json(cert.X), "Y": element_to_json(cert.Y),
            "alpha": repr(cert.claimed_alpha), "beta": repr(cert.claimed_beta)}


def step_to_json(step):
    out = {
        "rule": step.rule,
        "params": step.params,
        "before": presentation_to_json(step.before),
        "after": presentation_to_json(step.after),
    }
    if step.certificates:
        out["certificates"] = [certificate_to_json(c) for c in step.certificates]
    if step.invariant_before is not None:
        out["oracle_invariant_before"] = step.invariant_before.value
        out["oracle_invariant_after"] = step.invariant_after.value
    return out


def trace_to_json(trace):
    return [step_to_json(s) for s in trace]


def replay_trace(obj, field):
    """Re-run a serialized trace and return the final presentation.

    Every step is re-applied from its rule and parameters; the recomputed
    result must equal the recorded one, which it does because every rule is
    deterministic.
    """
    cur = None
    for sobj in obj:
        before = presentation_from_json(sobj["before"], field)
        if cur is None:
            cur = before
        elif cur != before:
            raise ParseError("trace chain broken during replay")
        rule = sobj["rule"]
        params = sobj["params"]
        if rule == "Rebase":
            cur, _ = rebase(cur, params["perm"])
        elif rule == "SplitRecognize":
            to = None
            if "to" in params:
                to = SymbolAlgebra(parse_element(params["to"]["alpha"], field),
                                   parse_element(params["to"]["beta"], field))
            witness = None
            if "witness" in params:
                host = cur.factors[params["factor"]].tensor()
                witness = element_from_json(params["witness"], host)
            cur, _ = split_recognize(cur, params["factor"], to=to, witness=witness)
        elif rule in PAIR_CORES:
            cur, _ = apply_pair(cur, params["first"], params["second"], rule)
        elif rule == "ScaleSecond":
            i = params["factor"]
            K = ArtinSchreierExtension(cur.factors[i].alpha)
            f = K.element([parse_element(cs, field) for cs in params["f"]])
            cur, _ = apply_single(cur, i, rule, f)
        elif rule in ("AddWpToAlpha", "AddPthPowerToBeta"):
            v = parse_element(params["v"], field)
            cur, _ = apply_single(cur, params["factor"], rule, v)
        elif rule == "AddBetaToAlpha":
            cur, _ = apply_single(cur, params["factor"], rule)
        else:
            raise ParseError(f"unknown rule {rule!r} in trace")
        recorded = presentation_from_json(sobj["after"], field)
        if cur != recorded:
            raise ParseError(f"replay of {rule} diverged from the recorded result")
    return cur
