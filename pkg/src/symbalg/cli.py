"""Command-line front end.

Subcommands: reduce, common-slot, invariant, witt, arf, clifford, sharpness,
verify-lemmas.  Inputs are parsed completely before any computation runs.
Exit status: 0 success, 1 input or hypothesis error, 2 budget exhausted.
Output is deterministic given (inputs, seed, budget): JSON is emitted with
sorted keys and no timestamps, so identical invocations produce identical
bytes.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (BudgetExhaustedError, HypothesisGateError, ParseError,
                     PreconditionError, SymbalgError, UnsupportedFieldError)
from .parsing import parse_element, parse_field, parse_quadratic_form, parse_symbol_product
from .serialize import canonical_json, presentation_to_json, trace_to_json


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="symbalg",
        description="symbol-algebra rewriting, linkage and char-2 quadratic forms")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, inputs=1, metavar="INPUT"):
        sp.add_argument("--field", required=True, help='field descriptor, e.g. "GF(2)((t))"')
        sp.add_argument("--budget", type=int, default=1, help="enumeration depth D")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized reports")
        sp.add_argument("--trace-json", metavar="PATH", help="write the rewrite trace as JSON")
        sp.add_argument("--precision", type=int, default=None,
                        help="also print Laurent expansions to this order")
        if inputs:
            sp.add_argument("inputs", nargs=inputs, metavar=metavar)
        return sp

    common(sub.add_parser("reduce", help="shorten a tensor product of symbols"),
           1, "SYMBOLS")
    common(sub.add_parser("common-slot", help="link two tensor products"), 2, "SYMBOLS")
    common(sub.add_parser("invariant", help="local invariant of one symbol"), 1, "SYMBOL")
    common(sub.add_parser("witt", help="Witt decomposition of a quadratic form"), 1, "FORM")
    common(sub.add_parser("arf", help="Arf invariant of a nonsingular form"), 1, "FORM")
    common(sub.add_parser("clifford", help="quaternion product of a trivial-Arf form"),
           1, "FORM")
    sp = common(sub.add_parser("sharpness", help="sharpness witness for the length bound"), 0)
    sp.add_argument("n", type=int, help="half the required u-invariant")
    sp = common(sub.add_parser("verify-lemmas", help="run the per-rule property suite"), 0)
    sp.add_argument("--samples", type=int, default=100)
    return ap


def _maybe_series(el, precision):
    v, coeffs = el.series_coeffs(precision)
    k = el.field.base
    terms = []
    for i, c in enumerate(coeffs):
        if c:
            terms.append(f"({k.render_element(k.element(c))})*t^{v + i}")
    return " + ".join(terms) + f" + O(t^{precision + 1})" if terms else f"O(t^{precision + 1})"


def run(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        field = parse_field(args.field)
        return _dispatch(args, field)
    except ParseError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 1
    except (HypothesisGateError, UnsupportedFieldError, PreconditionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except BudgetExhaustedError as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return 2


def _write_trace(args, trace):
    if args.trace_json:
        with open(args.trace_json, "w") as fh:
            fh.write(canonical_json(trace_to_json(trace)))


def _dispatch(args, field):
    cmd = args.command

    if cmd == "invariant":
        from .local import invariant
        T = parse_symbol_product(args.inputs[0], field)
        if T.k != 1:
            raise ParseError("invariant takes a single symbol")
        inv = invariant(T.factors[0])
        print(canonical_json({"invariant": inv.value, "p": inv.p}), end="")
        if args.precision is not None:
            print(f"alpha = {_maybe_series(T.factors[0].alpha, args.precision)}")
        return 0

    if cmd == "reduce":
        from .linkage import reduce_symbol_length
        T = parse_symbol_product(args.inputs[0], field)
        res = reduce_symbol_length(T, args.budget)
        out = {"length": len(res.presentation.factors),
               "presentation": presentation_to_json(res.presentation),
               "budget_exhausted": res.budget_exhausted}
        if getattr(field, "is_local", False):
            from .local import total_invariant
            out["invariant"] = total_invariant(res.presentation).value
        print(canonical_json(out), end="")
        _write_trace(args, res.trace)
        return 2 if res.budget_exhausted else 0

    if cmd == "common-slot":
        from .linkage import common_slot
        from .quadform import char2_common_slot
        A = parse_symbol_product(args.inputs[0], field)
        B = parse_symbol_product(args.inputs[1], field)
        runner = char2_common_slot if field.p == 2 else common_slot
        side, A2, B2, (trA, trB) = runner(A, B, args.budget)
        out = {"side": side,
               "first": presentation_to_json(A2),
               "second": presentation_to_json(B2)}
        print(canonical_json(out), end="")
        if args.trace_json:
            with open(args.trace_json, "w") as fh:
                fh.write(canonical_json({"first": trace_to_json(trA),
                                         "second": trace_to_json(trB)}))
        return 0

    if cmd == "witt":
        from .quadform import witt_decompose
        q = parse_quadratic_form(args.inputs[0], field)
        dec = witt_decompose(q, args.budget)
        out = {"witt_index": dec.witt_index,
               "kernel": repr(dec.anisotropic_kernel),
               "kernel_dim": dec.anisotropic_kernel.dim,
               "complete": dec.complete,
               "basis": [[repr(c) for c in row] for row in dec.change_of_basis]}
        print(canonical_json(out), end="")
        return 0 if dec.complete else 2

    if cmd == "arf":
        from .quadform import arf
        q = parse_quadratic_form(args.inputs[0], field)
        print(canonical_json({"arf": repr(arf(q).representative)}), end="")
        return 0

    if cmd == "clifford":
        from .quadform import clifford
        q = parse_quadratic_form(args.inputs[0], field)
        E = clifford(q)
        out = {"clifford": presentation_to_json(E)}
        if getattr(field, "is_local", False):
            from .local import total_invariant
            out["invariant"] = total_invariant(E).value
        print(canonical_json(out), end="")
        return 0

    if cmd == "sharpness":
        from .quadform import sharpness_witness
        from .local import total_invariant
        phi, E = sharpness_witness(args.n, field, args.budget)
        out = {"form": repr(phi),
               "clifford": presentation_to_json(E),
               "invariant": total_invariant(E).value,
               "symbol_length": args.n - 1}
        print(canonical_json(out), end="")
        return 0

    if cmd == "verify-lemmas":
        from .sampling import verify_lemmas
        report = verify_lemmas(field, args.samples, args.seed)
        for rule, r in report["rules"].items():
            status = "ok" if r["fail"] == 0 else "FAIL"
            print(f"{rule:20s} pass={r['pass']:4d} fail={r['fail']:4d}  {status}")
        print(canonical_json({"ok": report["ok"], "samples": report["samples"],
                              "seed": report["seed"]}), end="")
        return 0 if report["ok"] else 1

    raise AssertionError(f"unhandled command {cmd}")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
