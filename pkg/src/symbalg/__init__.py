"""Exact symbol-algebra calculus over small characteristic-p fields.

The package models symbol algebras [alpha, beta) = F<x,y : x^p - x = alpha,
y^p = beta, yx - xy = y> and their tensor products over four exact field
constructions (prime fields, explicit-modulus finite fields, rational
function fields, and Laurent-local fields read through exact fractions).
On top of the structure-constant core sit certificate-producing rewrite
rules, the slot-modification and common-slot linkage machinery with its
symbol-length reduction loop, characteristic-2 quadratic form theory (Witt
decomposition, Arf and quaternion-product invariants), and a residue-trace
Brauer-class oracle over GF(q)((t)) that cross-validates every rewrite.
"""

from .algebra import (AlgebraElement, SymbolAlgebra, SymbolCertificate,
                      TensorProduct, commute, find_zero_divisor, multiply,
                      subalgebra_dimension, verify_symbol_pair)
from .errors import (BudgetExhaustedError, FieldMismatchError,
                     HypothesisGateError, ParseError, PreconditionError,
                     SymbalgError, UnsupportedFieldError)
from .extension import ArtinSchreierExtension, ExtElement, as_norm, norm_form
from .fields import (degree_bound, finite_field, has_iq3_zero, laurent_field,
                     prime_field, rational_function_field, u_invariant, wp,
                     wp_canonical_rep, wp_solve)
from .gf import GF, GFElement
from .linkage import (PhiForm, ReduceResult, SlotVector, apply_case_a,
                      apply_case_b, build_phi, common_slot, find_isotropic,
                      reduce_symbol_length, split_first_via_zero)
from .local import LocalInvariant, invariant, reduce_wp_local, total_invariant
from .parsing import (parse_element, parse_field, parse_quadratic_form,
                      parse_symbol_product)
from .quadform import (ArfClass, IsotropyResult, QuadraticForm,
                       WittDecomposition, arf, char2_common_slot, clifford,
                       evaluate, hyperbolic_plane, is_isotropic, scale_pair,
                       sharpness_witness, trivialize_arf, witt_decompose)
from .ratfunc import FunctionField, RatFuncElement
from .rewrite import (Presentation, RewriteStep, RewriteTrace,
                      add_beta_to_alpha, add_pth_power_to_beta,
                      add_wp_to_alpha, merge_same_alpha, merge_same_beta,
                      merge_slots, presentation, scale_second_slot,
                      split_recognize, transfer_alpha)
from .sampling import verify_lemmas

__version__ = "0.1.0"
