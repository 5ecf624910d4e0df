"""Exact Clifford algebras, quadratic-form invariants and Bott classes.

Everything is computed over the rationals and their cyclotomic or
truncated-polynomial extensions with exact arithmetic; no floats anywhere.
"""

from .clifford import (CliffordElement, Membership, OrthogonalMatrix, SpinLift,
                       bar, cl_mul, clifford_group_test, graded_tensor_check,
                       parse_element, format_element, phi_gram, spin_lift,
                       spinorial_norm, untwist_iso, volume_element)
from .config import Caps, CapExceededError, DEFAULT_CAPS
from .lambda_bott import (LambdaVector, LineExpr, SerreSqrt, adams_lines,
                          adams_newton, bott_cyclotomic, bott_lines, bott_virtual,
                          corrected_bott, format_line_expr, line_to_lambda,
                          parse_line_expr, serre_sqrt, sphere_formula,
                          sum_of_powers, trivial_lambda_vector)
from .modules import (AdamsCharacter, GradedModule, MoritaResult, TensorPower,
                      VirtualCyclotomicModule, adams_bar, adams_character,
                      adams_module_report, hermitian_bott, morita_reduce,
                      opposite_form_check, opposite_module, spinor_rep,
                      tensor_power, twist_rep)
from .quadforms import (BWTriple, INF, QuadraticForm, bw_class, diagonalize,
                        discriminant, hasse_witt, hilbert_symbol, hyperbolic,
                        is_orientable, orthogonal_sum, parse_form, format_form,
                        scale, square_free_part)
from .rings import (Cyclotomic, TruncatedPoly, cyclotomic_descend, cyclotomic_mul,
                    cyclotomic_polynomial, euler_phi, format_cyclotomic,
                    format_rational, format_truncated, galois_act, parse_cyclotomic,
                    parse_rational, parse_truncated, trunc_invert, trunc_mul)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"
