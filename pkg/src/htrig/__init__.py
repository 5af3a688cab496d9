"""h-trigonometric B-splines and the supporting h-quantum calculus."""
from .bsplines import (KnotVector, eval_E, eval_T, eval_tilde, from_E_factor, hderiv_E,
                       hderiv_formula_holds, hderiv_T, tilde_bridge_factor)
from .classical import convergence_table, eval_T_classical
from .errors import (ComplexResidue, GridMisalignment, HTrigError, InsufficientKnots, InvalidH,
                     OrderOutOfRange, SingularD, SingularMatrix, WindowViolation)
from .gdd import (GammaPair, NodeSet, c0m, dd_det_oracle, dd_exp, dd_trig, exp_pair, generic_dd,
                  polynomial_pair, threeterm_coeffs, vandermonde_h, vandermonde_sine_form)
from .hcalc import (HParam, as_hparam, cexp_h, cos_h, exp_h, hderiv, hintegral, hpow_eval,
                    mult_U, sin_h, trunc_power)
from .identities import (A_coeff, MarsdenWindow, OpChain, apply_op, dd_integral,
                         marsden_residual, marsden_sides, operator_relation_residual)

__version__ = "0.1.0"
