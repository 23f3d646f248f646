"""Exact representation theory of the liftings H_lambda of type A2 at q = -1."""
from .field import Cyclo, Quad, Ring, embed_root, field_arith, sqrt_exact
from .matrix import Matrix, mat_solve
from .hopf import (Character, Params, alpha, classify_character, normal_form, s_set_member,
                   solve_d, theta_pm)
from .catalog import (Rep, build_indecomposable, build_projective, build_simple, direct_sum, dual,
                      isotypic_decompose, tensor, verify_rep)
from .analysis import (composition_factors, decompose, endo_certificate, gabriel_quiver, hom_basis,
                       is_isomorphic, peel_projective)
from .spherical import fusion_decompose, pivot_check, probe_question_zero, qdim, qtr_negligible

__version__ = "0.1.0"
