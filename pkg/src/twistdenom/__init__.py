"""Exact verification of denominator identities for twisted affine Lie superalgebras."""

from .lattice import (BasisSymbol, BilinearForm, Weight, DELTA, LAMBDA0, dl, eps, form,
                      decompose_in_simple_roots, dominates, height, wt)
from .algebra import (AlgebraSpec, FAMILY_TOKENS, RootDatum, SpecError, build_spec,
                      data_sheet, finite_positive_roots, h_dual, imaginary_mults,
                      positive_roots, subsystem, validate_spec)
from .series import FactorForm, Frame, TruncatedSeries, TruncationOverflowError
from .weylgroup import (CertificationError, GroupElement, enumerate_T_prime,
                        enumerate_finite_group, reflection, sign_of, translation)
from .denominator import (QSeries, UnsupportedFormError, VerificationReport,
                          build_lhs, build_rhs_isotropic_sum, build_rhs_translation_sum,
                          casimir_support_check, f_q, finite_identity_check,
                          ratio_invariant, root_count_report, verify)

__version__ = "0.1.0"
