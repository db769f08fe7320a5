"""Zeta-regularized determinants of the Riemann operator on Quillen K-groups."""

from .detengine import (
    VerificationReport,
    algebraicity_spot_check,
    check_periodicity,
    check_reflection,
    det_full,
    g_alt,
    g_closed,
    g_regularized,
    reflection_at_zero,
)
from .ktheory import Signature, borel_rank, rank_low, riemann_eigenvalue
from .numberfield import IntegerPolynomial, signature_from_polynomial
from .specfun import DomainError, EulerMaclaurinParams

__version__ = "0.1.0"
