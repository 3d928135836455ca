"""Spectral analysis of 2x2 Dirac-type boundary value problems with polynomial potentials.

Modules:
    algebra       differential polynomials and the sigma_k recursion
    model         systems, boundary conditions, minors and their classification
    coeffs        expansion coefficients c_k^± of the characteristic determinant
    determinant   fundamental matrix, determinant, imaginary-axis fits
    spectrum      zero counting and location in rectangles
    completeness  completeness/minimality verdicts for root vectors
    cli           command-line front end
"""

from .algebra import N_MAX, DerivPolynomial, sigma
from .coeffs import CoefficientTable, coefficient_table, lemma_c123_check
from .completeness import Status, Verdict, numeric_corroboration, special_case_catalogue, verdict
from .determinant import delta_0, delta_Q, fit_leading_coefficient, fundamental_matrix, ray_scan
from .errors import (
    BoundaryZero,
    DiracSpectraError,
    InvalidConfig,
    MaxOrderExceeded,
    MissingDerivative,
    NewtonStall,
    NoConvergence,
    StepFailure,
)
from .model import BcClass, BoundarySpec, DiracSystem, MinorSet, classify, minors, p_function
from .polyfunc import PolyFunc
from .spectrum import EigenvalueSet, Rect, count_zeros, locate_zeros

__version__ = "0.1.0"
