"""System and boundary-condition data model.

The system is -i B^{-1} y' + Q(x) y = lambda y on [0, 1] with
B = diag(b1, b2), b1 < 0 < b2, and Q off-diagonal with polynomial entries.
Boundary conditions are two linear functionals
U_j(y) = a_j1 y1(0) + a_j2 y2(0) + a_j3 y1(1) + a_j4 y2(1).
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .polyfunc import PolyFunc

DEFAULT_ZERO_TOL = 1e-9


@dataclass(frozen=True)
class DiracSystem:
    b1: float
    b2: float
    Q12: PolyFunc
    Q21: PolyFunc

    def __post_init__(self):
        if not (self.b1 < 0 < self.b2):
            raise ValueError(f"need b1 < 0 < b2, got b1={self.b1}, b2={self.b2}")
        if not isinstance(self.Q12, PolyFunc):
            object.__setattr__(self, "Q12", PolyFunc(self.Q12))
        if not isinstance(self.Q21, PolyFunc):
            object.__setattr__(self, "Q21", PolyFunc(self.Q21))

    @property
    def is_free(self):
        """True when Q vanishes identically."""
        return self.Q12.is_zero() and self.Q21.is_zero()

    def scaled(self, factor):
        return DiracSystem(self.b1, self.b2, self.Q12 * factor, self.Q21 * factor)


class BoundarySpec:
    """2x4 complex boundary matrix of full rank."""

    __slots__ = ("_a",)

    def __init__(self, rows):
        a = np.array(rows, dtype=complex)
        if a.shape != (2, 4):
            raise ValueError(f"boundary matrix must be 2x4, got {a.shape}")
        # rank is decided on row-normalised copies so that row scaling cannot change it
        norms = np.max(np.abs(a), axis=1)
        if np.any(norms == 0):
            raise ValueError("boundary matrix must have rank 2")
        s = np.linalg.svd(a / norms[:, None], compute_uv=False)
        if s[1] <= 1e-12 * s[0]:
            raise ValueError("boundary matrix must have rank 2")
        a.setflags(write=False)
        self._a = a

    @property
    def a(self):
        return self._a

    def __repr__(self):
        return f"BoundarySpec({self._a.tolist()!r})"


@dataclass(frozen=True)
class MinorSet:
    J12: complex
    J34: complex
    J32: complex
    J14: complex
    J13: complex
    J42: complex

    def as_dict(self):
        return {k: getattr(self, k) for k in ("J12", "J34", "J32", "J14", "J13", "J42")}

    def scale(self):
        return max(abs(v) for v in self.as_dict().values())

    def cleaned(self, zero_tol=DEFAULT_ZERO_TOL):
        """Copy with minors at or below the threshold set exactly to zero."""
        tau = zero_tol * self.scale()
        return MinorSet(**{k: (0j if abs(v) <= tau else v) for k, v in self.as_dict().items()})


class BcClass(Enum):
    Regular = "Regular"
    NonRegular_J32zero = "NonRegular_J32zero"
    NonRegular_J14zero = "NonRegular_J14zero"
    NonRegular_bothZero = "NonRegular_bothZero"
    DegenerateDeltaZeroConstant = "DegenerateDeltaZeroConstant"


def _minor(a, j, k):
    j -= 1
    k -= 1
    return complex(a[0, j] * a[1, k] - a[0, k] * a[1, j])


def minors(bc):
    a = bc.a
    return MinorSet(
        J12=_minor(a, 1, 2),
        J34=_minor(a, 3, 4),
        J32=_minor(a, 3, 2),
        J14=_minor(a, 1, 4),
        J13=_minor(a, 1, 3),
        J42=_minor(a, 4, 2),
    )


def q_pm(sys):
    """(q_+, q_-) = (-i b1 Q12, -i b2 Q21)."""
    return sys.Q12 * (-1j * sys.b1), sys.Q21 * (-1j * sys.b2)


def p_function(sys, bc, ms=None):
    """P(x) = J13 b1 Q12(x) + J42 b2 Q21(1 - x)."""
    ms = ms if ms is not None else minors(bc)
    return sys.Q12 * (ms.J13 * sys.b1) + sys.Q21.reflect() * (ms.J42 * sys.b2)


def classify(ms, zero_tol=DEFAULT_ZERO_TOL, b_sum=None):
    """Regularity class of the boundary conditions from their minors.

    Degenerate means Delta_0 has at most one exponential term, so it is
    either identically zero or zero-free. When b_sum = b1 + b2 is given and
    vanishes, the J12 and J34 terms are both constants and merge.
    """
    if zero_tol < 0:
        raise ValueError("zero_tol must be nonnegative")
    tau = zero_tol * ms.scale()

    def nz(v):
        return abs(v) > tau

    if b_sum is not None and b_sum == 0:
        terms = [nz(ms.J12 + ms.J34), nz(ms.J32), nz(ms.J14)]
    else:
        terms = [nz(ms.J12), nz(ms.J34), nz(ms.J32), nz(ms.J14)]
    if sum(terms) <= 1:
        return BcClass.DegenerateDeltaZeroConstant
    j32, j14 = nz(ms.J32), nz(ms.J14)
    if j32 and j14:
        return BcClass.Regular
    if j14:
        return BcClass.NonRegular_J32zero
    if j32:
        return BcClass.NonRegular_J14zero
    return BcClass.NonRegular_bothZero


class ZeroPolicy:
    """Decides whether a computed quantity is nonzero.

    A value is nonzero when |v| > zero_tol * bound, where bound is the sum of
    magnitudes of the terms that produced it. Cancellation down to roundoff
    therefore counts as zero, and the decision is invariant under rescaling
    the inputs.
    """

    def __init__(self, zero_tol=DEFAULT_ZERO_TOL):
        if zero_tol < 0:
            raise ValueError("zero_tol must be nonnegative")
        self.zero_tol = zero_tol

    def threshold(self, bound):
        return self.zero_tol * bound

    def nonzero(self, value, bound):
        return abs(value) > self.threshold(bound)

    def first_nonzero(self, values, bounds, limit=None):
        """Index of the first nonzero entry, or None."""
        n = len(values) if limit is None else min(limit, len(values))
        for i in range(n):
            if self.nonzero(values[i], bounds[i]):
                return i
        return None
