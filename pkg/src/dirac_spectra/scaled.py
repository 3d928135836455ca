"""Complex numbers with an explicit exponent, for values like e^{300}.

A ScaledComplex holds (mantissa, e2) with value mantissa * 2**e2, where
|mantissa| lies in [1, 2) or the mantissa is exactly zero. The natural-log
exponent is exposed as ``exponent`` = e2 * ln 2. Restricting the exponent to
integer multiples of ln 2 makes the representation unique.
"""

import cmath
import math

import numpy as np

LN2 = math.log(2.0)


class ScaledComplex:
    __slots__ = ("mantissa", "e2")

    def __init__(self, mantissa, e2=0):
        self.mantissa = complex(mantissa)
        self.e2 = int(e2)

    @classmethod
    def from_log(cls, log_abs, phase):
        """Value exp(log_abs + i*phase)."""
        if log_abs == -math.inf:
            return cls(0j, 0)
        e2 = math.floor(log_abs / LN2)
        r = math.exp(log_abs - e2 * LN2)
        # guard against r landing on 2.0 or just under 1.0 by rounding
        if r >= 2.0:
            r, e2 = r / 2.0, e2 + 1
        elif r < 1.0:
            r, e2 = r * 2.0, e2 - 1
        return cls(cmath.rect(r, phase), e2)

    @classmethod
    def from_complex(cls, z, log_scale=0.0):
        """Value z * exp(log_scale)."""
        z = complex(z)
        if z == 0:
            return cls(0j, 0)
        return cls.from_log(math.log(abs(z)) + log_scale, cmath.phase(z))

    @property
    def exponent(self):
        return self.e2 * LN2

    def is_zero(self):
        return self.mantissa == 0

    def log_abs(self):
        if self.mantissa == 0:
            return -math.inf
        return math.log(abs(self.mantissa)) + self.e2 * LN2

    def arg(self):
        return cmath.phase(self.mantissa)

    def to_complex(self):
        """Plain complex value; overflows to inf when the exponent is too large."""
        if self.mantissa == 0:
            return 0j
        try:
            return self.mantissa * math.ldexp(1.0, self.e2)
        except OverflowError:
            return complex(math.copysign(math.inf, self.mantissa.real), math.copysign(math.inf, self.mantissa.imag))

    def scale_exp(self, r):
        """Multiply by exp(r) for real r."""
        if self.mantissa == 0:
            return self
        return ScaledComplex.from_log(self.log_abs() + r, self.arg())

    def __mul__(self, other):
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex.from_complex(other)
        if self.mantissa == 0 or other.mantissa == 0:
            return ScaledComplex(0j, 0)
        return _normalize(self.mantissa * other.mantissa, self.e2 + other.e2)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex.from_complex(other)
        if self.mantissa == 0:
            return other
        if other.mantissa == 0:
            return self
        hi, lo = (self, other) if self.e2 >= other.e2 else (other, self)
        d = lo.e2 - hi.e2
        m = hi.mantissa + (lo.mantissa * math.ldexp(1.0, d) if d > -1100 else 0j)
        return _normalize(m, hi.e2)

    __radd__ = __add__

    def __neg__(self):
        return ScaledComplex(-self.mantissa, self.e2)

    def __sub__(self, other):
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex.from_complex(other)
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ScaledComplex):
            return NotImplemented
        return self.mantissa == other.mantissa and self.e2 == other.e2

    def __hash__(self):
        return hash((self.mantissa, self.e2))

    def __repr__(self):
        return f"ScaledComplex({self.mantissa!r}, e2={self.e2})"


def _normalize(m, e2):
    if m == 0:
        return ScaledComplex(0j, 0)
    frac, k = math.frexp(abs(m))  # abs(m) = frac * 2**k, frac in [0.5, 1)
    return ScaledComplex(m * math.ldexp(1.0, 1 - k), e2 + k - 1)


def logsum(terms):
    """Sum of terms c_i * exp(E_i) over numpy arrays, done in the log domain.

    ``terms`` is a list of (coef, exponent) pairs of broadcastable arrays
    (complex coef, real exponent). Returns (m, E) with the sum equal to
    m * exp(E) and |m| of order one (or m = 0).
    """
    coefs = [np.asarray(c, dtype=complex) for c, _ in terms]
    exps = [np.where(np.asarray(c) == 0, -np.inf, np.asarray(e, dtype=float)) for c, e in terms]
    shape = np.broadcast_shapes(*[c.shape for c in coefs], *[e.shape for e in exps])
    top = np.full(shape, -np.inf)
    for e in exps:
        top = np.maximum(top, e)
    safe_top = np.where(np.isfinite(top), top, 0.0)
    total = np.zeros(shape, dtype=complex)
    for c, e in zip(coefs, exps):
        w = np.where(np.isfinite(e), np.exp(np.minimum(e - safe_top, 0.0)), 0.0)
        total = total + c * w
    return total, safe_top


def to_scaled(m, E):
    """Convert a logsum() result element into a ScaledComplex."""
    return ScaledComplex.from_complex(complex(m), float(E))
