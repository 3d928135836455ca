"""Polynomials in one real variable x with complex coefficients.

Coefficients are stored in the monomial basis, lowest degree first. All
operations are exact up to floating point rounding of the coefficient
arithmetic; derivatives and antiderivatives never approximate.
"""

from math import comb


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        coeffs = [0j]
    return tuple(coeffs)


class PolyFunc:
    """Immutable polynomial p(x) = sum_k coeffs[k] * x**k."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=(0,)):
        object.__setattr__(self, "_c", _trim(complex(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyFunc is immutable")

    @classmethod
    def from_pairs(cls, pairs):
        """Build from a list of [re, im] pairs (or plain numbers)."""
        out = []
        for p in pairs:
            if isinstance(p, (list, tuple)):
                out.append(complex(p[0], p[1]))
            else:
                out.append(complex(p))
        return cls(out)

    @property
    def coefficients(self):
        return self._c

    @property
    def degree(self):
        """Degree of the polynomial; the zero polynomial has degree 0."""
        return len(self._c) - 1

    def is_zero(self):
        return len(self._c) == 1 and self._c[0] == 0

    def __call__(self, x):
        acc = 0j
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def deriv(self, k=1):
        c = list(self._c)
        for _ in range(k):
            if len(c) <= 1:
                return PolyFunc([0])
            c = [j * c[j] for j in range(1, len(c))]
        return PolyFunc(c)

    def antideriv(self):
        """Antiderivative vanishing at x = 0."""
        return PolyFunc([0] + [c / (j + 1) for j, c in enumerate(self._c)])

    def reflect(self):
        """Return x -> p(1 - x), expanded by the binomial theorem."""
        out = [0j] * len(self._c)
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            for j in range(k + 1):
                out[j] += c * comb(k, j) * (-1) ** j
        return PolyFunc(out)

    def derivatives_at(self, x, count):
        """Values p(x), p'(x), ..., p^{(count-1)}(x)."""
        vals = []
        p = self
        for _ in range(count):
            vals.append(p(x))
            p = p.deriv()
        return vals

    def derivative_bounds_at(self, x, count):
        """Roundoff scale for each derivative value: sum of |terms|."""
        ax = abs(x)
        out = []
        p = self
        for _ in range(count):
            out.append(sum(abs(c) * ax ** j for j, c in enumerate(p._c)))
            p = p.deriv()
        return out

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self._c), len(other._c))
        a = self._c + (0j,) * (n - len(self._c))
        b = other._c + (0j,) * (n - len(other._c))
        return PolyFunc([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return PolyFunc([-c for c in self._c])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return PolyFunc([c * other for c in self._c])
        other = _coerce(other)
        out = [0j] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return PolyFunc(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyFunc):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"PolyFunc({list(self._c)!r})"


def _coerce(v):
    if isinstance(v, PolyFunc):
        return v
    return PolyFunc([v])
