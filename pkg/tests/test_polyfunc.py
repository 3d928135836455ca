import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from dirac_spectra.polyfunc import PolyFunc

_coef = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)
_poly = st.lists(_coef, min_size=1, max_size=6).map(PolyFunc)
_x = st.floats(-2, 2)


@settings(max_examples=80, deadline=None)
@given(_poly, _poly, _x)
def test_arithmetic_matches_pointwise(p, q, x):
    tol = 1e-9 * (1 + abs(p(x)) + abs(q(x))) ** 2
    assert abs((p + q)(x) - (p(x) + q(x))) <= tol
    assert abs((p * q)(x) - p(x) * q(x)) <= tol
    assert abs((p - q)(x) - (p(x) - q(x))) <= tol


@settings(max_examples=80, deadline=None)
@given(_poly, _x)
def test_reflect_and_antideriv(p, x):
    bound = 1e-9 * (1 + sum(abs(c) for c in p.coefficients)) * 10
    assert abs(p.reflect()(x) - p(1 - x)) <= bound
    assert p.reflect().reflect() == p or abs(p.reflect().reflect()(x) - p(x)) <= bound
    assert abs(p.antideriv().deriv()(x) - p(x)) <= bound
    assert p.antideriv()(0.0) == 0


def test_derivatives_at():
    p = PolyFunc([1, 2, 3, 4])  # 1 + 2x + 3x^2 + 4x^3
    assert p.derivatives_at(1.0, 5) == [10, 2 + 6 + 12, 6 + 24, 24, 0]
    assert p.derivative_bounds_at(1.0, 2) == [10, 20]
    assert PolyFunc([0, 0]).is_zero()
    assert PolyFunc([1, 0, 0]).degree == 0


def test_from_pairs_and_immutability():
    p = PolyFunc.from_pairs([[1, 2], 3])
    assert p.coefficients == (1 + 2j, 3 + 0j)
    try:
        p._c = ()
    except AttributeError:
        pass
    else:
        raise AssertionError("PolyFunc should be immutable")
    assert hash(p) == hash(PolyFunc([1 + 2j, 3]))
    assert np.isclose(p(2.0), 7 + 2j)
