import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from dirac_spectra.scaled import ScaledComplex, logsum, to_scaled

_mag = st.floats(-700, 700)
_phase = st.floats(-math.pi, math.pi)


@settings(max_examples=100, deadline=None)
@given(_mag, _phase)
def test_normal_form(log_abs, phase):
    z = ScaledComplex.from_log(log_abs, phase)
    assert 1.0 <= abs(z.mantissa) < 2.0
    assert abs(z.log_abs() - log_abs) <= 1e-12 * (1 + abs(log_abs))


@settings(max_examples=100, deadline=None)
@given(_mag, _phase, _mag, _phase)
def test_mul_adds_logs(a, pa, b, pb):
    x = ScaledComplex.from_log(a, pa)
    y = ScaledComplex.from_log(b, pb)
    assert abs((x * y).log_abs() - (a + b)) <= 1e-11 * (1 + abs(a) + abs(b))


def test_add_matches_complex():
    rng = np.random.default_rng(0)
    for _ in range(100):
        u, v = rng.normal(size=2) + 1j * rng.normal(size=2)
        s = (ScaledComplex.from_complex(u) + ScaledComplex.from_complex(v)).to_complex()
        assert abs(s - (u + v)) <= 1e-14 * (abs(u) + abs(v))


def test_huge_values():
    big = ScaledComplex.from_complex(1.0, 5000.0)  # e^5000
    assert math.isinf(big.to_complex().real)
    diff = big - big
    assert diff.is_zero()
    assert abs((big * ScaledComplex.from_complex(1.0, -5000.0)).to_complex() - 1.0) < 1e-9
    assert ScaledComplex(0j) + big == big


def test_logsum():
    c = [np.array([1.0, 2.0]), np.array([3.0, 0.0])]
    e = [np.array([0.0, 800.0]), np.array([1.0, 900.0])]
    m, E = logsum(list(zip(c, e)))
    assert abs(m[0] * math.exp(E[0]) - (1 + 3 * math.e)) < 1e-12
    assert abs(to_scaled(m[1], E[1]).log_abs() - (math.log(2) + 800)) < 1e-12
