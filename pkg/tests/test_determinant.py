import numpy as np
import pytest
from scipy.integrate import solve_ivp
from scipy.linalg import expm

from _support import ANTIPERIODIC, REGULAR, Y1_0_Y2_1, const_system, free_system, random_bc, rel_err
from dirac_spectra.coeffs import coefficient_table
from dirac_spectra.determinant import (
    abel_defect,
    delta_0,
    delta_arrays,
    delta_Q,
    fit_leading_coefficient,
    fundamental_matrix,
    neville_at_zero,
    ray_scan,
    residual_slope,
)
from dirac_spectra.model import BoundarySpec, DiracSystem, q_pm
from dirac_spectra.polyfunc import PolyFunc
from dirac_spectra.scaled import to_scaled
from dirac_spectra.integrate import integrate_columns

POLY_SYS = DiracSystem(-1.0, 2.0, PolyFunc([0.7, 2]), PolyFunc([3, -1, 0.5]))


def _phi_values(fm):
    return np.array([[fm[j, k].to_complex() for k in range(2)] for j in range(2)])


@pytest.mark.parametrize("lam", [0, 3.0, -7.5 + 2j, 25j, -40j, 12 - 30j, 60j])
def test_constant_potential_against_expm(lam):
    sys = const_system(-1.0, 2.0, 0.8 - 0.3j, 1.5 + 0.2j)
    qp, qm = q_pm(sys)
    M = np.array([[1j * lam * sys.b1, qp(0.0)], [qm(0.0), 1j * lam * sys.b2]])
    ref = expm(M)
    got = _phi_values(fundamental_matrix(sys, lam))
    for j in range(2):
        for k in range(2):
            assert rel_err(got[j, k], ref[j, k]) < 1e-8, (j, k)


@pytest.mark.parametrize("lam", [0.5, -2 + 1j, 4j, -3 - 2j])
def test_polynomial_potential_against_solve_ivp(lam):
    sys = POLY_SYS
    qp, qm = q_pm(sys)

    def rhs(x, y):
        y = y[:2] + 1j * y[2:]
        d = np.array([1j * lam * sys.b1 * y[0] + qp(x) * y[1], qm(x) * y[0] + 1j * lam * sys.b2 * y[1]])
        return np.concatenate([d.real, d.imag])

    got = _phi_values(fundamental_matrix(sys, lam))
    for k in range(2):
        y0 = np.zeros(4)
        y0[k] = 1.0
        sol = solve_ivp(rhs, (0, 1), y0, method="DOP853", rtol=1e-13, atol=1e-14)
        col = sol.y[:2, -1] + 1j * sol.y[2:, -1]
        for j in range(2):
            assert abs(got[j, k] - col[j]) <= 1e-9 * np.max(np.abs(col))


def test_method_agreement():
    lams = np.array([1.0, 10j, -10j, 5 + 5j])
    a = integrate_columns(POLY_SYS, lams, tol=1e-12, method="dop853")
    b = integrate_columns(POLY_SYS, lams, tol=1e-12, method="dopri5")
    za = a.z * np.exp(a.log_scale)[..., None]
    zb = b.z * np.exp(b.log_scale)[..., None]
    assert np.max(np.abs(za - zb) / np.max(np.abs(za), axis=2, keepdims=True)) < 1e-9


def test_tolerance_range():
    with pytest.raises(ValueError):
        integrate_columns(POLY_SYS, [1.0], tol=1e-3)
    with pytest.raises(ValueError):
        integrate_columns(POLY_SYS, [1.0], tol=1e-15)


def test_free_system_closed_form_and_ode(rng):
    sys = free_system(-1.0, 2.0)
    bc = random_bc(rng)
    lams = rng.uniform(-20, 20, 10) + 1j * rng.uniform(-20, 20, 10)
    for force in (False, True):
        m, E = delta_arrays(sys, bc, lams, force_ode=force)
        for i, lam in enumerate(lams):
            ref = delta_0(sys, bc, lam)
            diff = to_scaled(m[i], E[i]) - ref
            # |Delta_Q - Delta_0| <= 1e-9 (1 + |Delta_0|)
            assert diff.log_abs() <= np.log(1e-9) + np.logaddexp(0.0, ref.log_abs())


def test_delta_zero_conjugation(rng):
    # real boundary rows and real b: Delta_0(-conj lam) = conj Delta_0(lam)
    sys = free_system(-1.0, 1.5)
    bc = BoundarySpec(rng.normal(size=(2, 4)))
    for lam in rng.uniform(-10, 10, 5) + 1j * rng.uniform(-5, 5, 5):
        a = delta_0(sys, bc, -np.conj(lam)).to_complex()
        b = np.conj(delta_0(sys, bc, lam).to_complex())
        assert abs(a - b) <= 1e-12 * (1 + abs(b))


@pytest.mark.parametrize("lam", [0.0, 1.0, 3j, -3j, 5 + 2j, -4 - 4j])
def test_abel_identity(lam):
    fm = fundamental_matrix(POLY_SYS, lam, tol=1e-11)
    defect, ratio = abel_defect(fm, POLY_SYS.b1, POLY_SYS.b2)
    assert ratio < 1e6
    # cancellation in phi11 phi22 - phi12 phi21 amplifies the integrator error
    assert defect <= 10 * 1e-11 * ratio


def test_abel_ratio_flags_cancellation():
    _, ratio = abel_defect(fundamental_matrix(POLY_SYS, 20j), POLY_SYS.b1, POLY_SYS.b2)
    assert ratio > 1e12


def test_scaled_values_do_not_overflow():
    d = delta_Q(POLY_SYS, REGULAR, 400j)
    assert np.isfinite(d.log_abs()) and d.log_abs() > 300


def test_neville_exact_on_polynomials():
    h = np.array([0.5, 0.25, 0.125, 0.1])
    y = 2.0 - 3 * h + 0.5 * h ** 3
    assert abs(neville_at_zero(h, y)[-1] - 2.0) < 1e-12


def test_ray_scan_validation():
    with pytest.raises(ValueError):
        ray_scan(POLY_SYS, REGULAR, "upper", [10.0, 5.0])
    with pytest.raises(ValueError):
        ray_scan(POLY_SYS, REGULAR, "left", [10.0])


def test_ray_scan_free_antiperiodic():
    sys = free_system(-1.0, 1.0)
    for t, v in ray_scan(sys, ANTIPERIODIC, "upper", [5.0, 10.0]):
        # Delta_0 = 2 + e^{-i lam} + e^{i lam}; upper normalised -> J32 = 1
        expect = (2 + np.exp(t) + np.exp(-t)) * np.exp(-t)
        assert abs(v - expect) < 1e-12


def test_fit_second_order_upper():
    tab = coefficient_table(POLY_SYS, Y1_0_Y2_1, 3)
    assert tab.k_plus == 2
    fit = fit_leading_coefficient(POLY_SYS, Y1_0_Y2_1, "upper", 2)
    assert rel_err(fit.estimate, tab.c_plus[2]) < 1e-3
    slope, _, _ = residual_slope(POLY_SYS, Y1_0_Y2_1, "upper", tab.c_plus, 2)
    assert slope < -2.5


def test_parallel_matches_serial(monkeypatch):
    lams = np.linspace(-20, 20, 140) + 3j
    m1, E1 = delta_arrays(POLY_SYS, REGULAR, lams)
    monkeypatch.setenv("DIRAC_SPECTRA_THREADS", "4")
    m2, E2 = delta_arrays(POLY_SYS, REGULAR, lams)
    assert np.array_equal(m1, m2) and np.array_equal(E1, E2)
