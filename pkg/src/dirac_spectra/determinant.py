"""Characteristic determinant, imaginary-axis scans and coefficient fitting.

Delta(lam) = J12 + J34 e^{i(b1+b2)lam} + J32 phi11 + J13 phi12 + J42 phi21 + J14 phi22,
with phi = Phi(1, lam) the fundamental matrix at x = 1. Values are carried as
(mantissa, log-exponent) pairs so that e^{|b| t} growth along the imaginary
axis never overflows.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence
from .integrate import DEFAULT_METHOD, DEFAULT_TOL, fundamental_entries, integrate_columns
from .model import minors
from .parallel import parallel_map
from .scaled import ScaledComplex, logsum, to_scaled

DEFAULT_T_GRID = (20.0, 28.0, 40.0, 56.0, 80.0)
# batches larger than this are split so parallel workers get comparable work
_BATCH = 64


@dataclass(frozen=True)
class FundamentalMatrix:
    """phi_jk(1, lam) as a 2x2 nested tuple of ScaledComplex."""

    lam: complex
    entries: tuple

    def __getitem__(self, jk):
        j, k = jk
        return self.entries[j][k]

    def det(self):
        return self[0, 0] * self[1, 1] - self[0, 1] * self[1, 0]


def _fundamental_arrays(sys, lams, tol, method):
    lams = np.atleast_1d(np.asarray(lams, dtype=complex))
    if sys.is_free:
        n = lams.size
        m = np.zeros((n, 2, 2), dtype=complex)
        E = np.zeros((n, 2, 2))
        for k, bk in enumerate((sys.b1, sys.b2)):
            m[:, k, k] = np.exp(1j * bk * lams.real)
            E[:, k, k] = -bk * lams.imag
        return m, E

    chunks = [lams[i:i + _BATCH] for i in range(0, lams.size, _BATCH)]
    parts = parallel_map(lambda c: fundamental_entries(sys, integrate_columns(sys, c, tol, method)), chunks)
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


def fundamental_matrix(sys, lam, tol=DEFAULT_TOL, method=DEFAULT_METHOD, force_ode=False):
    """Phi(1, lam), integrated column by column in rescaled variables.

    With Q identically zero the closed form diag(e^{i b1 lam}, e^{i b2 lam})
    is returned unless ``force_ode`` is set.
    """
    if force_ode and sys.is_free:
        m, E = fundamental_entries(sys, integrate_columns(sys, [lam], tol, method))
    else:
        m, E = _fundamental_arrays(sys, [lam], tol, method)
    entries = tuple(tuple(to_scaled(m[0, j, k], E[0, j, k]) for k in range(2)) for j in range(2))
    return FundamentalMatrix(complex(lam), entries)


def abel_defect(fm, b1, b2):
    """Relative deviation of |det Phi(1, lam)| from e^{-(b1+b2) Im lam}.

    Also returns the cancellation ratio |col1| |col2| / |det| (max-norms of the
    two columns). Each column is accurate relative to its own largest entry,
    so the determinant's relative accuracy is the integrator's divided by
    this ratio.
    """
    d = fm.det()
    expected = -(b1 + b2) * fm.lam.imag
    got = d.log_abs()
    if got == -math.inf:
        return 1.0, math.inf
    defect = abs(math.expm1(got - expected))
    cols = [max(fm[0, k].log_abs(), fm[1, k].log_abs()) for k in range(2)]
    return defect, math.exp(min(cols[0] + cols[1] - got, 700.0))


def _delta_terms(ms, b1, b2, lams, m, E):
    lams = np.asarray(lams, dtype=complex)
    s = b1 + b2
    return [
        (np.full(lams.shape, ms.J12), np.zeros(lams.shape)),
        (ms.J34 * np.exp(1j * s * lams.real), -s * lams.imag),
        (ms.J32 * m[:, 0, 0], E[:, 0, 0]),
        (ms.J13 * m[:, 0, 1], E[:, 0, 1]),
        (ms.J42 * m[:, 1, 0], E[:, 1, 0]),
        (ms.J14 * m[:, 1, 1], E[:, 1, 1]),
    ]


def delta_arrays(sys, bc, lams, tol=DEFAULT_TOL, method=DEFAULT_METHOD, force_ode=False):
    """Delta at every lam as (mantissa, log-exponent) numpy arrays."""
    lams = np.atleast_1d(np.asarray(lams, dtype=complex))
    ms = minors(bc)
    if force_ode and sys.is_free:
        m, E = fundamental_entries(sys, integrate_columns(sys, lams, tol, method))
    else:
        m, E = _fundamental_arrays(sys, lams, tol, method)
    return logsum(_delta_terms(ms, sys.b1, sys.b2, lams, m, E))


def delta_Q(sys, bc, lam, tol=DEFAULT_TOL, method=DEFAULT_METHOD, force_ode=False):
    m, E = delta_arrays(sys, bc, [lam], tol, method, force_ode)
    return to_scaled(m[0], E[0])


def delta_0(sys, bc, lam):
    """Closed form of the determinant for Q identically zero."""
    ms = minors(bc)
    lam = complex(lam)
    total = ScaledComplex.from_complex(ms.J12)
    for coef, b in ((ms.J34, sys.b1 + sys.b2), (ms.J32, sys.b1), (ms.J14, sys.b2)):
        if coef != 0:
            total = total + ScaledComplex.from_complex(coef, -b * lam.imag) * complex(np.exp(1j * b * lam.real))
    return total


def _axis(sys, halfplane, t):
    """lam on the imaginary axis, the log of the normalising factor, and c*lam."""
    c = 1j * (sys.b1 - sys.b2)
    t = np.asarray(t, dtype=float)
    if halfplane == "upper":
        lam = 1j * t
        shift = sys.b1 * t
    elif halfplane == "lower":
        lam = -1j * t
        shift = -sys.b2 * t
    else:
        raise ValueError(f"halfplane must be 'upper' or 'lower', got {halfplane!r}")
    return lam, shift, c * lam


def ray_scan(sys, bc, halfplane, t_values, tol=DEFAULT_TOL, method=DEFAULT_METHOD, force_ode=False):
    """Normalised determinant Delta(+-it) e^{b1 t} (upper) or e^{-b2 t} (lower)."""
    t_values = np.asarray(t_values, dtype=float)
    if np.any(t_values <= 0) or np.any(np.diff(t_values) <= 0):
        raise ValueError("t_values must be positive and ascending")
    lam, shift, _ = _axis(sys, halfplane, t_values)
    m, E = delta_arrays(sys, bc, lam, tol, method, force_ode)
    vals = m * np.exp(E + shift)
    return [(float(t), complex(v)) for t, v in zip(t_values, vals)]


def neville_at_zero(h, y):
    """Neville tableau for the interpolating polynomial evaluated at h = 0.

    Returns the list of extrapolation levels: level j uses the j+1 points
    with the smallest h.
    """
    order = np.argsort(h)  # smallest h first
    h = np.asarray(h, dtype=float)[order]
    y = np.asarray(y, dtype=complex)[order]
    levels = []
    for j in range(len(h)):
        hh, yy = h[: j + 1], y[: j + 1].copy()
        # in-place Neville on the first j+1 points
        p = yy.copy()
        for k in range(1, j + 1):
            for i in range(j, k - 1, -1):
                p[i] = (hh[i] * p[i - 1] - hh[i - k] * p[i]) / (hh[i] - hh[i - k])
        levels.append(p[j])
    return levels


@dataclass(frozen=True)
class FitResult:
    K: int
    halfplane: str
    estimate: complex
    err_est: float
    levels: tuple
    samples: tuple  # (t, raw estimate) pairs

    def record(self):
        return {
            "K": self.K,
            "estimate_re": self.estimate.real,
            "estimate_im": self.estimate.imag,
            "err_est": self.err_est,
        }


def raw_estimates(sys, halfplane, K, known, scan):
    """(t, s (N - c0 - s sum_{1<=k<K} c_k/(c lam)^k) (c lam)^K) for every scan sample.

    s = +1 upper, -1 lower; for K = 0 the normalised value itself.
    """
    sgn = 1.0 if halfplane == "upper" else -1.0
    out = []
    for t, nv in scan:
        if K == 0:
            out.append((t, nv))
            continue
        _, _, cl = _axis(sys, halfplane, t)
        cl = complex(cl)
        rest = nv - known[0] - sgn * sum(known[k] / cl ** k for k in range(1, K))
        out.append((t, sgn * rest * cl ** K))
    return out


def fit_from_scan(sys, halfplane, K, known, scan):
    """Extrapolate c_K from an existing ray scan; see fit_leading_coefficient."""
    known = list(known) if known is not None else [0j] * K
    if len(known) < K:
        raise ValueError(f"need c_0..c_{K - 1}, got {len(known)} values")
    raw = raw_estimates(sys, halfplane, K, known, scan)
    levels = neville_at_zero([1.0 / t for t, _ in raw], [v for _, v in raw])
    est = complex(levels[-1])
    err = float(abs(levels[-1] - levels[-2])) if len(levels) > 1 else float("inf")
    diffs = [abs(levels[j] - levels[j - 1]) for j in range(1, len(levels))]
    if len(diffs) >= 2 and diffs[-1] > diffs[-2] and diffs[-1] > 1e-2 * max(abs(est), 1e-300):
        raise NoConvergence(
            f"extrapolation levels diverge for K={K} on the {halfplane} half-plane "
            f"(last gaps {diffs[-2]:.3g}, {diffs[-1]:.3g}); raise t"
        )
    return FitResult(K, halfplane, est, err, tuple(complex(v) for v in levels), tuple(raw))


def fit_leading_coefficient(sys, bc, halfplane, K, known=None, t_grid=DEFAULT_T_GRID,
                            tol=DEFAULT_TOL, method=DEFAULT_METHOD, force_ode=False):
    """Extrapolate c_K^{+-} from the determinant along the imaginary axis.

    ``known`` holds c_0..c_{K-1} for the half-plane (zeros when omitted).
    The per-t estimates are extrapolated to t = infinity by a polynomial in
    1/t; the error estimate is the gap between the last two levels.
    """
    scan = ray_scan(sys, bc, halfplane, t_grid, tol, method, force_ode)
    return fit_from_scan(sys, halfplane, K, known, scan)


def residual_slope(sys, bc, halfplane, coeffs, n, t_values=None, tol=DEFAULT_TOL, method=DEFAULT_METHOD):
    """Least-squares slope of log|normalised - expansion through order n| vs log t.

    The expansion is c_0 + s sum_{1<=k<=n} c_k/(c lam)^k (s = -1 on the lower
    half-plane). Returns (slope, t_values, residuals).
    """
    if t_values is None:
        t_values = np.geomspace(8.0, 80.0, 9)
    sgn = 1.0 if halfplane == "upper" else -1.0
    scan = ray_scan(sys, bc, halfplane, t_values, tol, method)
    ts, res = [], []
    for t, nv in scan:
        _, _, cl = _axis(sys, halfplane, t)
        cl = complex(cl)
        approx = coeffs[0] + sgn * sum(coeffs[k] / cl ** k for k in range(1, n + 1))
        ts.append(t)
        res.append(abs(nv - approx))
    ts, res = np.array(ts), np.array(res)
    slope = float(np.polyfit(np.log(ts), np.log(res), 1)[0])
    return slope, ts, res
