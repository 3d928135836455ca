"""Batched embedded Runge-Kutta integration (DOP853 by default, DOPRI5 available) of the rescaled fundamental system.

Column k of the fundamental matrix is integrated in the variable
z(x) = y(x) exp(-i b_k lam x), which satisfies

    z' = diag(i lam (b1 - b_k), i lam (b2 - b_k)) z + [[0, q_+(x)], [q_-(x), 0]] z.

After every accepted step each column is divided by its largest component and
the logarithm of that factor is accumulated, so arbitrarily large growth never
overflows. All values of lam in a batch share one step-size sequence.
"""

import numpy as np

from . import _dop853_tableau as _t8
from .errors import StepFailure
from .model import q_pm

DEFAULT_TOL = 1e-11
H_MIN = 1e-8
H_MAX = 0.05


class _Pair:
    """Explicit embedded pair with a first-same-as-last final evaluation.

    ``A``/``C`` describe the s internal stages, ``B`` the propagated weights;
    the derivative at the new point is stage s+1 and may enter the error
    weights.
    """

    def __init__(self, name, C, A, B, order):
        self.name = name
        self.C = np.array(C[: len(A)])
        self.A = [np.array(row) for row in A]
        self.B = np.array(B)
        self.exponent = 1.0 / order

    def error(self, K, h):
        raise NotImplementedError


class _Dopri5(_Pair):
    E = np.array([71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40])

    def __init__(self):
        super().__init__(
            "dopri5",
            (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0),
            (
                (),
                (1 / 5,),
                (3 / 40, 9 / 40),
                (44 / 45, -56 / 15, 32 / 9),
                (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
                (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
            ),
            (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
            order=5,
        )

    def error(self, K, h):
        return np.abs(h * np.tensordot(self.E, K, axes=1))


class _Dop853(_Pair):
    def __init__(self):
        super().__init__("dop853", _t8.C, _t8.A, _t8.B, order=8)
        self.E3 = np.array(_t8.E3)
        self.E5 = np.array(_t8.E5)

    def error(self, K, h):
        e5 = np.abs(h * np.tensordot(self.E5, K, axes=1)) ** 2
        e3 = np.abs(h * np.tensordot(self.E3, K, axes=1)) ** 2
        denom = np.sqrt(e5 + 0.01 * e3)
        return np.where(denom > 0, e5 / np.where(denom > 0, denom, 1.0), 0.0)


PAIRS = {"dopri5": _Dopri5(), "dop853": _Dop853()}
DEFAULT_METHOD = "dop853"


class RescaledColumns:
    """Integration result: z[k, i, :] and log_scale[k, i] for column k, lam_i."""

    def __init__(self, lams, z, log_scale, steps):
        self.lams = lams
        self.z = z
        self.log_scale = log_scale
        self.steps = steps


def integrate_columns(sys, lams, tol=DEFAULT_TOL, method=DEFAULT_METHOD, h_min=H_MIN, h_max=H_MAX):
    """Integrate both rescaled columns from x=0 to x=1 for every lam in ``lams``.

    The local error of every accepted step, measured against the unit
    max-norm of each column, is at most ``tol``.
    """
    if not (1e-13 <= tol <= 1e-6):
        raise ValueError(f"tol must lie in [1e-13, 1e-6], got {tol}")
    pair = PAIRS[method]
    lams = np.atleast_1d(np.asarray(lams, dtype=complex))
    n = lams.size
    b = np.array([sys.b1, sys.b2])
    qp, qm = q_pm(sys)

    # D[k, i, j] = i lam_i (b_j - b_k)
    D = 1j * lams[None, :, None] * (b[None, None, :] - b[:, None, None])

    def f(x, z):
        a, c = qp(x), qm(x)
        out = np.empty_like(z)
        out[..., 0] = D[..., 0] * z[..., 0] + a * z[..., 1]
        out[..., 1] = c * z[..., 0] + D[..., 1] * z[..., 1]
        return out

    z = np.zeros((2, n, 2), dtype=complex)
    z[0, :, 0] = 1.0
    z[1, :, 1] = 1.0
    log_scale = np.zeros((2, n))

    s_count = len(pair.A)
    K = np.empty((s_count + 1, 2, n, 2), dtype=complex)
    rate = float(np.max(np.abs(D))) if n else 0.0
    rate += abs(qp(0.0)) + abs(qm(0.0)) + 1.0
    h = min(h_max, 1.0 / rate)
    x = 0.0
    K[0] = f(x, z)
    steps = 0
    while x < 1.0:
        h = min(h, 1.0 - x)
        last = h >= 1.0 - x
        for s in range(1, s_count):
            dz = np.tensordot(pair.A[s], K[:s], axes=1)
            K[s] = f(x + pair.C[s] * h, z + h * dz)
        z_new = z + h * np.tensordot(pair.B, K[:s_count], axes=1)
        K[s_count] = f(x + h, z_new)
        err = float(np.max(pair.error(K, h))) if n else 0.0
        if err <= tol or h <= h_min * (1 + 1e-12):
            if err > tol:
                raise StepFailure(f"step size underflow at x={x:.6g} (err={err:.3g})", lam=lams)
            x = 1.0 if last else x + h
            steps += 1
            scale = np.max(np.abs(z_new), axis=2)
            scale = np.where(scale > 0, scale, 1.0)
            z = z_new / scale[..., None]
            K[0] = K[s_count] / scale[..., None]
            log_scale += np.log(scale)
        fac = 5.0 if err == 0 else min(5.0, max(0.2, 0.9 * (tol / err) ** pair.exponent))
        h = min(h_max, max(h_min, h * fac))
    return RescaledColumns(lams, z, log_scale, steps)


def fundamental_entries(sys, cols):
    """phi_jk(1, lam) for every lam as (mantissa, log-exponent) arrays.

    Returns m, E of shape (n, 2, 2) with phi[i, j, k] = m * exp(E).
    """
    lams = cols.lams
    b = np.array([sys.b1, sys.b2])
    # exp(i b_k lam) = exp(-b_k Im lam) * exp(i b_k Re lam)
    grow = -b[:, None] * lams.imag[None, :] + cols.log_scale  # (k, i)
    phase = np.exp(1j * b[:, None] * lams.real[None, :])  # (k, i)
    m = np.transpose(cols.z * phase[..., None], (1, 2, 0))  # (i, j, k)
    E = np.broadcast_to(np.transpose(grow)[:, None, :], m.shape).copy()
    return m, E
