"""Endpoint values of sigma_k^± and the expansion coefficients c_k^± of the determinant.

Along the imaginary axis the determinant behaves like

    upper:  Delta(lam) e^{-i b1 lam} = (J32 + sum_k c_k^+ / (c lam)^k + ...)(1 + o(1))
    lower:  Delta(lam) e^{-i b2 lam} = (J14 - sum_k c_k^- / (c lam)^k + ...)(1 + o(1))

with c = i (b1 - b2). The coefficients are

    c_k^+ = J13 (-1)^{k-1} s_k^-(0) + J42 s_k^+(1) - J14 sum_{j=1}^{k-1} (-1)^j s_j^-(0) s_{k-j}^+(1)
    c_k^- = J13 (-1)^{k-1} s_k^-(1) + J42 s_k^+(0) + J32 sum_{j=1}^{k-1} (-1)^j s_j^-(1) s_{k-j}^+(0)

where s_k^± = sigma_k evaluated with A bound to q_∓ and B to q_±.
"""

from dataclasses import dataclass, field

from .algebra import N_MAX, evaluate, evaluate_bound, sigma
from .errors import DiracSpectraError, MaxOrderExceeded
from .model import DEFAULT_ZERO_TOL, ZeroPolicy, minors, q_pm


def _q_values(sys, endpoint, count):
    qp, qm = q_pm(sys)
    return (
        qp.derivatives_at(endpoint, count),
        qp.derivative_bounds_at(endpoint, count),
        qm.derivatives_at(endpoint, count),
        qm.derivative_bounds_at(endpoint, count),
    )


def sigma_endpoint_with_bound(sys, sign, k, endpoint):
    """(value, roundoff scale) of sigma_k^{sign} at x = endpoint."""
    if k > N_MAX:
        raise MaxOrderExceeded(f"sigma index {k} exceeds n_max={N_MAX}")
    qp, qp_b, qm, qm_b = _q_values(sys, endpoint, k)
    if sign == "+":
        vals, bnds = (qm, qp), (qm_b, qp_b)
    elif sign == "-":
        vals, bnds = (qp, qm), (qp_b, qm_b)
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    p = sigma(k)
    return evaluate(p, *vals), evaluate_bound(p, *bnds)


def sigma_endpoint(sys, sign, k, endpoint):
    return sigma_endpoint_with_bound(sys, sign, k, endpoint)[0]


def _endpoint_series(sys, sign, endpoint, n):
    """Lists indexed 1..n (index 0 unused) of sigma values and bounds."""
    vals, bnds = [0j], [0.0]
    if n == 0:
        return vals, bnds
    qp, qp_b, qm, qm_b = _q_values(sys, endpoint, n)
    if sign == "+":
        v, b = (qm, qp), (qm_b, qp_b)
    else:
        v, b = (qp, qm), (qp_b, qm_b)
    for k in range(1, n + 1):
        p = sigma(k)
        vals.append(evaluate(p, *v))
        bnds.append(evaluate_bound(p, *b))
    return vals, bnds


def _combine(k, s_minus, s_plus, j13, j42, j_prod):
    """J13 (-1)^{k-1} s^-_k + J42 s^+_k + j_prod * sum_j (-1)^j s^-_j s^+_{k-j}.

    The upper table passes j_prod = -J14, the lower one j_prod = +J32.
    Each argument s is a (values, bounds) pair; returns (value, bound).
    """
    (sm, smb), (sp, spb) = s_minus, s_plus
    sgn = -1 if (k - 1) % 2 else 1
    val = j13 * sgn * sm[k] + j42 * sp[k]
    bnd = abs(j13) * smb[k] + abs(j42) * spb[k]
    acc, acc_b = 0j, 0.0
    for j in range(1, k):
        acc += (-1) ** j * sm[j] * sp[k - j]
        acc_b += smb[j] * spb[k - j]
    return val + j_prod * acc, bnd + abs(j_prod) * acc_b


@dataclass(frozen=True)
class CoefficientTable:
    n: int
    c_plus: list
    c_minus: list
    k_plus: object  # int or None (absent)
    k_minus: object
    bounds_plus: list = field(repr=False)
    bounds_minus: list = field(repr=False)
    zero_tol: float = DEFAULT_ZERO_TOL

    def nonzero_plus(self, k):
        return ZeroPolicy(self.zero_tol).nonzero(self.c_plus[k], self.bounds_plus[k])

    def nonzero_minus(self, k):
        return ZeroPolicy(self.zero_tol).nonzero(self.c_minus[k], self.bounds_minus[k])


def coefficient_table(sys, bc, n, zero_tol=DEFAULT_ZERO_TOL, ms=None):
    """c_0..c_n for both half-planes, and the first nonzero indices k^±.

    Minors at or below zero_tol times the largest minor are treated as
    exact zeros before anything else is computed.
    """
    if n > N_MAX:
        raise MaxOrderExceeded(f"order {n} exceeds n_max={N_MAX}")
    ms = (ms if ms is not None else minors(bc)).cleaned(zero_tol)
    jscale = ms.scale()
    s_m0 = _endpoint_series(sys, "-", 0.0, n)
    s_m1 = _endpoint_series(sys, "-", 1.0, n)
    s_p0 = _endpoint_series(sys, "+", 0.0, n)
    s_p1 = _endpoint_series(sys, "+", 1.0, n)

    c_plus, b_plus = [ms.J32], [jscale]
    c_minus, b_minus = [ms.J14], [jscale]
    for k in range(1, n + 1):
        v, b = _combine(k, s_m0, s_p1, ms.J13, ms.J42, -ms.J14)
        c_plus.append(v)
        b_plus.append(b)
        v, b = _combine(k, s_m1, s_p0, ms.J13, ms.J42, ms.J32)
        c_minus.append(v)
        b_minus.append(b)

    zp = ZeroPolicy(zero_tol)
    return CoefficientTable(
        n=n,
        c_plus=c_plus,
        c_minus=c_minus,
        k_plus=zp.first_nonzero(c_plus, b_plus),
        k_minus=zp.first_nonzero(c_minus, b_minus),
        bounds_plus=b_plus,
        bounds_minus=b_minus,
        zero_tol=zero_tol,
    )


def closed_form_c123(sys, ms):
    """Closed forms of c_1^±, c_2^±, c_3^± in terms of q_± and their derivatives.

    The product terms of c_2^± carry the sign obtained from the general
    formula at k = 2: +J14 q_+(0) q_-(1) and -J32 q_+(1) q_-(0).
    """
    qp, qm = q_pm(sys)
    p0, p1 = qp.derivatives_at(0.0, 3), qp.derivatives_at(1.0, 3)
    m0, m1 = qm.derivatives_at(0.0, 3), qm.derivatives_at(1.0, 3)
    J13, J42, J14, J32 = ms.J13, ms.J42, ms.J14, ms.J32
    plus = [
        J13 * p0[0] + J42 * m1[0],
        J13 * p0[1] - J42 * m1[1] + J14 * p0[0] * m1[0],
        J13 * (p0[2] - p0[0] ** 2 * m0[0])
        + J42 * (m1[2] - m1[0] ** 2 * p1[0])
        + J14 * (p0[1] * m1[0] - p0[0] * m1[1]),
    ]
    minus = [
        J13 * p1[0] + J42 * m0[0],
        J13 * p1[1] - J42 * m0[1] - J32 * p1[0] * m0[0],
        J13 * (p1[2] - p1[0] ** 2 * m1[0])
        + J42 * (m0[2] - m0[0] ** 2 * p0[0])
        - J32 * (p1[1] * m0[0] - p1[0] * m0[1]),
    ]
    return plus, minus


class MismatchReport(DiracSpectraError):
    """Raised when a coefficient table disagrees with the closed forms."""

    def __init__(self, mismatches):
        super().__init__(f"closed-form mismatch at {[(s, k) for s, k, *_ in mismatches]}")
        self.mismatches = mismatches


@dataclass(frozen=True)
class C123Check:
    rows: list  # (sign, k, table value, closed form, relative error)
    rel_tol: float

    @property
    def ok(self):
        return all(r[4] <= self.rel_tol for r in self.rows)

    @property
    def mismatches(self):
        return [r for r in self.rows if r[4] > self.rel_tol]


def lemma_c123_check(sys, bc, table=None, rel_tol=1e-12, zero_tol=DEFAULT_ZERO_TOL, raise_on_mismatch=False):
    """Compare table entries k = 1..3 with the closed forms.

    The error is measured relative to the roundoff scale of the table entry
    (sum of term magnitudes), which is never smaller than the entry itself.
    """
    ms = minors(bc).cleaned(zero_tol)
    if table is None:
        table = coefficient_table(sys, bc, 3, zero_tol=zero_tol, ms=ms)
    plus, minus = closed_form_c123(sys, ms)
    rows = []
    for sign, closed, vals, bnds in (
        ("+", plus, table.c_plus, table.bounds_plus),
        ("-", minus, table.c_minus, table.bounds_minus),
    ):
        for k in (1, 2, 3):
            scale = max(bnds[k], abs(closed[k - 1]), abs(vals[k]))
            err = abs(vals[k] - closed[k - 1])
            rel = err / scale if scale > 0 else (0.0 if err == 0 else float("inf"))
            rows.append((sign, k, vals[k], closed[k - 1], rel))
    report = C123Check(rows=rows, rel_tol=rel_tol)
    if raise_on_mismatch and not report.ok:
        raise MismatchReport(report.mismatches)
    return report
