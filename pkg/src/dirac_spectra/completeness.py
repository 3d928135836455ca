"""Completeness and minimality verdicts for the root vectors of the boundary value problem.

The generic sufficient condition: the root vectors are complete and minimal
when some c_k^+ (k <= n, with c_0^+ = J32) and some c_k^- (c_0^- = J14) are
nonzero. Special structures of the boundary conditions admit sharper rules,
stated in terms of the minors, endpoint derivatives of Q12, Q21 and of

    P(x) = J13 b1 Q12(x) + J42 b2 Q21(1 - x).

Every rule below is checked against the coefficient table in the tests: a
rule that reports growth indices (k^+, k^-) must find c_{k^+}^+ and
c_{k^-}^- nonzero there.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .algebra import N_MAX
from .coeffs import coefficient_table
from .determinant import DEFAULT_TOL, fit_leading_coefficient, ray_scan
from .errors import NoConvergence
from .model import DEFAULT_ZERO_TOL, ZeroPolicy, minors

# derivative values kept per endpoint; rules look at most two orders past n
_DERIVS = N_MAX + 3


class Status(Enum):
    CompleteAndMinimal = "CompleteAndMinimal"
    Incomplete = "Incomplete"
    Inconclusive = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: Status
    rule: str
    witnesses: dict  # name -> {"value": complex, "threshold": float}
    order_used: int
    predicted_growth: object  # (k_plus, k_minus) or None
    zero_tol: float = DEFAULT_ZERO_TOL
    indices: dict = field(default_factory=dict)
    notes: tuple = ()
    comparison: dict = field(default_factory=dict)


class _Facts:
    """Minors, endpoint derivatives and their zero/nonzero status."""

    def __init__(self, sys, bc, zero_tol):
        self.sys = sys
        self.zp = ZeroPolicy(zero_tol)
        self.zero_tol = zero_tol
        self.ms = minors(bc).cleaned(zero_tol)
        self.jscale = self.ms.scale()
        self.J = self.ms.as_dict()
        b1, b2 = sys.b1, sys.b2
        d = _DERIVS
        self.q = {}
        for name, poly in (("Q12", sys.Q12), ("Q21", sys.Q21)):
            for x in (0, 1):
                self.q[name, x] = (poly.derivatives_at(float(x), d), poly.derivative_bounds_at(float(x), d))
        J13, J42 = self.ms.J13, self.ms.J42
        self.P = {}
        for x in (0, 1):
            v12, b12 = self.q["Q12", x]
            v21, b21 = self.q["Q21", 1 - x]
            vals = [J13 * b1 * v12[k] + (-1) ** k * J42 * b2 * v21[k] for k in range(d)]
            bnds = [abs(J13 * b1) * b12[k] + abs(J42 * b2) * b21[k] for k in range(d)]
            self.P[x] = (vals, bnds)

    # minors are cleaned, so an exact comparison applies
    def nzJ(self, name):
        return self.J[name] != 0

    def wJ(self, name):
        return {"value": self.J[name], "threshold": self.zero_tol * self.jscale}

    def q_nz(self, name, x, j):
        v, b = self.q[name, x]
        return self.zp.nonzero(v[j], b[j])

    def q_w(self, name, x, j):
        v, b = self.q[name, x]
        return {"value": v[j], "threshold": self.zp.threshold(b[j])}

    def q_first(self, name, x, limit):
        v, b = self.q[name, x]
        return self.zp.first_nonzero(v, b, limit)

    def P_nz(self, x, k):
        v, b = self.P[x]
        return self.zp.nonzero(v[k], b[k])

    def P_w(self, x, k):
        v, b = self.P[x]
        return {"value": v[k], "threshold": self.zp.threshold(b[k])}

    def P_first(self, x, limit):
        v, b = self.P[x]
        return self.zp.first_nonzero(v, b, limit)

    def joint_prefix(self, pairs, limit):
        """Largest m <= limit with every listed derivative zero for j < m."""
        m = 0
        while m < limit and not any(self.q_nz(name, x, m) for name, x in pairs):
            m += 1
        return m

    def identically_zero(self, poly, peers):
        scale = max([abs(c) for p in peers for c in p.coefficients] + [0.0])
        return all(abs(c) <= self.zero_tol * scale for c in poly.coefficients)

    def P_identically_zero(self):
        v, b = self.P[0]
        return not any(self.zp.nonzero(v[k], b[k]) for k in range(_DERIVS))


def _hit(tag, witnesses, implied, indices=None):
    return {"rule": tag, "witnesses": witnesses, "implied": implied, "indices": indices or {}}


# ---------------------------------------------------------------- exact-structure rules

def _criterion_form(F):
    """Boundary conditions a1 y1(0) + a2 y2(0) + a3 y1(1) = 0, y2(1) = 0 with a2 != 0."""
    return not F.nzJ("J12") and not F.nzJ("J13") and not F.nzJ("J32") and F.nzJ("J42")


def _rule_criterion(F):
    if not _criterion_form(F):
        return None
    sys = F.sys
    if F.identically_zero(sys.Q21, (sys.Q12, sys.Q21)):
        return Status.Incomplete, _hit("Cor-criterion", {"J42": F.wJ("J42")}, None, {"Q21_identically_zero": True})
    j1 = F.q_first("Q21", 1, _DERIVS)
    w = {"J42": F.wJ("J42"), f"Q21^({j1})(1)": F.q_w("Q21", 1, j1)}
    if F.nzJ("J14"):
        w["J14"] = F.wJ("J14")
        km = 0
        idx = {"j1": j1}
    else:
        j0 = F.q_first("Q21", 0, _DERIVS)
        w[f"Q21^({j0})(0)"] = F.q_w("Q21", 0, j0)
        km = j0 + 1
        idx = {"j0": j0, "j1": j1}
    return Status.CompleteAndMinimal, _hit("Cor-criterion", w, (j1 + 1, km), idx)


def _rule_dirac_vs_sl(F):
    if F.nzJ("J14") or F.nzJ("J32") or not (F.nzJ("J13") and F.nzJ("J42")):
        return None
    if not F.P_identically_zero():
        return None
    return Status.Incomplete, _hit("Rem-DiracVsSL", {"J13": F.wJ("J13"), "J42": F.wJ("J42")}, None, {"P_identically_zero": True})


# ---------------------------------------------------------------- catalogue of sufficient rules

def _rule_notR(F, n):
    if F.nzJ("J32") or F.nzJ("J42") or F.nzJ("J13") or not F.nzJ("J14"):
        return None
    if not (F.q_nz("Q12", 0, 0) and F.q_nz("Q21", 1, 0)):
        return None
    w = {"J14": F.wJ("J14"), "Q12(0)": F.q_w("Q12", 0, 0), "Q21(1)": F.q_w("Q21", 1, 0)}
    return _hit("Prop-2x2notR", w, (2, 0))


def _degenerate_pair(F):
    return not F.nzJ("J32") and not F.nzJ("J14") and F.nzJ("J13") and F.nzJ("J42")


def _rule_J32J14(F, n):
    if not _degenerate_pair(F):
        return None
    b1 = F.sys.b1
    J13, J42 = F.J["J13"], F.J["J42"]
    n0 = F.P_first(0, n)
    n1 = F.P_first(1, n)
    base = {"J13": F.wJ("J13"), "J42": F.wJ("J42")}
    if n0 is not None and n1 is not None and abs(n1 - n0) <= 1:
        w = dict(base, **{f"P^({n0})(0)": F.P_w(0, n0), f"P^({n1})(1)": F.P_w(1, n1)})
        return _hit("Thm-J32J14-case-i", w, (n0 + 1, n1 + 1), {"n0": n0, "n1": n1})
    # (ii): P vanishes at 0 through order n1+1; c_{n1+3}^+ is proportional to X
    if n1 is not None and n1 + 3 <= n and (n0 is None or n0 >= n1 + 2):
        q0, q0b = F.q["Q12", 0][0][0], F.q["Q12", 0][1][0]
        pv, pb = F.P[0][0][n1 + 2], F.P[0][1][n1 + 2]
        p1, p1b = F.P[1][0][n1], F.P[1][1][n1]
        X = J42 * pv + (-1) ** n1 * J13 * b1 ** 2 * q0 ** 2 * p1
        Xb = abs(J42) * pb + abs(J13) * b1 ** 2 * q0b ** 2 * p1b
        if F.zp.nonzero(X, Xb):
            w = dict(base, **{f"P^({n1})(1)": F.P_w(1, n1), "X": {"value": X, "threshold": F.zp.threshold(Xb)}})
            return _hit("Thm-J32J14-case-ii", w, (n1 + 3, n1 + 1), {"n0": n0, "n1": n1})
    # (iii): mirror image at the endpoint x = 1
    if n0 is not None and n0 + 3 <= n and (n1 is None or n1 >= n0 + 2):
        q1, q1b = F.q["Q12", 1][0][0], F.q["Q12", 1][1][0]
        pv, pb = F.P[1][0][n0 + 2], F.P[1][1][n0 + 2]
        p0, p0b = F.P[0][0][n0], F.P[0][1][n0]
        Y = J42 * pv + (-1) ** n0 * J13 * b1 ** 2 * q1 ** 2 * p0
        Yb = abs(J42) * pb + abs(J13) * b1 ** 2 * q1b ** 2 * p0b
        if F.zp.nonzero(Y, Yb):
            w = dict(base, **{f"P^({n0})(0)": F.P_w(0, n0), "Y": {"value": Y, "threshold": F.zp.threshold(Yb)}})
            return _hit("Thm-J32J14-case-iii", w, (n0 + 1, n0 + 3), {"n0": n0, "n1": n1})
    return None


def _rule_Q12Q21zero(F, n):
    if F.nzJ("J32") or not F.nzJ("J14"):
        return None
    m = F.joint_prefix((("Q12", 0), ("Q21", 1)), max(n - 1, 0))
    base = {"J14": F.wJ("J14")}
    for n0 in range(m, min(2 * m, n - 1) + 1):
        if F.P_nz(0, n0):
            w = dict(base, **{f"P^({n0})(0)": F.P_w(0, n0)})
            return _hit("Prop-Q12Q21zero-i", w, (n0 + 1, 0), {"m": m, "n0": n0})
    if 2 * m + 2 <= n:
        b1, b2 = F.sys.b1, F.sys.b2
        J14 = F.J["J14"]
        a, ab = F.q["Q12", 0][0][m], F.q["Q12", 0][1][m]
        c, cb = F.q["Q21", 1][0][m], F.q["Q21", 1][1][m]
        pv, pb = F.P[0][0][2 * m + 1], F.P[0][1][2 * m + 1]
        # i * c_{2m+2}^+ under the vanishing hypotheses
        Z = pv - 1j * (-1) ** m * J14 * b1 * b2 * a * c
        Zb = pb + abs(J14 * b1 * b2) * ab * cb
        if F.zp.nonzero(Z, Zb):
            w = dict(base, Z={"value": Z, "threshold": F.zp.threshold(Zb)})
            return _hit("Prop-Q12Q21zero-ii", w, (2 * m + 2, 0), {"m": m})
    return None


def _rule_Q0P0P1(F, n):
    if not _degenerate_pair(F):
        return None
    n0, n1 = F.P_first(0, n), F.P_first(1, n)
    if n0 is None or n1 is None:
        return None
    m0 = F.joint_prefix((("Q12", 0), ("Q21", 1)), max(n - 1, 0))
    m1 = F.joint_prefix((("Q12", 1), ("Q21", 0)), max(n - 1, 0))
    if -2 * m0 - 1 <= n0 - n1 <= 2 * m1 + 1:
        w = {"J13": F.wJ("J13"), "J42": F.wJ("J42"), f"P^({n0})(0)": F.P_w(0, n0), f"P^({n1})(1)": F.P_w(1, n1)}
        return _hit("Prop-Q0P0P1", w, (n0 + 1, n1 + 1), {"m0": m0, "m1": m1, "n0": n0, "n1": n1})
    return None


def _rule_makin_gen1(F, n):
    if F.nzJ("J32") or not F.nzJ("J14") or n < 1:
        return None
    m = math.ceil((n - 1) / 2)
    if F.joint_prefix((("Q12", 0), ("Q21", 1)), m) < m or not F.P_nz(0, n - 1):
        return None
    w = {"J14": F.wJ("J14"), f"P^({n - 1})(0)": F.P_w(0, n - 1)}
    return _hit("Cor-Makin-gen1", w, (n, 0), {"m": m})


def _rule_makin_gen2(F, n):
    if not _degenerate_pair(F):
        return None
    m = math.ceil((n - 2) / 3) if n >= 2 else 0
    ends = (("Q12", 0), ("Q12", 1), ("Q21", 0), ("Q21", 1))
    if F.joint_prefix(ends, m) < m:
        return None
    n0 = next((k for k in range(m, n) if F.P_nz(0, k)), None)
    n1 = next((k for k in range(m, n) if F.P_nz(1, k)), None)
    if n0 is None or n1 is None:
        return None
    w = {"J13": F.wJ("J13"), "J42": F.wJ("J42"), f"P^({n0})(0)": F.P_w(0, n0), f"P^({n1})(1)": F.P_w(1, n1)}
    return _hit("Cor-Makin-gen2", w, (n0 + 1, n1 + 1), {"m": m, "n0": n0, "n1": n1})


def _rule_P0P1zero(F, n):
    if not _degenerate_pair(F) or n < 3:
        return None
    n0 = F.P_first(0, n - 2)
    if n0 is None or not F.q_nz("Q12", 1, 0):
        return None
    if F.P_first(1, n) is not None:
        return None
    w = {"J13": F.wJ("J13"), "J42": F.wJ("J42"), f"P^({n0})(0)": F.P_w(0, n0), "Q12(1)": F.q_w("Q12", 1, 0)}
    return _hit("Cor-P0P1zero", w, (n0 + 1, n0 + 3), {"n0": n0})


def _rule_J32J42J13zero(F, n):
    if n < 2 or F.nzJ("J32") or F.nzJ("J42") or F.nzJ("J13") or not F.nzJ("J14"):
        return None
    j0 = F.q_first("Q12", 0, n - 1)
    j1 = F.q_first("Q21", 1, n - 1)
    if j0 is None or j1 is None or j0 + j1 > n - 2:
        return None
    w = {"J14": F.wJ("J14"), f"Q12^({j0})(0)": F.q_w("Q12", 0, j0), f"Q21^({j1})(1)": F.q_w("Q21", 1, j1)}
    return _hit("Cor-J32J42J13zero", w, (j0 + j1 + 2, 0), {"j0": j0, "j1": j1})


def _rule_J32J13zero(F, n):
    if F.nzJ("J32") or F.nzJ("J13") or not F.nzJ("J42"):
        return None
    j1 = F.q_first("Q21", 1, n)
    if j1 is None:
        return None
    w = {"J42": F.wJ("J42"), f"Q21^({j1})(1)": F.q_w("Q21", 1, j1)}
    if F.nzJ("J14"):
        w["J14"] = F.wJ("J14")
        return _hit("Cor-J32J13zero", w, (j1 + 1, 0), {"j1": j1})
    j0 = F.q_first("Q21", 0, n)
    if j0 is None:
        return None
    w[f"Q21^({j0})(0)"] = F.q_w("Q21", 0, j0)
    return _hit("Cor-J32J13zero", w, (j1 + 1, j0 + 1), {"j0": j0, "j1": j1})


def _rule_J14J42zero(F, n):
    if F.nzJ("J14") or F.nzJ("J42"):
        return None
    if not F.nzJ("J13"):
        # (i): c_0^+ = J32 and the first lower coefficient is a product term
        if not F.nzJ("J32"):
            return None
        j0 = F.q_first("Q21", 0, n)
        if j0 is None:
            return None
        j1 = F.q_first("Q12", 1, n - 1 - j0) if n - 1 - j0 > 0 else None
        if j1 is None:
            return None
        w = {"J32": F.wJ("J32"), f"Q21^({j0})(0)": F.q_w("Q21", 0, j0), f"Q12^({j1})(1)": F.q_w("Q12", 1, j1)}
        return _hit("Cor-J14J42zero-i", w, (0, j0 + j1 + 2), {"j0": j0, "j1": j1})
    # (ii): both coefficient sequences are driven by Q12
    j1 = F.q_first("Q12", 1, n)
    if j1 is None:
        return None
    w = {"J13": F.wJ("J13"), f"Q12^({j1})(1)": F.q_w("Q12", 1, j1)}
    if F.nzJ("J32"):
        w["J32"] = F.wJ("J32")
        return _hit("Cor-J14J42zero-ii", w, (0, j1 + 1), {"j1": j1})
    j0 = F.q_first("Q12", 0, n)
    if j0 is None:
        return None
    w[f"Q12^({j0})(0)"] = F.q_w("Q12", 0, j0)
    return _hit("Cor-J14J42zero-ii", w, (j0 + 1, j1 + 1), {"j0": j0, "j1": j1})


CATALOGUE = (
    _rule_notR,
    _rule_J32J14,
    _rule_Q12Q21zero,
    _rule_Q0P0P1,
    _rule_makin_gen1,
    _rule_makin_gen2,
    _rule_P0P1zero,
    _rule_J32J42J13zero,
    _rule_J32J13zero,
    _rule_J14J42zero,
)


# ---------------------------------------------------------------- comparison rules (completeness only)

def makin_comparison(F, n):
    """Smooth-case forms of Makin's completeness conditions (b1 = -1, b2 = 1 only)."""
    out = {}
    if not (F.sys.b1 == -1 and F.sys.b2 == 1):
        return out
    if not F.nzJ("J32") and F.nzJ("J14"):
        j = F.joint_prefix((("Q12", 0), ("Q21", 1)), n)
        ok = False
        if j < n:
            a = F.q["Q12", 0][0][j]
            c = F.q["Q21", 1][0][j]
            ok = (F.q_nz("Q12", 0, j) and F.q_nz("Q21", 1, j)
                  and F.P_nz(0, j))  # J13 Q12^(j)(0) != J42 (-1)^j Q21^(j)(1) up to the factor -1
            out["Cor-Makin"] = {"applies": bool(ok), "index": j + 1, "Q12": a, "Q21": c}
        else:
            out["Cor-Makin"] = {"applies": False, "index": None}
    if _degenerate_pair(F):
        ends_ok = all(F.q_first(name, x, n) is not None for name, x in (("Q12", 0), ("Q12", 1), ("Q21", 0), ("Q21", 1)))
        n0 = F.joint_prefix((("Q12", 0), ("Q21", 1)), n)
        n1 = F.joint_prefix((("Q12", 1), ("Q21", 0)), n)
        ok = ends_ok and n0 < n and n1 < n and F.P_nz(0, n0) and F.P_nz(1, n1)
        out["Cor-Makin2"] = {"applies": bool(ok), "n0": n0, "n1": n1}
    return out


# ---------------------------------------------------------------- verdicts

def _growth(sys, bc, n, implied, zero_tol):
    """First nonzero indices from the table, computed far enough to cover ``implied``."""
    if implied is None:
        return None
    order = min(N_MAX, max(n, *implied))
    tab = coefficient_table(sys, bc, order, zero_tol=zero_tol)
    kp = tab.k_plus if tab.k_plus is not None else implied[0]
    km = tab.k_minus if tab.k_minus is not None else implied[1]
    return (kp, km)


def _from_hit(sys, bc, n, status, hit, F, notes=()):
    growth = _growth(sys, bc, n, hit["implied"], F.zero_tol) if status == Status.CompleteAndMinimal else None
    return Verdict(
        status=status,
        rule=hit["rule"],
        witnesses=hit["witnesses"],
        order_used=n,
        predicted_growth=growth,
        zero_tol=F.zero_tol,
        indices=hit["indices"],
        notes=tuple(notes),
        comparison=makin_comparison(F, n),
    )


def special_case_catalogue(sys, bc, n, zero_tol=DEFAULT_ZERO_TOL):
    """First catalogue rule that certifies completeness and minimality, or None."""
    F = _Facts(sys, bc, zero_tol)
    for rule in CATALOGUE:
        hit = rule(F, n)
        if hit is not None:
            return _from_hit(sys, bc, n, Status.CompleteAndMinimal, hit, F)
    return None


def verdict(sys, bc, n, zero_tol=DEFAULT_ZERO_TOL):
    """Completeness/minimality verdict at expansion order n.

    Order of evaluation: the exact-structure rules (an if-and-only-if
    criterion and an incompleteness pattern), then the generic test on the
    coefficient table, then the catalogue of special sufficient rules.
    """
    if not (0 <= n <= N_MAX):
        raise ValueError(f"order n must lie in [0, {N_MAX}]")
    F = _Facts(sys, bc, zero_tol)
    for rule in (_rule_criterion, _rule_dirac_vs_sl):
        res = rule(F)
        if res is not None:
            status, hit = res
            return _from_hit(sys, bc, n, status, hit, F)

    tab = coefficient_table(sys, bc, n, zero_tol=zero_tol)
    if tab.k_plus is not None and tab.k_minus is not None:
        kp, km = tab.k_plus, tab.k_minus
        zp = ZeroPolicy(zero_tol)
        w = {
            f"c_{kp}^+": {"value": tab.c_plus[kp], "threshold": zp.threshold(tab.bounds_plus[kp])},
            f"c_{km}^-": {"value": tab.c_minus[km], "threshold": zp.threshold(tab.bounds_minus[km])},
        }
        return Verdict(
            status=Status.CompleteAndMinimal,
            rule="Thm-compl-gen-2x2",
            witnesses=w,
            order_used=n,
            predicted_growth=(kp, km),
            zero_tol=zero_tol,
            indices={"k_plus": kp, "k_minus": km},
            comparison=makin_comparison(F, n),
        )

    for rule in CATALOGUE:
        hit = rule(F, n)
        if hit is not None:
            return _from_hit(sys, bc, n, Status.CompleteAndMinimal, hit, F)

    notes = []
    if n < N_MAX:
        notes.append(f"no nonzero coefficient found through order {n}; a larger order may decide")
    return Verdict(
        status=Status.Inconclusive,
        rule="none",
        witnesses={},
        order_used=n,
        predicted_growth=None,
        zero_tol=zero_tol,
        indices={"k_plus": tab.k_plus, "k_minus": tab.k_minus},
        notes=tuple(notes),
        comparison=makin_comparison(F, n),
    )


# ---------------------------------------------------------------- numeric corroboration

@dataclass(frozen=True)
class Corroboration:
    status: str  # "OK", "SUSPECT", "DECAY_CONFIRMED", "NO_DECAY", "NOT_APPLICABLE"
    halfplanes: dict = field(default_factory=dict)


DEFAULT_CORROBORATION_GRID = (10.0, 14.0, 20.0, 28.0, 40.0, 56.0, 80.0)


def numeric_corroboration(sys, bc, v, t_grid=DEFAULT_CORROBORATION_GRID, tol=DEFAULT_TOL, floor_ratio=1e-3):
    """Check the determinant's growth along the imaginary axis against a verdict.

    For a complete-and-minimal verdict with growth indices (k^+, k^-), the
    quantities |Delta(+-it)| e^{(b1 t | -b2 t)} t^{k} must stay above
    floor_ratio times the fitted leading coefficient |c_k| / |c|^k.
    For an incompleteness verdict from the criterion, the upper normalised
    determinant must decay faster than every tested power of t.
    """
    c_abs = abs(sys.b1 - sys.b2)
    if v.status == Status.CompleteAndMinimal and v.predicted_growth is not None:
        halves = {}
        ok = True
        for hp, k in zip(("upper", "lower"), v.predicted_growth):
            scan = ray_scan(sys, bc, hp, t_grid, tol)
            q = [abs(nv) * t ** k for t, nv in scan]
            try:
                fit = fit_leading_coefficient(sys, bc, hp, k, [0j] * k, tol=tol)
                ref = abs(fit.estimate) / c_abs ** k
                fit_rec = fit.record()
            except NoConvergence as exc:
                ref, fit_rec = float("nan"), {"error": str(exc)}
            floor = float(min(q))
            passed = bool(np.isfinite(ref) and floor >= floor_ratio * ref)
            ok = ok and passed
            halves[hp] = {"k": k, "floor": floor, "reference": ref, "fit": fit_rec, "passed": passed,
                          "t": list(map(float, t_grid)), "values": q}
        return Corroboration("OK" if ok else "SUSPECT", halves)
    if v.status == Status.Incomplete:
        scan = ray_scan(sys, bc, "upper", t_grid, tol)
        vals = np.array([abs(nv) for _, nv in scan])
        ts = np.array([t for t, _ in scan])
        powers = {}
        decays = True
        for p in range(0, 7):
            q = vals * ts ** p
            dec = bool(q[-1] < q[-2] < q[-3] and q[-1] < q[0])
            powers[p] = dec
            decays = decays and dec
        return Corroboration("DECAY_CONFIRMED" if decays else "NO_DECAY",
                             {"upper": {"t": ts.tolist(), "values": vals.tolist(), "decays_vs_power": powers}})
    return Corroboration("NOT_APPLICABLE")
