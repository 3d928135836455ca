"""Counting and locating zeros of the characteristic determinant in rectangles.

Counting uses the argument principle: the phase of Delta is tracked along the
rectangle boundary, bisecting until consecutive samples differ by less than
pi/4, and the accumulated phase divided by 2 pi is the number of zeros
(with multiplicity) inside.
"""

import math
from dataclasses import dataclass

import numpy as np

from .determinant import delta_arrays
from .errors import BoundaryZero, NewtonStall
from .integrate import DEFAULT_TOL

MAX_PHASE_STEP = math.pi / 4
GUARD = 1e-4  # guard distance as a fraction of the rectangle diameter
MAX_INFLATE = 3
_SPLITS = (0.5 + 0.0123, 0.5 - 0.0271, 0.5 + 0.0419, 0.5 - 0.0587)


@dataclass(frozen=True)
class Rect:
    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError(f"empty rectangle {self}")

    @property
    def diameter(self):
        return math.hypot(self.re_max - self.re_min, self.im_max - self.im_min)

    @property
    def center(self):
        return complex(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))

    def corners(self):
        return [
            complex(self.re_min, self.im_min),
            complex(self.re_max, self.im_min),
            complex(self.re_max, self.im_max),
            complex(self.re_min, self.im_max),
        ]

    def inflated(self, d):
        return Rect(self.re_min - d, self.re_max + d, self.im_min - d, self.im_max + d)

    def split(self, fx=0.5, fy=0.5):
        xm = self.re_min + fx * (self.re_max - self.re_min)
        ym = self.im_min + fy * (self.im_max - self.im_min)
        return [
            Rect(self.re_min, xm, self.im_min, ym),
            Rect(xm, self.re_max, self.im_min, ym),
            Rect(xm, self.re_max, ym, self.im_max),
            Rect(self.re_min, xm, ym, self.im_max),
        ]


@dataclass(frozen=True)
class EigenvalueSet:
    eigenvalues: list  # (lam, multiplicity) pairs, sorted by real then imaginary part
    total_count: int
    rect: Rect  # rectangle actually counted (after any inflation)


class _Evaluator:
    """Delta as a batched phase/modulus oracle with an evaluation counter."""

    def __init__(self, sys, bc, tol):
        self.sys, self.bc, self.tol = sys, bc, tol
        self.calls = 0

    def __call__(self, lams):
        lams = np.asarray(lams, dtype=complex)
        self.calls += lams.size
        return delta_arrays(self.sys, self.bc, lams, self.tol)

    def value(self, lams):
        m, E = self(lams)
        return m * np.exp(E)


def _winding(ev, points, guard):
    """Winding number of Delta around 0 along the closed polyline ``points``.

    Intervals are bisected until every phase step is below MAX_PHASE_STEP.
    A verification pass then evaluates every midpoint; a step that only
    looked small because it wrapped around 2 pi shows up there and is
    refined further. Passes repeat until no midpoint disagrees.
    """
    n_edges = len(points)
    b = ev.sys.b2 - ev.sys.b1
    edges, params = [], []
    for i in range(n_edges):
        a, c = points[i], points[(i + 1) % n_edges]
        n0 = max(8, int(math.ceil(abs(c - a) * b * 2)))
        edges.append((a, c))
        params.append(np.linspace(0.0, 1.0, n0 + 1))

    def phases_at(lams):
        m, _ = ev(lams)
        if np.any(m == 0):
            raise BoundaryZero("determinant vanishes at a boundary sample")
        return np.angle(m)

    flat = phases_at(np.concatenate([a + (c - a) * s for (a, c), s in zip(edges, params)]))
    phases, pos = [], 0
    for s in params:
        phases.append(flat[pos:pos + s.size])
        pos += s.size

    def insert(where):
        """Evaluate midpoints of the listed intervals and splice them in."""
        lams = [edges[e][0] + (edges[e][1] - edges[e][0]) * mids for e, _, mids in where]
        ph = phases_at(np.concatenate(lams))
        pos = 0
        for e, idx, mids in where:
            k = mids.size
            params[e] = np.insert(params[e], idx + 1, mids)
            phases[e] = np.insert(phases[e], idx + 1, ph[pos:pos + k])
            pos += k

    def midpoints(e, idx):
        return 0.5 * (params[e][idx] + params[e][idx + 1])

    for _ in range(200):
        todo = []
        for e, (a, c) in enumerate(edges):
            d = np.angle(np.exp(1j * np.diff(phases[e])))
            bad = np.nonzero(np.abs(d) >= MAX_PHASE_STEP)[0]
            if bad.size:
                short = (params[e][bad + 1] - params[e][bad]) * abs(c - a)
                if np.any(short < guard):
                    raise BoundaryZero("phase varies too fast near the boundary; a zero lies within the guard distance")
                todo.append((e, bad, midpoints(e, bad)))
        if todo:
            insert(todo)
            continue
        # every step is small: verify by halving all intervals once
        before = [p.size for p in params]
        insert([(e, np.arange(params[e].size - 1), midpoints(e, np.arange(params[e].size - 1)))
                for e in range(n_edges)])
        steps = [np.abs(np.angle(np.exp(1j * np.diff(ph)))) for ph in phases]
        if all(np.all(st < MAX_PHASE_STEP) for st in steps):
            break
        if sum(p.size for p in params) > 200 * sum(before):
            raise BoundaryZero("phase refinement did not settle")
    else:
        raise BoundaryZero("phase refinement did not terminate")

    total = sum(float(np.sum(np.angle(np.exp(1j * np.diff(ph))))) for ph in phases)
    w = total / (2 * math.pi)
    k = int(round(w))
    if abs(w - k) > 1e-6:
        raise BoundaryZero(f"non-integer winding number {w}")
    return k


def _count(ev, rect, guard):
    return _winding(ev, rect.corners(), guard)


def count_zeros_detailed(sys, bc, rect, tol=DEFAULT_TOL):
    """(count, rectangle used). Inflates the rectangle when a zero hugs its boundary."""
    ev = _Evaluator(sys, bc, tol)
    guard = GUARD * rect.diameter
    r = rect
    for attempt in range(MAX_INFLATE + 1):
        try:
            return _count(ev, r, guard), r
        except BoundaryZero:
            if attempt == MAX_INFLATE:
                raise
            r = rect.inflated(max(10 * guard, 1e-3 * rect.diameter) * (attempt + 1))
    raise AssertionError("unreachable")


def count_zeros(sys, bc, rect, tol=DEFAULT_TOL):
    """Number of zeros of Delta (with multiplicity) inside ``rect``."""
    return count_zeros_detailed(sys, bc, rect, tol)[0]


def _derivative(ev, lam):
    h = 1e-5 * (1 + abs(lam))
    f = ev.value([lam, lam + h, lam - h])
    return f[0], (f[1] - f[2]) / (2 * h)


def _newton(ev, z, mult, cell, max_iter=60):
    """Newton iteration z <- z - mult * Delta/Delta'; stays near ``cell``."""
    slack = 0.5 * cell.diameter
    for _ in range(max_iter):
        f, df = _derivative(ev, z)
        if f == 0:
            return z
        if df == 0:
            raise NewtonStall(f"zero derivative at {z}")
        step = mult * f / df
        z = z - step
        if not (cell.re_min - slack <= z.real <= cell.re_max + slack and cell.im_min - slack <= z.imag <= cell.im_max + slack):
            raise NewtonStall(f"Newton left its cell {cell}")
        if abs(step) <= 1e-14 * (1 + abs(z)):
            return z
    if abs(step) <= 1e-10 * (1 + abs(z)):
        return z
    raise NewtonStall(f"Newton did not converge near {z}")


def _circle_moments(ev, center, r, n=64):
    """Winding number and first moment (1/2 pi i) int (lam - center) Delta'/Delta on a circle."""
    theta = 2 * math.pi * np.arange(n) / n
    w = r * np.exp(1j * theta)
    lam = center + w
    h = 1e-5 * (1 + np.abs(lam))
    vals = ev.value(np.concatenate([lam, lam + h, lam - h]))
    f, fp, fm = vals[:n], vals[n:2 * n], vals[2 * n:]
    if np.any(f == 0):
        raise BoundaryZero("zero on the refinement circle")
    ratio = (fp - fm) / (2 * h) / f
    count = float(np.real(np.mean(w * ratio)))
    moment = complex(np.mean(w * w * ratio))
    return count, moment


def _contains(cell, z, margin):
    return (cell.re_min - margin <= z.real <= cell.re_max + margin
            and cell.im_min - margin <= z.imag <= cell.im_max + margin)


def _refine(ev, cell, mult):
    z0 = cell.center
    if mult == 1:
        z = _newton(ev, z0, 1, cell)
        if not _contains(cell, z, 1e-9 * (1 + abs(z))):
            raise NewtonStall(f"Newton converged outside {cell}")
        return complex(z), 1
    try:
        z = _newton(ev, z0, mult, cell)
    except NewtonStall:
        z = z0
    # a multiple zero (or a tight cluster): polish by the contour centroid
    r = max(cell.diameter, 10 * abs(z - z0))
    count, moment = _circle_moments(ev, z, r)
    m = int(round(count))
    if m != mult:
        raise NewtonStall(f"circle around {z} holds {count:.3f} zeros, expected {mult}")
    return complex(z + moment / m), m


def locate_zeros(sys, bc, rect, tol=DEFAULT_TOL, cluster_fraction=1e-2):
    """Zeros of Delta inside ``rect`` with multiplicities.

    Cells are quadrisected until they hold at most one zero, or until they
    are smaller than ``cluster_fraction`` of the rectangle diameter, in which
    case their zeros are reported as one cluster at its centroid.
    """
    total, used = count_zeros_detailed(sys, bc, rect, tol)
    ev = _Evaluator(sys, bc, tol)
    guard = GUARD * used.diameter
    small = cluster_fraction * used.diameter
    found = []

    def visit(cell, count):
        if count == 0:
            return
        if count == 1 or cell.diameter <= small:
            try:
                found.append(_refine(ev, cell, count))
                return
            except (NewtonStall, BoundaryZero):
                # a single zero far from the cell centre: shrink the cell and retry
                if count > 1 or cell.diameter <= 1e-6 * used.diameter:
                    raise
        for fx in _SPLITS:
            children = cell.split(fx, fx)
            try:
                counts = [_count(ev, ch, guard) for ch in children[:3]]
            except BoundaryZero:
                continue
            counts.append(count - sum(counts))
            if counts[3] < 0:
                continue
            for ch, k in zip(children, counts):
                visit(ch, k)
            return
        raise BoundaryZero(f"could not split {cell} away from its zeros")

    visit(used, total)
    found.sort(key=lambda p: (round(p[0].real, 9), round(p[0].imag, 9)))
    return EigenvalueSet(eigenvalues=found, total_count=total, rect=used)
