"""Formal differential polynomials in two function species and the sigma_k recursion.

A symbol ``A3`` stands for the third derivative of the species-A function,
``B0`` for the species-B function itself. The coefficients sigma_k of the
determinant expansion are integer polynomials in these symbols, generated by

    sigma_1 = A0
    sigma_{k+1} = -d/dx sigma_k - B0 * sum_{j=1}^{k-1} sigma_j sigma_{k-j}

The same polynomial serves both half-planes: callers bind A to q_- and B to
q_+ for sigma^+, and the other way round for sigma^-.
"""

import re
import threading
from enum import IntEnum
from typing import NamedTuple

from .errors import MaxOrderExceeded, MissingDerivative
from .polyfunc import PolyFunc

N_MAX = 12


class Species(IntEnum):
    A = 0
    B = 1


class DerivSymbol(NamedTuple):
    species: Species
    order: int

    def __str__(self):
        return f"{self.species.name}{self.order}"


def make_monomial(symbols):
    """Canonical monomial: sorted tuple of DerivSymbol (species-major, then order)."""
    return tuple(sorted(DerivSymbol(Species(s), int(o)) for s, o in symbols))


def _monomial_str(mono):
    a = sorted((s.order for s in mono if s.species == Species.A), reverse=True)
    b = sorted((s.order for s in mono if s.species == Species.B), reverse=True)
    return ".".join([f"A{o}" for o in a] + [f"B{o}" for o in b])


def _display_key(mono):
    a = sorted((s.order for s in mono if s.species == Species.A), reverse=True)
    b = sorted((s.order for s in mono if s.species == Species.B), reverse=True)
    return (len(mono), tuple(-o for o in a), tuple(-o for o in b))


class DerivPolynomial:
    """Immutable map Monomial -> nonzero int."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = int(c)
            if c:
                clean[make_monomial(mono)] = clean.get(make_monomial(mono), 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def symbol(cls, species, order):
        return cls({(DerivSymbol(Species(species), order),): 1})

    @classmethod
    def parse(cls, text):
        """Inverse of str(): parses e.g. ``-1*A5 + 8*A3.A0.B0``."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = {}
        for sign, coef, mono in re.findall(r"([+-]?)\s*(\d+)\*([AB0-9.]+)", text.replace(" ", "")):
            c = int(coef) * (-1 if sign == "-" else 1)
            syms = []
            for tok in mono.split("."):
                syms.append((Species[tok[0]], int(tok[1:])))
            key = make_monomial(syms)
            terms[key] = terms.get(key, 0) + c
        return cls(terms)

    @property
    def terms(self):
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def coefficient(self, mono):
        return self._terms.get(make_monomial(mono), 0)

    def max_order(self):
        return max((s.order for m in self._terms for s in m), default=-1)

    def __eq__(self, other):
        if not isinstance(other, DerivPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return DerivPolynomial(out)

    def __neg__(self):
        return DerivPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DerivPolynomial({m: c * other for m, c in self._terms.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=_display_key):
            c = self._terms[mono]
            body = _monomial_str(mono)
            if not parts:
                parts.append(f"{c}*{body}")
            elif c < 0:
                parts.append(f" - {-c}*{body}")
            else:
                parts.append(f" + {c}*{body}")
        return "".join(parts)

    def __repr__(self):
        return f"DerivPolynomial({str(self)!r})"


def differentiate(p, n_max=N_MAX):
    """Apply d/dx by the Leibniz rule."""
    out = {}
    for mono, c in p:
        for i, sym in enumerate(mono):
            if sym.order + 1 > n_max:
                raise MaxOrderExceeded(f"derivative order {sym.order + 1} exceeds n_max={n_max}")
            new = make_monomial(mono[:i] + (DerivSymbol(sym.species, sym.order + 1),) + mono[i + 1:])
            out[new] = out.get(new, 0) + c
    return DerivPolynomial(out)


def multiply(p, q):
    out = {}
    for m1, c1 in p:
        for m2, c2 in q:
            key = make_monomial(m1 + m2)
            out[key] = out.get(key, 0) + c1 * c2
    return DerivPolynomial(out)


_sigma_memo = {}
_sigma_lock = threading.Lock()


def sigma(k, n_max=N_MAX):
    """The k-th coefficient polynomial, memoised."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > n_max:
        raise MaxOrderExceeded(f"sigma index {k} exceeds n_max={n_max}")
    hit = _sigma_memo.get(k)
    if hit is not None:
        return hit
    with _sigma_lock:
        if k in _sigma_memo:
            return _sigma_memo[k]
        if 1 not in _sigma_memo:
            _sigma_memo[1] = DerivPolynomial.symbol(Species.A, 0)
        b0 = DerivPolynomial.symbol(Species.B, 0)
        for j in range(2, k + 1):
            if j in _sigma_memo:
                continue
            prev = _sigma_memo[j - 1]
            conv = DerivPolynomial()
            for i in range(1, j - 1):
                conv = conv + multiply(_sigma_memo[i], _sigma_memo[j - 1 - i])
            _sigma_memo[j] = -differentiate(prev, N_MAX) - multiply(b0, conv)
        return _sigma_memo[k]


def evaluate(p, valsA, valsB):
    """Substitute numeric derivative values: valsA[j] for A_j, valsB[j] for B_j."""
    vals = (valsA, valsB)
    total = 0j
    for mono, c in p:
        term = complex(c)
        for sym in mono:
            v = vals[sym.species]
            if sym.order >= len(v):
                raise MissingDerivative(f"missing {sym} (have {len(v)} values)")
            term *= v[sym.order]
        total += term
    return total


def evaluate_bound(p, valsA, valsB):
    """Sum of |term| over the expansion; the roundoff scale of evaluate()."""
    vals = (valsA, valsB)
    total = 0.0
    for mono, c in p:
        term = float(abs(c))
        for sym in mono:
            v = vals[sym.species]
            if sym.order >= len(v):
                raise MissingDerivative(f"missing {sym} (have {len(v)} values)")
            term *= abs(v[sym.order])
        total += term
    return total


def oracle_sigma(q_A, q_B, n):
    """sigma_1..sigma_n as polynomials in x from the quotient expansion.

    a_0 = 0, b_0 = 1, a_k = q_A b_{k-1} - a_{k-1}', b_k = int_0^x q_B a_k,
    sigma_k = a_k - sum_{j=1}^{k-1} b_j sigma_{k-j}.
    This route never touches the symbolic recursion and serves as its check.
    """
    a = [PolyFunc([0])]
    b = [PolyFunc([1])]
    sig = []
    for k in range(1, n + 1):
        a.append(q_A * b[k - 1] - a[k - 1].deriv())
        b.append((q_B * a[k]).antideriv())
        s = a[k]
        for j in range(1, k):
            s = s - b[j] * sig[k - j - 1]
        sig.append(s)
    return sig
