import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import J13_J42, REGULAR, Y1_0_Y2_1, sparse_integer_case
from dirac_spectra.algebra import N_MAX
from dirac_spectra.coeffs import coefficient_table
from dirac_spectra.completeness import (
    CATALOGUE,
    Status,
    _Facts,
    _rule_J32J13zero,
    numeric_corroboration,
    special_case_catalogue,
    verdict,
)
from dirac_spectra.model import BoundarySpec, DiracSystem
from dirac_spectra.polyfunc import PolyFunc

P = PolyFunc


def _witnesses_exceed(v):
    assert v.witnesses
    for name, w in v.witnesses.items():
        assert abs(w["value"]) > w["threshold"], name


def test_regular_uses_constant_terms():
    sys = DiracSystem(-1.0, 2.0, P([0.7, 2]), P([3, -1, 0.5]))
    v = verdict(sys, REGULAR, 0)
    assert v.status == Status.CompleteAndMinimal
    assert v.rule == "Thm-compl-gen-2x2"
    assert v.predicted_growth == (0, 0)
    assert set(v.witnesses) == {"c_0^+", "c_0^-"}
    _witnesses_exceed(v)


def test_second_order_rescue():
    # J32 = 0, J14 != 0, c_1^+ = 0 by cancellation, c_2^+ != 0
    bc = BoundarySpec([[1, 0, 0, 1], [0, 1, 1, 1]])
    sys = DiracSystem(-1.0, 1.0, P([1, 1]), P([1]))
    tab = coefficient_table(sys, bc, 2)
    assert tab.c_plus[0] == 0 and abs(tab.c_plus[1]) < 1e-15
    assert abs(tab.c_plus[2] - (1 + 1j)) < 1e-14
    assert verdict(sys, bc, 1).status == Status.Inconclusive
    v = verdict(sys, bc, 2)
    assert v.status == Status.CompleteAndMinimal and v.predicted_growth == (2, 0)
    _witnesses_exceed(v)


@pytest.mark.parametrize("scale", [1.0, 1e-6, 3e5])
def test_criterion_both_directions(scale):
    bc = BoundarySpec([[0.5, 2.0, -1.0, 0.0], [0.0, 0.0, 0.0, 1.0]])
    inc = verdict(DiracSystem(-1.0, 1.0, P([1, 1]) * scale, P([0])), bc, 4)
    assert inc.status == Status.Incomplete and inc.rule == "Cor-criterion"
    comp = verdict(DiracSystem(-1.0, 1.0, P([0]), P([0, 0, 1]) * scale), bc, 4)
    assert comp.status == Status.CompleteAndMinimal and comp.rule == "Cor-criterion"
    _witnesses_exceed(comp)
    # Q21 = x^2 vanishes to order 2 at x = 0 and not at x = 1
    assert comp.indices == {"j1": 0}
    assert comp.predicted_growth == (1, 0)


def test_criterion_without_j14():
    bc = BoundarySpec([[0.0, 2.0, -1.0, 0.0], [0.0, 0.0, 0.0, 1.0]])
    v = verdict(DiracSystem(-1.0, 1.0, P([0]), P([0, 0, 1])), bc, 4)
    assert v.status == Status.CompleteAndMinimal
    assert v.indices == {"j0": 2, "j1": 0}
    assert v.predicted_growth == (1, 3)


def test_case_i():
    sys = DiracSystem(-1.0, 1.0, P([1]), P([2]))
    v = special_case_catalogue(sys, J13_J42, 1)
    assert v.rule == "Thm-J32J14-case-i" and v.indices == {"n0": 0, "n1": 0}
    assert verdict(sys, J13_J42, 1).status == Status.CompleteAndMinimal


def test_case_ii_and_iii():
    sys3 = DiracSystem(-1.0, 1.0, P([1, 1]), P([2, -1, 1]))
    v3 = special_case_catalogue(sys3, J13_J42, 3)
    assert v3.rule == "Thm-J32J14-case-iii" and v3.predicted_growth == (1, 3)
    _witnesses_exceed(v3)
    sys2 = DiracSystem(-1.0, 1.0, P([1, 1]).reflect(), P([2, -1, 1]).reflect())
    v2 = special_case_catalogue(sys2, J13_J42, 3)
    assert v2.rule == "Thm-J32J14-case-ii" and v2.predicted_growth == (3, 1)
    for sys in (sys2, sys3):
        assert special_case_catalogue(sys, J13_J42, 2) is None
        assert verdict(sys, J13_J42, 2).status == Status.Inconclusive
        assert verdict(sys, J13_J42, 3).status == Status.CompleteAndMinimal


def test_j32_j13_zero_rule():
    # J32 = J13 = 0 with J12 != 0 forces the third column to vanish
    bc = BoundarySpec([[1, 0, 0, 1], [0, 1, 0, 1]])
    sys = DiracSystem(-1.0, 2.0, P([0, 1]), P([0, 1]))
    hit = _rule_J32J13zero(_Facts(sys, bc, 1e-9), 2)
    assert hit["rule"] == "Cor-J32J13zero" and hit["implied"] == (1, 0)
    # an earlier catalogue entry already certifies this case
    assert special_case_catalogue(sys, bc, 2).predicted_growth == (1, 0)


def test_incompleteness_pattern_when_p_vanishes():
    for b1, b2 in [(-1.0, 1.0), (-1.0, 2.0)]:
        q21 = P([1, 2, -1])
        sys = DiracSystem(b1, b2, q21.reflect() * (-b2 / b1), q21)
        v = verdict(sys, J13_J42, 3)
        assert v.status == Status.Incomplete and v.rule == "Rem-DiracVsSL"
        tab = coefficient_table(sys, J13_J42, N_MAX)
        assert tab.k_plus is None and tab.k_minus is None


def test_inconclusive_suggests_larger_order():
    sys = DiracSystem(-1.0, 1.0, P([0, 0, 0, 1]), P([1]))
    v = verdict(sys, Y1_0_Y2_1, 2)
    assert v.status == Status.Inconclusive and v.notes
    v5 = verdict(sys, Y1_0_Y2_1, 5)
    assert v5.status == Status.CompleteAndMinimal
    hit = special_case_catalogue(sys, Y1_0_Y2_1, 5)
    assert hit.rule == "Cor-J32J42J13zero" and hit.predicted_growth == (5, 0)


def test_catalogue_soundness_sweep(seed):
    rng = np.random.default_rng(seed)
    hits = set()
    exact = total = 0
    for _ in range(1500):
        sys, bc = sparse_integer_case(rng)
        n = int(rng.integers(0, 7))
        facts = _Facts(sys, bc, 1e-9)
        for rule in CATALOGUE:
            hit = rule(facts, n)
            if hit is None:
                continue
            hits.add(hit["rule"])
            kp, km = hit["implied"]
            tab = coefficient_table(sys, bc, min(N_MAX, max(n, kp, km)))
            # the coefficients a rule vouches for are nonzero in the table
            assert tab.nonzero_plus(kp) and tab.nonzero_minus(km), hit["rule"]
            assert tab.k_plus <= kp and tab.k_minus <= km
            # the generic test at the rule's order agrees
            assert verdict(sys, bc, max(n, kp, km)).status == Status.CompleteAndMinimal
            exact += (tab.k_plus, tab.k_minus) == (kp, km)
            total += 1
    assert len(hits) >= 8
    assert exact >= 0.9 * total


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_monotone_in_order(s):
    rng = np.random.default_rng(s)
    sys, bc = sparse_integer_case(rng)
    statuses = [verdict(sys, bc, n).status for n in range(0, 7)]
    for n, st_n in enumerate(statuses):
        if st_n == Status.CompleteAndMinimal:
            assert all(x == Status.CompleteAndMinimal for x in statuses[n:])
        if st_n == Status.Incomplete:
            assert all(x == Status.Incomplete for x in statuses)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([1e-3, 0.5, -2.0, 1e4]), st.sampled_from([1e-3, 7.0]))
def test_row_scaling_invariance(s, r1, r2):
    rng = np.random.default_rng(s)
    sys, bc = sparse_integer_case(rng)
    scaled = BoundarySpec(bc.a * np.array([[r1], [r2]]))
    a, b = verdict(sys, bc, 4), verdict(sys, scaled, 4)
    assert (a.status, a.rule, a.predicted_growth) == (b.status, b.rule, b.predicted_growth)


def test_complete_verdicts_have_witnesses(seed):
    rng = np.random.default_rng(seed + 1)
    for _ in range(200):
        sys, bc = sparse_integer_case(rng)
        v = verdict(sys, bc, 4)
        if v.status == Status.CompleteAndMinimal:
            _witnesses_exceed(v)


def test_invalid_order():
    sys = DiracSystem(-1.0, 1.0, P([1]), P([1]))
    with pytest.raises(ValueError):
        verdict(sys, REGULAR, N_MAX + 1)


def test_corroboration_regular_free():
    sys = DiracSystem(-1.0, 1.0, P([0]), P([0]))
    v = verdict(sys, REGULAR, 0)
    c = numeric_corroboration(sys, REGULAR, v)
    assert c.status == "OK"
    assert abs(c.halfplanes["upper"]["floor"] - 1.0) < 1e-3
    assert abs(c.halfplanes["lower"]["floor"] - 1.0) < 1e-3


def test_corroboration_no_constant_terms():
    # J32 = J42 = J13 = 0, J14 != 0, Q12(0) Q21(1) != 0: growth (2, 0)
    sys = DiracSystem(-1.0, 1.0, P([1, 0.5]), P([2]))
    v = special_case_catalogue(sys, Y1_0_Y2_1, 2)
    assert v.rule == "Prop-2x2notR" and v.predicted_growth == (2, 0)
    c = numeric_corroboration(sys, Y1_0_Y2_1, v)
    assert c.status == "OK"
    up = c.halfplanes["upper"]
    assert abs(up["reference"] - 2.0 / 4.0) < 1e-3  # |c_2^+| / |c|^2 = |q+ q-| / 4


def test_corroboration_incomplete_decays():
    bc = BoundarySpec([[1, 2, 1, 0], [0, 0, 0, 1]])
    sys = DiracSystem(-1.0, 1.0, P([1, 1]), P([0]))
    c = numeric_corroboration(sys, bc, verdict(sys, bc, 4))
    assert c.status == "DECAY_CONFIRMED"


def test_corroboration_not_applicable():
    sys = DiracSystem(-1.0, 1.0, P([0, 0, 0, 1]), P([1]))
    assert numeric_corroboration(sys, Y1_0_Y2_1, verdict(sys, Y1_0_Y2_1, 2)).status == "NOT_APPLICABLE"
