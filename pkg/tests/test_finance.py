"""DCF engine: annuity factors, NPV, IRR bracketing, reverse DCF."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from safscen import (
    CashFlowSeries,
    CurrencyMixError,
    FinancialAssumptions,
    FxRate,
    annuity_factor,
    grant_needed,
    irr,
    max_capex,
    npv,
)

from conftest import make_margin, oracle_annuity

FIN = FinancialAssumptions()  # 12%, 20y, 300 kt/y, fx 5.20


class TestAnnuityFactor:
    def test_twelve_percent_twenty_years(self):
        value = annuity_factor(0.12, 20)
        assert value == pytest.approx(oracle_annuity(0.12, 20), rel=1e-12)
        assert value == pytest.approx(7.46944, abs=1e-5)

    def test_zero_rate_limit(self):
        assert annuity_factor(0.0, 20) == 20.0

    def test_single_year(self):
        assert annuity_factor(0.12, 1) == pytest.approx(1 / 1.12, rel=1e-15)
        assert annuity_factor(0.12, 1) == pytest.approx(0.892857, abs=1e-6)

    @given(rate=st.floats(min_value=0.0, max_value=0.5),
           n=st.integers(min_value=1, max_value=50))
    @settings(max_examples=150, deadline=None)
    def test_matches_explicit_sum(self, rate, n):
        assert annuity_factor(rate, n) == pytest.approx(oracle_annuity(rate, n), rel=1e-11)

    @given(rate=st.floats(min_value=1e-4, max_value=0.5),
           n=st.integers(min_value=1, max_value=49))
    @settings(max_examples=150, deadline=None)
    def test_strictly_monotone(self, rate, n):
        assert annuity_factor(rate + 1e-4, n) < annuity_factor(rate, n)
        assert annuity_factor(rate, n + 1) > annuity_factor(rate, n)


class TestNpv:
    def test_inversion_identity(self):
        flows = CashFlowSeries.flat(1.0, 20)
        capex = annuity_factor(0.12, 20)
        assert npv(capex, 0.0, flows, 0.12) == pytest.approx(0.0, abs=1e-12)

    def test_negative_flat_flow(self):
        flows = CashFlowSeries.flat(-1.0, 20)
        assert npv(0.0, 0.0, flows, 0.12) == pytest.approx(
            -annuity_factor(0.12, 20), rel=1e-12)

    def test_grant_cancels_capex(self):
        flows = CashFlowSeries.flat(3.5, 20)
        pure = npv(0.0, 0.0, flows, 0.12)
        assert npv(1e9, 1e9, flows, 0.12) == pytest.approx(pure, rel=1e-12)


class TestIrr:
    def test_inverts_the_annuity(self):
        flows = CashFlowSeries.flat(1.0, 20)
        rate = irr(annuity_factor(0.12, 20), flows)
        assert rate == pytest.approx(0.12, abs=1e-6)

    def test_all_negative_flows_have_no_irr(self):
        assert irr(100.0, CashFlowSeries.flat(-1.0, 20)) is None

    def test_zero_rate_root(self):
        rate = irr(20.0, CashFlowSeries.flat(1.0, 20))
        assert rate == pytest.approx(0.0, abs=1e-6)

    @given(rate=st.floats(min_value=0.005, max_value=2.0),
           n=st.integers(min_value=2, max_value=40),
           scale=st.floats(min_value=0.1, max_value=1e8))
    @settings(max_examples=150, deadline=None)
    def test_round_trips_and_satisfies_tolerance(self, rate, n, scale):
        flows = CashFlowSeries.flat(scale, n)
        capex = scale * annuity_factor(rate, n)
        solved = irr(capex, flows)
        assert solved is not None
        assert solved == pytest.approx(rate, abs=1e-7)
        assert abs(npv(capex, 0.0, flows, solved)) <= 1e-6 * capex


class TestMaxCapex:
    def test_positive_flat_cash_flow(self):
        fin = FIN
        margin = make_margin(135.17e6 / (fin.capacity_kt * 1e6))
        value = max_capex(margin, fin)
        expected = 135.17e6 * oracle_annuity(0.12, 20)
        assert value == pytest.approx(expected, rel=1e-9)
        # Published cell computed from an unrounded cash flow; agree loosely.
        assert value == pytest.approx(1.00967e9, rel=5e-5)

    def test_zero_margin_returns_the_grant(self):
        fin = FIN.with_grant(123.0)
        assert max_capex(make_margin(0.0), fin) == 123.0

    def test_negative_flat_cash_flow(self):
        fin = FIN
        margin = make_margin(-24.67e6 / (fin.capacity_kt * 1e6))
        value = max_capex(margin, fin)
        assert value == pytest.approx(-24.67e6 * oracle_annuity(0.12, 20), rel=1e-9)
        assert value == pytest.approx(-184.26e6, rel=1e-4)

    def test_currency_mixing_is_rejected(self):
        with pytest.raises(CurrencyMixError):
            max_capex(make_margin(1.0, currency="brl"), FIN)

    @given(m1=st.floats(min_value=-2, max_value=2),
           m2=st.floats(min_value=-2, max_value=2),
           w=st.floats(min_value=0, max_value=1))
    @settings(max_examples=150, deadline=None)
    def test_affine_and_increasing_in_net_margin(self, m1, m2, w):
        lo, hi = sorted((m1, m2))
        assert max_capex(make_margin(lo), FIN) <= max_capex(make_margin(hi), FIN) + 1e-6
        blend = w * m1 + (1 - w) * m2
        interpolated = (w * max_capex(make_margin(m1), FIN)
                        + (1 - w) * max_capex(make_margin(m2), FIN))
        assert max_capex(make_margin(blend), FIN) == pytest.approx(
            interpolated, rel=1e-9, abs=1e-3)

    def test_revenue_tax_scales_cash_flow(self):
        fin = FinancialAssumptions(revenue_tax=0.25)
        taxed = max_capex(make_margin(1.0), fin)
        untaxed = max_capex(make_margin(1.0), FIN)
        assert taxed == pytest.approx(0.75 * untaxed, rel=1e-12)


class TestGrantNeeded:
    def test_published_scenario_gap(self):
        fin = FIN
        margin = make_margin(-307.76e6 / oracle_annuity(0.12, 20) / (fin.capacity_kt * 1e6))
        value = grant_needed(margin, fin, reference_capex=108.75e6)
        assert value == pytest.approx(416.51e6, rel=1e-6)

    def test_affordable_projects_need_nothing(self):
        margin = make_margin(1.0)
        assert grant_needed(margin, FIN, reference_capex=1e6) == 0.0

    def test_zero_reference_with_negative_capacity_to_pay(self):
        fin = FIN
        margin = make_margin(-1.0)
        assert grant_needed(margin, fin, reference_capex=0.0) == pytest.approx(
            abs(max_capex(margin, fin)), rel=1e-12)

    def test_grant_on_assumptions_does_not_double_count(self):
        # grant_needed always measures against a zero-grant max_capex
        margin = make_margin(-0.5)
        assert grant_needed(margin, FIN.with_grant(5e8), 0.0) == pytest.approx(
            grant_needed(margin, FIN, 0.0), rel=1e-12)
