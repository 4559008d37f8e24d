import pytest
from hypothesis import given
from hypothesis import strategies as st

from overrun_ledger.contracts import (
    CostPlus,
    FixedPrice,
    PerformanceBased,
    StakeholderScope,
    allocation_delta,
    litigation_flags,
    margin,
    profit,
    profit_curve_samples,
    profit_slope,
    summarize_terms,
)
from overrun_ledger.errors import DomainError

WE = 1000.0


class TestProfit:
    def test_fixed_price_no_overrun_margin(self):
        # award prices a 30% contingency at an 8% margin: with no overrun the
        # whole contingency is profit, 0.08*1.3 + 0.3 = 0.404 of scope
        assert profit(FixedPrice(), WE, 0.0) == pytest.approx(0.404 * WE, rel=1e-12)
        assert margin(FixedPrice(), WE, 0.0) == pytest.approx(0.404, rel=1e-12)

    def test_fixed_price_at_sixty_percent_overrun(self):
        p = profit(FixedPrice(), WE, 0.6 * WE)
        assert p == pytest.approx(-0.196 * WE, rel=1e-12)
        assert margin(FixedPrice(), WE, 0.6 * WE) == pytest.approx(-0.1225, rel=1e-12)

    def test_performance_based_hits_8pct_at_30pct_overrun(self):
        assert margin(PerformanceBased(), WE, 0.3 * WE) == pytest.approx(0.08,
                                                                         rel=1e-12)

    def test_cost_plus_margin_constant(self):
        for overrun in (0.0, 0.123 * WE, 2.0 * WE):
            assert margin(CostPlus(), WE, overrun) == pytest.approx(0.08, rel=1e-12)

    def test_performance_based_zero_beyond_threshold(self):
        assert profit(PerformanceBased(), WE, 0.6 * WE) == 0.0
        assert profit(PerformanceBased(), WE, 2.0 * WE) == 0.0

    def test_performance_based_continuous_at_threshold(self):
        eps = 1e-9
        below = profit(PerformanceBased(), WE, 0.6 * WE - eps)
        assert below == pytest.approx(0.0, abs=1e-6)

    def test_performance_based_max_at_zero_overrun(self):
        assert margin(PerformanceBased(), WE, 0.0) == pytest.approx(0.16, rel=1e-12)

    @given(st.floats(min_value=0.0, max_value=10 * WE))
    def test_performance_based_profit_never_negative(self, overrun):
        assert profit(PerformanceBased(), WE, overrun) >= 0.0

    def test_invalid_scope_rejected(self):
        with pytest.raises(DomainError):
            profit(CostPlus(), 0.0, 10.0)
        with pytest.raises(DomainError):
            profit(CostPlus(), WE, -1.0)

    def test_all_three_agree_at_the_calibration_point(self):
        for terms in (PerformanceBased(), FixedPrice(), CostPlus()):
            assert margin(terms, WE, 0.3 * WE) == pytest.approx(0.08, rel=1e-12)


class TestSummaries:
    def test_published_table_of_terms(self):
        pb = summarize_terms(PerformanceBased(), WE)
        assert pb.margin_at_30pct == pytest.approx(0.08, rel=1e-6)
        assert pb.margin_at_60pct == pytest.approx(0.0, abs=1e-12)
        assert pb.max_margin == pytest.approx(0.16, rel=1e-6)
        assert pb.min_margin == pytest.approx(0.0, abs=1e-12)

        fp = summarize_terms(FixedPrice(), WE)
        assert fp.margin_at_30pct == pytest.approx(0.08, rel=1e-6)
        assert fp.margin_at_60pct == pytest.approx(-0.1225, rel=1e-6)
        assert fp.max_margin == pytest.approx(0.404, rel=1e-6)
        assert fp.min_margin == float("-inf")

        cp = summarize_terms(CostPlus(), WE)
        for value in (cp.margin_at_zero, cp.margin_at_30pct, cp.margin_at_60pct,
                      cp.max_margin, cp.min_margin):
            assert value == pytest.approx(0.08, rel=1e-6)

    def test_zero_margin_cost_plus(self):
        summary = summarize_terms(CostPlus(pm=0.0), WE)
        assert summary.margin_at_zero == 0.0
        assert summary.max_margin == 0.0

    def test_threshold_at_thirty_percent(self):
        summary = summarize_terms(
            PerformanceBased(zero_profit_overrun_frac=0.3), WE
        )
        assert summary.margin_at_30pct == 0.0


class TestAllocationDelta:
    def test_cost_plus_delta_is_linear_in_gap(self):
        scope = StakeholderScope(we=WE, or_caused=500.0, or_received=380.0)
        delta = allocation_delta(CostPlus(), scope)
        assert delta == pytest.approx(0.08 * (380.0 - 500.0), rel=1e-12)

    def test_cost_plus_on_published_subcontractor_gap(self):
        # caused 5.38B, received 3.58B at an 8% margin: -144M
        scope = StakeholderScope(we=5.5e9, or_caused=5.38e9, or_received=3.58e9)
        delta = allocation_delta(CostPlus(), scope)
        assert delta == pytest.approx(-144e6, rel=1e-9)

    def test_performance_based_zero_when_both_beyond_threshold(self):
        scope = StakeholderScope(we=WE, or_caused=0.7 * WE, or_received=0.9 * WE)
        assert allocation_delta(PerformanceBased(), scope) == 0.0

    def test_fixed_price_delta_is_negative_gap(self):
        scope = StakeholderScope(we=WE, or_caused=100.0, or_received=260.0)
        assert allocation_delta(FixedPrice(), scope) == pytest.approx(-160.0,
                                                                      rel=1e-12)

    @given(
        st.floats(min_value=0.0, max_value=5 * WE),
        st.floats(min_value=0.0, max_value=5 * WE),
    )
    def test_antisymmetric_under_swap(self, caused, received):
        scope = StakeholderScope(we=WE, or_caused=caused, or_received=received)
        swapped = StakeholderScope(we=WE, or_caused=received, or_received=caused)
        for terms in (PerformanceBased(), FixedPrice(), CostPlus()):
            assert allocation_delta(terms, scope) == pytest.approx(
                -allocation_delta(terms, swapped), rel=1e-9, abs=1e-9
            )


class TestProfitCurve:
    def _scope(self):
        return StakeholderScope(we=WE, or_caused=200.0, or_received=450.0)

    def test_cost_plus_curve_is_flat_margin(self):
        curve = profit_curve_samples(CostPlus(), WE, 800.0, 21, self._scope())
        for overrun, value in curve.samples:
            assert value / (WE + overrun) == pytest.approx(0.08, rel=1e-12)

    def test_fixed_price_slope_is_minus_one(self):
        curve = profit_curve_samples(FixedPrice(), WE, 800.0, 21, self._scope())
        step = curve.samples[1][0] - curve.samples[0][0]
        for (o1, p1), (o2, p2) in zip(curve.samples, curve.samples[1:]):
            assert (p2 - p1) == pytest.approx(-step, rel=1e-9)

    def test_performance_based_second_difference_constant_negative(self):
        # finite-difference oracle against the closed form inside the active
        # region (stay below the zero-profit threshold)
        curve = profit_curve_samples(PerformanceBased(), WE, 0.5 * WE, 26,
                                     self._scope())
        values = [p for _, p in curve.samples]
        second = [values[i + 2] - 2 * values[i + 1] + values[i]
                  for i in range(len(values) - 2)]
        assert all(d < 0 for d in second)
        for a, b in zip(second, second[1:]):
            assert a == pytest.approx(b, rel=1e-6)

    def test_markers_lie_on_the_curve(self):
        scope = self._scope()
        for terms in (PerformanceBased(), FixedPrice(), CostPlus()):
            curve = profit_curve_samples(terms, WE, 800.0, 11, scope)
            assert curve.cause_point[1] == pytest.approx(
                profit(terms, WE, scope.or_caused), rel=1e-9
            )
            assert curve.recipient_point[1] == pytest.approx(
                profit(terms, WE, scope.or_received), rel=1e-9
            )

    def test_overruns_strictly_increasing(self):
        curve = profit_curve_samples(CostPlus(), WE, 100.0, 5, self._scope())
        overruns = [o for o, _ in curve.samples]
        assert overruns == sorted(overruns)
        assert len(set(overruns)) == len(overruns)

    def test_degenerate_sampling_rejected(self):
        with pytest.raises(DomainError):
            profit_curve_samples(CostPlus(), WE, 100.0, 1, self._scope())
        with pytest.raises(DomainError):
            profit_curve_samples(CostPlus(), WE, 0.0, 5, self._scope())


class TestLitigationFlags:
    def test_cost_plus_receiving_more_is_happy(self):
        scope = StakeholderScope(we=WE, or_caused=100.0, or_received=300.0)
        flags = litigation_flags(CostPlus(), scope)
        assert flags.delta_sign > 0
        assert not flags.litigation_risk_against_causers
        assert flags.slope_sign_at_recipient > 0

    def test_performance_based_both_past_threshold_no_motive(self):
        scope = StakeholderScope(we=WE, or_caused=0.75 * WE, or_received=0.95 * WE)
        flags = litigation_flags(PerformanceBased(), scope)
        assert flags.delta_sign == 0
        assert flags.cause_in_zero_profit_region
        assert flags.recipient_in_zero_profit_region
        assert not flags.litigation_risk_against_causers
        assert flags.slope_sign_at_recipient == 0

    def test_fixed_price_receiving_more_flags_risk(self):
        scope = StakeholderScope(we=WE, or_caused=100.0, or_received=260.0)
        flags = litigation_flags(FixedPrice(), scope)
        assert flags.delta_sign < 0
        assert flags.litigation_risk_against_causers
        assert flags.slope_sign_at_recipient < 0


class TestProfitSlope:
    def test_matches_finite_differences(self):
        h = 1e-6
        for terms in (PerformanceBased(), FixedPrice(), CostPlus()):
            for overrun in (10.0, 250.0, 500.0):
                numeric = (profit(terms, WE, overrun + h)
                           - profit(terms, WE, overrun - h)) / (2 * h)
                assert profit_slope(terms, WE, overrun) == pytest.approx(
                    numeric, rel=1e-4, abs=1e-6
                )
