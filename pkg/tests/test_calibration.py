import pytest

from overrun_ledger.calibration import (
    CalibrationAnchors,
    calibrate_reference_model,
)
from overrun_ledger.errors import CalibrationError
from overrun_ledger.overrun_model import OverrunModelParams
from overrun_ledger.scenario import run_scenario


def anchor_overruns_per_kwe(config, params):
    """Oracle: run the fixed-CP series directly and read off plants 1 and 10."""
    fixed = config.fixed_cp_variant().with_overrun_params(params)
    results = run_scenario(fixed)
    capacity = config.baseline.plant_capacity_kwe
    return (
        results[0].total_cost_overrun / capacity,
        results[9].total_cost_overrun / capacity,
    )


class TestCalibration:
    def test_reaches_default_anchors_within_one_percent(self, fixed_cp):
        anchors = CalibrationAnchors(9500.0, 3120.0)
        params = calibrate_reference_model(anchors, fixed_cp)
        first, tenth = anchor_overruns_per_kwe(fixed_cp, params)
        assert first == pytest.approx(9500.0, rel=0.01)
        assert tenth == pytest.approx(3120.0, rel=0.01)

    def test_zero_anchors_zero_scales(self, fixed_cp):
        params = calibrate_reference_model(CalibrationAnchors(0.0, 0.0), fixed_cp)
        assert params.rho_c == 0.0
        assert params.rho_ae == 0.0
        assert params.rho_d == 0.0
        assert params.lambda_lp == 0.0

    def test_perturbed_anchors_track(self, fixed_cp):
        params = calibrate_reference_model(
            CalibrationAnchors(9500.0 * 1.1, 3120.0 * 1.1), fixed_cp
        )
        first, tenth = anchor_overruns_per_kwe(fixed_cp, params)
        assert first == pytest.approx(9500.0 * 1.1, rel=0.01)
        assert tenth == pytest.approx(3120.0 * 1.1, rel=0.01)

    def test_schedule_target_holds_after_calibration(self, fixed_cp):
        params = calibrate_reference_model(CalibrationAnchors(9500.0, 3120.0),
                                           fixed_cp)
        fixed = fixed_cp.fixed_cp_variant().with_overrun_params(params)
        first = run_scenario(fixed)[0]
        assert first.schedule.total_months == pytest.approx(
            fixed_cp.schedule_target_months, abs=1e-6
        )

    def test_zero_template_cannot_converge(self, fixed_cp):
        dead = OverrunModelParams(
            rho_c=0.0, rho_ae=0.0, rho_d=0.0, lambda_lp=0.0, sigma_sched=0.0,
            scd_months_per_plant=fixed_cp.overrun_params.scd_months_per_plant,
        )
        config = fixed_cp.with_overrun_params(dead)
        with pytest.raises(CalibrationError) as err:
            calibrate_reference_model(CalibrationAnchors(9500.0, 3120.0), config)
        assert err.value.residuals is not None

    def test_series_too_short_for_anchors(self, fixed_cp):
        from overrun_ledger.baseline import LeverSchedule
        from overrun_ledger.scenario import ScenarioConfig

        short = ScenarioConfig(
            scenario_name="short",
            baseline=fixed_cp.baseline,
            lever_schedule=LeverSchedule(fixed_cp.lever_schedule.per_plant[:3]),
            overrun_params=fixed_cp.overrun_params,
            financing=fixed_cp.financing,
            responsibility_matrix=fixed_cp.responsibility_matrix,
            n_plants=3,
            contracts=fixed_cp.contracts,
            schedule_target_months=fixed_cp.schedule_target_months,
        )
        with pytest.raises(CalibrationError):
            calibrate_reference_model(CalibrationAnchors(9500.0, 3120.0), short)

    def test_bundled_config_ships_calibrated(self, fixed_cp):
        # the shipped constants already satisfy the anchors
        first, tenth = anchor_overruns_per_kwe(fixed_cp, fixed_cp.overrun_params)
        assert first == pytest.approx(9500.0, rel=0.01)
        assert tenth == pytest.approx(3120.0, rel=0.01)
