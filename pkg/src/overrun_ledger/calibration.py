"""Calibration of the reference overrun model against published anchors.

Two scale factors are fitted: one multiplying all three rework slopes
jointly (their ratios, and hence the causer split, come from the config
template) and one multiplying the low-productivity scale. The fit targets
total per-kWe TCI overruns of the first and tenth plants of the
fixed-construction-proficiency variant of the supplied scenario.

If the config pins a first-plant total duration (schedule_target_months),
the schedule sensitivity is re-solved inside every residual evaluation so
the fitted cost constants and the schedule constraint converge together.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from .baseline import CP_MIN
from .errors import CalibrationError
from .overrun_model import (
    OverrunModelParams,
    rework_factors,
    total_lp_cost,
    total_rework_cost,
)
from .scenario import ScenarioConfig, run_scenario

#: Default anchors: total TCI overrun in USD/kWe for the first and tenth
#: plants when construction proficiency never improves, consistent with
#: recent U.S. two-unit build experience.
DEFAULT_FOAK_ANCHOR = 9_500.0
DEFAULT_TENOAK_ANCHOR = 3_120.0

_ANCHOR_PLANTS = (1, 10)


@dataclass(frozen=True)
class CalibrationAnchors:
    foak_usd_per_kwe: float
    tenoak_usd_per_kwe: float

    def __post_init__(self):
        if self.foak_usd_per_kwe < 0 or self.tenoak_usd_per_kwe < 0:
            raise CalibrationError("anchors must be non-negative")


def _solved_sigma(config: ScenarioConfig, params: OverrunModelParams) -> float:
    """Schedule sensitivity that makes the first plant's total duration hit
    the configured target, given the current cost constants."""
    target = config.schedule_target_months
    if target is None:
        return params.sigma_sched
    baseline = config.baseline
    levers = config.lever_schedule.with_pinned_cp(CP_MIN).state_for_plant(1)
    factors = rework_factors(levers, params)
    cost = total_rework_cost(factors, baseline) + total_lp_cost(
        levers.cp, baseline, params
    )
    scd_1 = params.scd_months_per_plant[0] if params.scd_months_per_plant else 0.0
    budget = target - baseline.tc0_months - baseline.ts0_months - scd_1
    if budget < 0:
        raise CalibrationError(
            f"schedule target {target} months leaves no room after the baseline "
            f"schedule and first-plant supply-chain delay"
        )
    if cost <= 0 or baseline.direct_indirect_total() <= 0:
        return 0.0
    return budget / (baseline.tc0_months * cost / baseline.direct_indirect_total())


def _params_for(template: OverrunModelParams, k_rework: float, k_lp: float,
                sigma: float) -> OverrunModelParams:
    return OverrunModelParams(
        rho_c=template.rho_c * k_rework,
        rho_ae=template.rho_ae * k_rework,
        rho_d=template.rho_d * k_rework,
        lambda_lp=template.lambda_lp * k_lp,
        sigma_sched=sigma,
        scd_months_per_plant=template.scd_months_per_plant,
    )


def _anchor_overruns(config: ScenarioConfig, params: OverrunModelParams) -> tuple[float, float]:
    """Per-kWe total cost overruns at the two anchor plants, fixed-CP."""
    sigma = _solved_sigma(config, params)
    solved = _params_for(params, 1.0, 1.0, sigma)
    fixed = config.fixed_cp_variant().with_overrun_params(solved)
    results = run_scenario(fixed)
    capacity = config.baseline.plant_capacity_kwe
    first = results[_ANCHOR_PLANTS[0] - 1].total_cost_overrun / capacity
    tenth = results[_ANCHOR_PLANTS[1] - 1].total_cost_overrun / capacity
    return first, tenth


def calibrate_reference_model(
    anchors: CalibrationAnchors,
    config: ScenarioConfig,
    rel_tol: float = 1e-6,
    max_iterations: int = 200,
) -> OverrunModelParams:
    """Fit the overrun-model constants so the fixed-CP scenario reproduces
    the anchor overruns; returns the fitted parameter set.

    Raises CalibrationError (with the final residuals) on non-convergence.
    """
    config.validate()
    if config.n_plants < max(_ANCHOR_PLANTS):
        raise CalibrationError(
            f"calibration needs at least {max(_ANCHOR_PLANTS)} plants in the series"
        )
    template = config.overrun_params
    targets = (anchors.foak_usd_per_kwe, anchors.tenoak_usd_per_kwe)
    if targets == (0.0, 0.0):
        # No overruns anywhere means every scale constant is zero.
        return _params_for(template, 0.0, 0.0, 0.0)
    if template.rho_c == template.rho_ae == template.rho_d == 0.0 and template.lambda_lp == 0.0:
        raise CalibrationError(
            "template overrun slopes are all zero; nothing to scale",
            residuals=targets,
        )

    scales = np.array([max(t, 1.0) for t in targets])

    def residuals(x: np.ndarray) -> np.ndarray:
        chained = _params_for(template, float(x[0]), float(x[1]), template.sigma_sched)
        first, tenth = _anchor_overruns(config, chained)
        return np.array([first - targets[0], tenth - targets[1]]) / scales

    fit = least_squares(
        residuals,
        x0=np.array([1.0, 1.0]),
        bounds=(np.zeros(2), np.full(2, np.inf)),
        xtol=1e-14,
        ftol=1e-14,
        gtol=1e-14,
        max_nfev=max_iterations,
    )
    final = residuals(fit.x)
    if np.any(np.abs(final) > rel_tol):
        raise CalibrationError(
            "calibration did not converge to the anchors",
            residuals=tuple(float(r * s) for r, s in zip(final, scales)),
        )
    fitted = _params_for(template, float(fit.x[0]), float(fit.x[1]), template.sigma_sched)
    return _params_for(fitted, 1.0, 1.0, _solved_sigma(config, fitted))
