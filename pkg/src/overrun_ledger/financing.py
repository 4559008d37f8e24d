"""Interest during construction and startup from a sinusoidal spend curve.

Convention: the construction spend profile is discretized into fixed steps
(monthly by default, with a fractional final step when the duration does not
divide evenly). Each step's spend is booked at the step end and accrues
compound interest until construction completes; the full principal plus IDC
then accrues through startup, during which no new overnight cost is spent.
Exponents are measured in years (months / 12).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isclose, pi, sin
from typing import Mapping

import numpy as np
from scipy.optimize import brentq

from .errors import AttributionError, DomainError, RateSolverError
from .stakeholders import Stakeholder

MONTHS_PER_YEAR = 12.0


@dataclass(frozen=True)
class FinancingParams:
    """Annual interest rate and the spend-curve discretization step."""

    rate: float
    time_step_months: float = 1.0

    def __post_init__(self):
        if self.rate < 0:
            raise DomainError("financing rate must be non-negative")
        if self.time_step_months <= 0:
            raise DomainError("time step must be positive")


@dataclass(frozen=True)
class ScheduleState:
    """Construction and startup durations in months."""

    tc_months: float
    ts_months: float

    def __post_init__(self):
        if self.tc_months <= 0:
            raise DomainError("construction duration must be positive")
        if self.ts_months < 0:
            raise DomainError("startup duration must be non-negative")


def spend_fraction(t: float, tc: float) -> float:
    """Cumulative fraction of overnight cost spent by month t of construction.

    Half-sinusoid ramp: 0 at start, 0.5 at midpoint, 1 at completion,
    monotone non-decreasing throughout.
    """
    if tc <= 0:
        raise DomainError("construction duration must be positive")
    if not 0.0 <= t <= tc:
        raise DomainError(f"t={t} outside construction window [0, {tc}]")
    return 0.5 * (1.0 + sin(pi / tc * (t - tc / 2.0)))


def _step_boundaries(tc: float, dt: float) -> np.ndarray:
    """Step-end times covering (0, tc]; the final step may be fractional."""
    n_full = int(np.floor(tc / dt + 1e-12))
    bounds = dt * np.arange(1, n_full + 1)
    if n_full == 0 or tc - bounds[-1] > 1e-12 * max(1.0, tc):
        bounds = np.append(bounds, tc)
    else:
        bounds[-1] = tc  # snap to avoid losing the last sliver to rounding
    return bounds


def financing_cost(occ: float, schedule: ScheduleState, params: FinancingParams) -> float:
    """Total financing cost (IDC + IDS) for a project of overnight cost occ.

    Linear in occ, zero at a zero rate, strictly increasing in rate and in
    both durations otherwise.
    """
    if occ < 0:
        raise DomainError("overnight cost must be non-negative")
    if occ == 0.0 or params.rate == 0.0:
        return 0.0
    tc, ts = schedule.tc_months, schedule.ts_months
    bounds = _step_boundaries(tc, params.time_step_months)
    arg = pi / tc * (bounds - tc / 2.0)
    cumulative = 0.5 * (1.0 + np.sin(arg))
    fractions = np.diff(np.concatenate(([0.0], cumulative)))
    growth = (1.0 + params.rate) ** ((tc - bounds) / MONTHS_PER_YEAR) - 1.0
    idc = occ * float(np.dot(fractions, growth))
    ids = (occ + idc) * ((1.0 + params.rate) ** (ts / MONTHS_PER_YEAR) - 1.0)
    return idc + ids


def back_calculate_rate(
    occ: float,
    cfin_target: float,
    schedule: ScheduleState,
    time_step_months: float = 1.0,
) -> float:
    """Solve for the annual rate whose financing cost matches cfin_target.

    Bracketed root finding on [0, 1]; financing_cost is strictly increasing
    in the rate for positive principal, so the root is unique.
    """
    if cfin_target < 0:
        raise DomainError("financing cost target must be non-negative")
    if cfin_target == 0.0:
        return 0.0
    if occ <= 0:
        raise RateSolverError("a positive financing cost needs a positive principal")

    def residual(rate: float) -> float:
        params = FinancingParams(rate=rate, time_step_months=time_step_months)
        return financing_cost(occ, schedule, params) - cfin_target

    if residual(1.0) < 0:
        raise RateSolverError(
            f"target {cfin_target} not reachable with rates in [0, 1] "
            f"for occ={occ}, schedule={schedule}"
        )
    return float(brentq(residual, 0.0, 1.0, xtol=1e-15, rtol=8.9e-16, maxiter=200))


def financing_overrun_total(
    occ: float,
    schedule: ScheduleState,
    occ0: float,
    schedule0: ScheduleState,
    params: FinancingParams,
) -> float:
    """Financing overrun: actual financing cost minus the well-executed one."""
    return financing_cost(occ, schedule, params) - financing_cost(
        occ0, schedule0, params
    )


def attribute_financing_causers(
    occ0: float,
    schedule0: ScheduleState,
    per_stakeholder: Mapping[Stakeholder, tuple[float, float]],
    total_overrun: float,
    params: FinancingParams,
) -> dict[Stakeholder, float]:
    """Split the financing overrun across the stakeholders whose cost and
    schedule overruns drove it.

    per_stakeholder maps each causer to (extra overnight cost in USD, extra
    construction months). For each stakeholder the financing cost is
    re-evaluated with only their overruns switched on; the total overrun is
    then divided in proportion to those single-stakeholder deltas (overrun
    timing within construction is treated as uniform, so no stakeholder is
    charged extra for late-project delays). Shares sum to total_overrun
    exactly.
    """
    if total_overrun < 0:
        raise DomainError("financing overrun must be non-negative")
    result = {s: 0.0 for s in Stakeholder}
    if total_overrun == 0 or isclose(total_overrun, 0.0, abs_tol=1e-12):
        return result
    base = financing_cost(occ0, schedule0, params)
    deltas: dict[Stakeholder, float] = {}
    for stakeholder, (d_occ, d_tc) in per_stakeholder.items():
        if stakeholder is Stakeholder.CREDITORS:
            raise DomainError("creditors cannot cause financing overruns")
        if d_occ < 0 or d_tc < 0:
            raise DomainError(f"{stakeholder.value}: deltas must be non-negative")
        solo = ScheduleState(schedule0.tc_months + d_tc, schedule0.ts_months)
        deltas[stakeholder] = financing_cost(occ0 + d_occ, solo, params) - base
    denom = sum(deltas.values())
    if denom <= 0:
        raise AttributionError(
            f"financing overrun {total_overrun} > 0 but no stakeholder carries "
            "a positive cost or schedule delta"
        )
    remaining = total_overrun
    stakeholders = list(deltas)
    for stakeholder in stakeholders[:-1]:
        share = total_overrun * deltas[stakeholder] / denom
        result[stakeholder] = share
        remaining -= share
    result[stakeholders[-1]] = max(0.0, remaining)
    return result
