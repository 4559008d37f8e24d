"""Reference overrun model: levers -> rework factors -> cost/schedule overruns.

The functional forms here are deliberately simple, calibratable stand-ins:
multiplicative rework factors acting on the direct+indirect base, and
inverse-productivity inflation of site labor. Both vanish exactly at full
proficiency. The rework cost form is pluggable so that an alternative
correlation can be swapped in without touching the attribution layer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .baseline import CP_MAX, CP_MIN, BaselineCostModel, LeverState
from .errors import ConfigError, DomainError

# Site productivity as a linear function of the construction proficiency
# lever: 0.7825 at cp=0.5, exactly 1.0 at cp=2.0.
PRODUCTIVITY_SLOPE = 0.145
PRODUCTIVITY_INTERCEPT = 0.71


def productivity(cp: float) -> float:
    """Construction site productivity (earned / planned hours) for a given
    construction proficiency lever value."""
    if not CP_MIN <= cp <= CP_MAX:
        raise DomainError(f"cp={cp} outside [{CP_MIN}, {CP_MAX}]")
    return PRODUCTIVITY_SLOPE * cp + PRODUCTIVITY_INTERCEPT


@dataclass(frozen=True)
class ReworkFactors:
    """Multipliers >= 1 expressing how much work must be redone.

    A factor of exactly 1 means the corresponding stakeholder is fully
    proficient and causes no rework: r_c for the construction crew, r_ae for
    the architect-engineer, r_design for design completeness.
    """

    r_c: float
    r_ae: float
    r_design: float

    def __post_init__(self):
        for name in ("r_c", "r_ae", "r_design"):
            if getattr(self, name) < 1.0:
                raise DomainError(f"rework factor {name} must be >= 1")


@dataclass(frozen=True)
class OverrunModelParams:
    """Calibratable constants of the reference overrun model.

    rho_* are lever-deficit -> rework-factor slopes; lambda_lp scales the
    low-productivity cost; sigma_sched converts relative cost overrun into
    construction months; scd_months_per_plant is the supply-chain delay per
    plant index (months, 1-based).
    """

    rho_c: float
    rho_ae: float
    rho_d: float
    lambda_lp: float
    sigma_sched: float
    scd_months_per_plant: tuple[float, ...]

    def __post_init__(self):
        for name in ("rho_c", "rho_ae", "rho_d", "lambda_lp", "sigma_sched"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be non-negative")
        if any(m < 0 for m in self.scd_months_per_plant):
            raise DomainError("supply-chain delay months must be non-negative")


@dataclass(frozen=True)
class OverrunTotals:
    """Per-plant overruns before financing: money (USD) and months.

    Financing overruns are computed downstream from these totals and are
    intentionally not part of this record.
    """

    dc_rework: float
    dc_lp: float
    dt_rework: float
    dt_lp: float
    dt_scd: float

    def __post_init__(self):
        for name in ("dc_rework", "dc_lp", "dt_rework", "dt_lp", "dt_scd"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be non-negative")

    @property
    def dc_total(self) -> float:
        return self.dc_rework + self.dc_lp

    @property
    def dt_total(self) -> float:
        return self.dt_rework + self.dt_lp + self.dt_scd


def rework_factors(levers: LeverState, params: OverrunModelParams) -> ReworkFactors:
    """Map lever deficits to rework factors, affine per lever.

    Maximal levers give exactly (1, 1, 1).
    """
    cp_deficit = (CP_MAX - levers.cp) / (CP_MAX - CP_MIN)
    return ReworkFactors(
        r_c=1.0 + params.rho_c * cp_deficit,
        r_ae=1.0 + params.rho_ae * (1.0 - levers.aep),
        r_design=1.0 + params.rho_d * (1.0 - levers.dc),
    )


def total_rework_cost(factors: ReworkFactors, baseline: BaselineCostModel) -> float:
    """Total rework cost overrun (USD).

    Multiplicative form on the direct+indirect base: the base is redone by
    the compounded factor, and only the excess over 1 is an overrun. Zero
    exactly when all factors are 1.
    """
    base = baseline.direct_indirect_total()
    return base * (factors.r_c * factors.r_ae * factors.r_design - 1.0)


def total_lp_cost(
    cp: float, baseline: BaselineCostModel, params: OverrunModelParams
) -> float:
    """Low-productivity cost overrun (USD): the extra site-labor spend needed
    to deliver the planned hours at sub-unit productivity, scaled by
    lambda_lp. Zero exactly at cp = 2.0."""
    labor = baseline.site_labor_cost()
    return params.lambda_lp * labor * (1.0 / productivity(cp) - 1.0)


def total_schedule_overruns(
    factors: ReworkFactors,
    cp: float,
    baseline: BaselineCostModel,
    params: OverrunModelParams,
    plant_index: int,
) -> tuple[float, float, float]:
    """Construction schedule overruns (months) as (rework, low-productivity,
    supply-chain delay).

    Rework and LP months are proportional to their relative cost overruns on
    the direct+indirect base; supply-chain months come straight from the
    per-plant delay schedule.
    """
    if not 1 <= plant_index <= len(params.scd_months_per_plant):
        raise ConfigError(
            "overrun_model.supply_chain_delay_months",
            f"no entry for plant {plant_index} "
            f"(schedule covers {len(params.scd_months_per_plant)} plants)",
        )
    base = baseline.direct_indirect_total()
    if base <= 0:
        dt_rework = 0.0
        dt_lp = 0.0
    else:
        dt_rework = (
            params.sigma_sched
            * baseline.tc0_months
            * (total_rework_cost(factors, baseline) / base)
        )
        dt_lp = (
            params.sigma_sched
            * baseline.tc0_months
            * (total_lp_cost(cp, baseline, params) / base)
        )
    dt_scd = params.scd_months_per_plant[plant_index - 1]
    return dt_rework, dt_lp, dt_scd
