"""Deployment-series evaluation: levers -> overruns -> two-sided ledger ->
contract outcomes, one plant at a time.

Evaluation is a pure function of the configuration: identical configs
produce identical results bit for bit. Plants are independent of each other
(all cross-plant learning lives in the lever and supply-chain schedules), so
the series is just a per-plant map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .attribution import (
    AttributionResult,
    ResponsibilityMatrix,
    attribute_lp_causers,
    attribute_recipients,
    attribute_rework_causers,
    attribute_schedule_causers,
    compute_responsibility_shares,
)
from .baseline import CP_MIN, BaselineCostModel, LeverSchedule
from .contracts import (
    ContractTerms,
    LitigationAssessment,
    StakeholderScope,
    allocation_delta,
    litigation_flags,
    profit,
)
from .errors import ConfigError, DomainError
from .financing import (
    FinancingParams,
    ScheduleState,
    attribute_financing_causers,
    financing_cost,
    financing_overrun_total,
)
from .overrun_model import (
    OverrunModelParams,
    OverrunTotals,
    rework_factors,
    total_lp_cost,
    total_rework_cost,
    total_schedule_overruns,
)
from .stakeholders import (
    CAUSERS,
    CostOverrunType,
    ScheduleOverrunType,
    Stakeholder,
)


@dataclass(frozen=True)
class ContractAssignment:
    """Contract terms plus the well-executed scope cost for one stakeholder."""

    terms: ContractTerms
    we: float

    def __post_init__(self):
        if self.we <= 0:
            raise DomainError("contract scope cost must be positive")


@dataclass(frozen=True)
class ScenarioConfig:
    """Complete inputs for a deployment-series run."""

    scenario_name: str
    baseline: BaselineCostModel
    lever_schedule: LeverSchedule
    overrun_params: OverrunModelParams
    financing: FinancingParams
    responsibility_matrix: ResponsibilityMatrix
    n_plants: int
    contracts: Mapping[Stakeholder, ContractAssignment] = field(default_factory=dict)
    responsibility_point_override: Mapping[Stakeholder, float] = field(
        default_factory=dict
    )
    schedule_target_months: Optional[float] = None  # first-plant total, for calibration

    def validate(self) -> None:
        """Cross-field checks; field-level range checks happen at construction."""
        if self.n_plants < 1:
            raise ConfigError("n_plants", "must be at least 1")
        if self.n_plants != len(self.lever_schedule):
            raise ConfigError(
                "levers.per_plant",
                f"covers {len(self.lever_schedule)} plants but n_plants is "
                f"{self.n_plants}",
            )
        if len(self.overrun_params.scd_months_per_plant) < self.n_plants:
            raise ConfigError(
                "overrun_model.supply_chain_delay_months",
                f"covers {len(self.overrun_params.scd_months_per_plant)} plants "
                f"but n_plants is {self.n_plants}",
            )
        if self.baseline.direct_indirect_total() <= 0:
            raise ConfigError(
                "baseline.occ0", "direct+indirect baseline costs must be positive"
            )
        if self.schedule_target_months is not None:
            floor = self.baseline.tc0_months + self.baseline.ts0_months
            if self.schedule_target_months < floor:
                raise ConfigError(
                    "schedule_target_months",
                    f"must be at least the overrun-free duration {floor}",
                )
        for stakeholder in self.contracts:
            if stakeholder is Stakeholder.CREDITORS:
                raise ConfigError(
                    "contracts.creditors",
                    "creditors are compensated through interest, not contract profit",
                )

    def fixed_cp_variant(self) -> "ScenarioConfig":
        """This scenario with construction proficiency pinned at its minimum
        for every plant (workforce learning never carries over)."""
        return ScenarioConfig(
            scenario_name=f"{self.scenario_name} (fixed construction proficiency)",
            baseline=self.baseline,
            lever_schedule=self.lever_schedule.with_pinned_cp(CP_MIN),
            overrun_params=self.overrun_params,
            financing=self.financing,
            responsibility_matrix=self.responsibility_matrix,
            n_plants=self.n_plants,
            contracts=self.contracts,
            responsibility_point_override=self.responsibility_point_override,
            schedule_target_months=self.schedule_target_months,
        )

    def with_overrun_params(self, params: OverrunModelParams) -> "ScenarioConfig":
        return ScenarioConfig(
            scenario_name=self.scenario_name,
            baseline=self.baseline,
            lever_schedule=self.lever_schedule,
            overrun_params=params,
            financing=self.financing,
            responsibility_matrix=self.responsibility_matrix,
            n_plants=self.n_plants,
            contracts=self.contracts,
            responsibility_point_override=self.responsibility_point_override,
            schedule_target_months=self.schedule_target_months,
        )

    def with_scaled_baseline(self, k: float) -> "ScenarioConfig":
        """Scale every baseline money figure (and contract scopes) by k."""
        return ScenarioConfig(
            scenario_name=self.scenario_name,
            baseline=self.baseline.scaled(k),
            lever_schedule=self.lever_schedule,
            overrun_params=self.overrun_params,
            financing=self.financing,
            responsibility_matrix=self.responsibility_matrix,
            n_plants=self.n_plants,
            contracts={
                s: ContractAssignment(terms=a.terms, we=a.we * k)
                for s, a in self.contracts.items()
            },
            responsibility_point_override=self.responsibility_point_override,
            schedule_target_months=self.schedule_target_months,
        )


@dataclass(frozen=True)
class ScheduleBreakdown:
    """Plant schedule in months: well-executed construction, the overrun on
    top of it, and startup."""

    tc0_months: float
    overrun_months: float
    ts_months: float

    @property
    def total_months(self) -> float:
        return self.tc0_months + self.overrun_months + self.ts_months


@dataclass(frozen=True)
class ContractOutcome:
    """Per-stakeholder contract result for one plant under both allocations."""

    terms: ContractTerms
    we: float
    or_caused: float
    or_received: float
    profit_cause: float
    profit_recipient: float
    delta: float
    flags: LitigationAssessment


@dataclass(frozen=True)
class PlantResult:
    """Everything the engine knows about one plant of the series."""

    plant_index: int
    baseline_occ: float
    baseline_tci: float
    overrun_totals: OverrunTotals
    financing_overrun: float
    tci: float
    attribution: AttributionResult
    schedule: ScheduleBreakdown
    contract_outcomes: Mapping[Stakeholder, ContractOutcome]

    @property
    def total_cost_overrun(self) -> float:
        return self.overrun_totals.dc_total + self.financing_overrun


def run_scenario(config: ScenarioConfig) -> list[PlantResult]:
    """Evaluate every plant of the deployment series. Deterministic."""
    config.validate()
    shares = compute_responsibility_shares(config.responsibility_matrix)
    if config.responsibility_point_override:
        shares = shares.with_points(config.responsibility_point_override)

    baseline = config.baseline
    occ0 = baseline.total_occ()
    schedule0 = ScheduleState(baseline.tc0_months, baseline.ts0_months)
    cfin0 = financing_cost(occ0, schedule0, config.financing)
    baseline_tci = occ0 + cfin0

    results: list[PlantResult] = []
    for plant_index in range(1, config.n_plants + 1):
        levers = config.lever_schedule.state_for_plant(plant_index)
        factors = rework_factors(levers, config.overrun_params)
        rework = total_rework_cost(factors, baseline)
        lp = total_lp_cost(levers.cp, baseline, config.overrun_params)
        dt_rework, dt_lp, dt_scd = total_schedule_overruns(
            factors, levers.cp, baseline, config.overrun_params, plant_index
        )
        totals = OverrunTotals(
            dc_rework=rework, dc_lp=lp, dt_rework=dt_rework, dt_lp=dt_lp, dt_scd=dt_scd
        )

        rework_causers = attribute_rework_causers(rework, factors, baseline)
        lp_causers = attribute_lp_causers(lp, shares)
        schedule_causers = attribute_schedule_causers(
            (dt_rework, dt_lp, dt_scd), factors, shares, baseline
        )

        # Financing: re-evaluate with each causer's overruns switched on alone.
        per_stakeholder = {
            s: (
                rework_causers[s] + lp_causers[s],
                schedule_causers[(s, ScheduleOverrunType.REWORK)]
                + schedule_causers[(s, ScheduleOverrunType.LOW_PRODUCTIVITY)]
                + schedule_causers[(s, ScheduleOverrunType.SUPPLY_CHAIN_DELAY)],
            )
            for s in CAUSERS
        }
        schedule_i = ScheduleState(
            baseline.tc0_months + totals.dt_total, baseline.ts0_months
        )
        fin_overrun = financing_overrun_total(
            occ0 + totals.dc_total, schedule_i, occ0, schedule0, config.financing
        )
        fin_causers = attribute_financing_causers(
            occ0, schedule0, per_stakeholder, fin_overrun, config.financing
        )

        cost_by_causer = {}
        for s in Stakeholder:
            cost_by_causer[(s, CostOverrunType.REWORK)] = rework_causers[s]
            cost_by_causer[(s, CostOverrunType.LOW_PRODUCTIVITY)] = lp_causers[s]
            cost_by_causer[(s, CostOverrunType.FINANCING)] = fin_causers[s]
        recipients = attribute_recipients(
            {
                CostOverrunType.REWORK: rework,
                CostOverrunType.LOW_PRODUCTIVITY: lp,
            },
            baseline,
            fin_overrun,
        )
        attribution = AttributionResult(
            cost_by_causer_and_type=cost_by_causer,
            cost_by_type_and_recipient=recipients,
            schedule_by_causer_and_type=schedule_causers,
        )
        attribution.validate()

        outcomes = {}
        for stakeholder, assignment in config.contracts.items():
            scope = StakeholderScope(
                we=assignment.we,
                or_caused=attribution.cost_caused_by(stakeholder),
                or_received=attribution.cost_received_by(stakeholder),
            )
            outcomes[stakeholder] = ContractOutcome(
                terms=assignment.terms,
                we=scope.we,
                or_caused=scope.or_caused,
                or_received=scope.or_received,
                profit_cause=profit(assignment.terms, scope.we, scope.or_caused),
                profit_recipient=profit(assignment.terms, scope.we, scope.or_received),
                delta=allocation_delta(assignment.terms, scope),
                flags=litigation_flags(assignment.terms, scope),
            )

        results.append(
            PlantResult(
                plant_index=plant_index,
                baseline_occ=occ0,
                baseline_tci=baseline_tci,
                overrun_totals=totals,
                financing_overrun=fin_overrun,
                tci=baseline_tci + totals.dc_total + fin_overrun,
                attribution=attribution,
                schedule=ScheduleBreakdown(
                    tc0_months=baseline.tc0_months,
                    overrun_months=totals.dt_total,
                    ts_months=baseline.ts0_months,
                ),
                contract_outcomes=outcomes,
            )
        )
    return results


@dataclass(frozen=True)
class AggregateTotals:
    """Element-wise sums of the per-plant ledgers across the whole series."""

    cost_by_causer_and_type: Mapping[tuple[Stakeholder, CostOverrunType], float]
    cost_by_type_and_recipient: Mapping[tuple[CostOverrunType, Stakeholder], float]
    schedule_by_causer_and_type: Mapping[tuple[Stakeholder, ScheduleOverrunType], float]
    total_cost_overrun: float


def aggregate(results: list[PlantResult]) -> AggregateTotals:
    """Sum the ledgers over all plants; conservation survives summation."""
    if not results:
        raise DomainError("cannot aggregate an empty result series")
    causer = {(s, t): 0.0 for s in Stakeholder for t in CostOverrunType}
    recipient = {(t, s): 0.0 for t in CostOverrunType for s in Stakeholder}
    schedule = {(s, t): 0.0 for s in Stakeholder for t in ScheduleOverrunType}
    for result in results:
        for key, value in result.attribution.cost_by_causer_and_type.items():
            causer[key] += value
        for key, value in result.attribution.cost_by_type_and_recipient.items():
            recipient[key] += value
        for key, value in result.attribution.schedule_by_causer_and_type.items():
            schedule[key] += value
    return AggregateTotals(
        cost_by_causer_and_type=causer,
        cost_by_type_and_recipient=recipient,
        schedule_by_causer_and_type=schedule,
        total_cost_overrun=sum(causer.values()),
    )


@dataclass(frozen=True)
class SankeyFlows:
    """Causer -> overrun-type -> recipient flows for one plant. Zero-valued
    links are dropped; per-type inflow equals outflow."""

    causer_to_type: Mapping[tuple[Stakeholder, CostOverrunType], float]
    type_to_recipient: Mapping[tuple[CostOverrunType, Stakeholder], float]


def sankey_flows(result: PlantResult) -> SankeyFlows:
    """Project a plant's cost ledger onto the two bipartite flow layers."""
    return SankeyFlows(
        causer_to_type={
            key: v
            for key, v in result.attribution.cost_by_causer_and_type.items()
            if v != 0.0
        },
        type_to_recipient={
            key: v
            for key, v in result.attribution.cost_by_type_and_recipient.items()
            if v != 0.0
        },
    )
