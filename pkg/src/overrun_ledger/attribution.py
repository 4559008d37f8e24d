"""Two-sided overrun ledger: who caused each overrun vs. who got paid for it.

The causer side answers "whose lack of proficiency created this overrun";
the recipient side answers "whose invoice the owner paid it on". The two
sides conserve the same per-type totals but split them very differently,
which is the whole point of keeping both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .baseline import BaselineCostModel
from .errors import AttributionError, DomainError
from .overrun_model import ReworkFactors, total_rework_cost
from .stakeholders import (
    CAUSERS,
    Account,
    CostElement,
    CostOverrunType,
    ScheduleOverrunType,
    Stakeholder,
)

#: Conservation tolerance (relative) for ledger checks.
CONSERVATION_RTOL = 1e-9

ReworkCostFn = Callable[[ReworkFactors, BaselineCostModel], float]


@dataclass(frozen=True)
class ResponsibilityCategory:
    """One source of unproductive site hours and who could have caused it."""

    name: str
    hours_per_week: float
    capable: frozenset[Stakeholder]

    def __post_init__(self):
        if self.hours_per_week < 0:
            raise DomainError(f"category {self.name!r}: hours must be >= 0")
        if not self.capable:
            raise DomainError(f"category {self.name!r}: needs >= 1 capable stakeholder")
        if Stakeholder.CREDITORS in self.capable:
            raise DomainError(f"category {self.name!r}: creditors cannot cause overruns")


@dataclass(frozen=True)
class ResponsibilityMatrix:
    """Survey-derived unproductive-hours categories with a capability flag per
    (category, stakeholder) pair. Ships as an editable CSV in the bundled
    data; see the README for the schema."""

    categories: tuple[ResponsibilityCategory, ...]

    def __post_init__(self):
        if self.total_hours() <= 0:
            raise DomainError("responsibility matrix has zero total hours")

    def total_hours(self) -> float:
        return sum(c.hours_per_week for c in self.categories)


@dataclass(frozen=True)
class ResponsibilityShares:
    """Bounds and point estimates of each stakeholder's responsibility for
    non-rework unproductive hours.

    minimum: share from categories where the stakeholder is the only
    possible causer; maximum: share from every category it could have
    caused; midpoint: (min+max)/2; normalized: midpoints rescaled to sum
    to 1, which is what the low-productivity split actually uses.
    """

    minimum: Mapping[Stakeholder, float]
    maximum: Mapping[Stakeholder, float]
    midpoint: Mapping[Stakeholder, float]
    normalized_midpoint: Mapping[Stakeholder, float]

    def with_points(self, points: Mapping[Stakeholder, float]) -> "ResponsibilityShares":
        """Sensitivity hook: replace midpoints with caller-chosen points
        inside each stakeholder's [min, max] band, then renormalize."""
        chosen = dict(self.midpoint)
        for stakeholder, value in points.items():
            lo, hi = self.minimum[stakeholder], self.maximum[stakeholder]
            if not lo <= value <= hi:
                raise DomainError(
                    f"{stakeholder.value}: point {value} outside [{lo}, {hi}]"
                )
            chosen[stakeholder] = value
        total = sum(chosen.values())
        if total <= 0:
            raise DomainError("responsibility points sum to zero")
        return ResponsibilityShares(
            minimum=self.minimum,
            maximum=self.maximum,
            midpoint=chosen,
            normalized_midpoint={s: v / total for s, v in chosen.items()},
        )


def compute_responsibility_shares(matrix: ResponsibilityMatrix) -> ResponsibilityShares:
    """Derive min/max/midpoint responsibility shares from the capability
    matrix of unproductive-hours categories."""
    total = matrix.total_hours()
    if total <= 0:
        raise DomainError("responsibility matrix has zero total hours")
    minimum: dict[Stakeholder, float] = {}
    maximum: dict[Stakeholder, float] = {}
    for stakeholder in CAUSERS:
        sole = sum(
            c.hours_per_week for c in matrix.categories if c.capable == {stakeholder}
        )
        possible = sum(
            c.hours_per_week for c in matrix.categories if stakeholder in c.capable
        )
        minimum[stakeholder] = sole / total
        maximum[stakeholder] = possible / total
    midpoint = {s: (minimum[s] + maximum[s]) / 2.0 for s in CAUSERS}
    mid_total = sum(midpoint.values())
    normalized = {s: midpoint[s] / mid_total for s in CAUSERS}
    return ResponsibilityShares(
        minimum=minimum,
        maximum=maximum,
        midpoint=midpoint,
        normalized_midpoint=normalized,
    )


def attribute_rework_causers(
    total: float,
    factors: ReworkFactors,
    baseline: BaselineCostModel,
    rework_cost: ReworkCostFn = total_rework_cost,
) -> dict[Stakeholder, float]:
    """Split a rework overrun (money or months) across causers.

    The overrun model is evaluated three times with only one factor active at
    a time; `total` is divided in proportion to those component overruns.
    The construction component goes to the subcontractors; the A-E and
    design-completion components both go to design & management. Shares sum
    to `total` exactly.
    """
    if total < 0:
        raise DomainError("rework total must be non-negative")
    result = {s: 0.0 for s in Stakeholder}
    if total == 0:
        return result
    comp_c = rework_cost(ReworkFactors(factors.r_c, 1.0, 1.0), baseline)
    comp_ae = rework_cost(ReworkFactors(1.0, factors.r_ae, 1.0), baseline)
    comp_design = rework_cost(ReworkFactors(1.0, 1.0, factors.r_design), baseline)
    denom = comp_c + comp_ae + comp_design
    if denom <= 0:
        raise AttributionError(
            f"rework total {total} > 0 but all component overruns are zero"
        )
    cs = total * comp_c / denom
    result[Stakeholder.CONSTRUCTION_SUBCONTRACTORS] = cs
    # AE + design remainder; clamp the one-ulp float residue when cs ~ total
    result[Stakeholder.DESIGN_AND_MANAGEMENT] = max(0.0, total - cs)
    return result


def attribute_lp_causers(
    total: float, shares: ResponsibilityShares
) -> dict[Stakeholder, float]:
    """Split a low-productivity overrun (money or months) across causers
    using the normalized responsibility shares; sums to `total` exactly."""
    if total < 0:
        raise DomainError("low-productivity total must be non-negative")
    result = {s: 0.0 for s in Stakeholder}
    if total == 0:
        return result
    cs = total * shares.normalized_midpoint[Stakeholder.CONSTRUCTION_SUBCONTRACTORS]
    dm = total * shares.normalized_midpoint[Stakeholder.DESIGN_AND_MANAGEMENT]
    result[Stakeholder.CONSTRUCTION_SUBCONTRACTORS] = cs
    result[Stakeholder.DESIGN_AND_MANAGEMENT] = dm
    result[Stakeholder.EQUIPMENT_SUPPLIERS] = max(0.0, total - cs - dm)
    return result


def attribute_recipients(
    overrun_by_type: Mapping[CostOverrunType, float],
    baseline: BaselineCostModel,
    financing_overrun: float,
) -> dict[tuple[CostOverrunType, Stakeholder], float]:
    """Assign every overrun dollar to the stakeholder whose invoice carries it.

    Non-financing overruns inherit the baseline direct:indirect proportions.
    The direct portion follows the element rules (factory equipment is billed
    by the equipment suppliers, site material and labor by the construction
    subcontractors), except that low-productivity direct overruns are pure
    site labor: they pay for hours spent waiting. The indirect portion splits
    by the construction-services share (subcontractors) vs. the rest (design
    & management). Financing goes to the creditors in full.
    """
    if financing_overrun < 0:
        raise DomainError("financing overrun must be non-negative")
    result = {(t, s): 0.0 for t in CostOverrunType for s in Stakeholder}
    b2 = baseline.account_total(Account.DIRECT)
    b3 = baseline.account_total(Account.INDIRECT)
    for overrun_type, amount in overrun_by_type.items():
        if overrun_type is CostOverrunType.FINANCING:
            raise DomainError("financing is passed separately, not in overrun_by_type")
        if amount < 0:
            raise DomainError(f"{overrun_type.value} overrun must be non-negative")
        if amount == 0:
            continue
        if b2 + b3 <= 0:
            raise AttributionError(
                "cannot split an overrun: baseline direct+indirect costs are zero"
            )
        direct = amount * b2 / (b2 + b3)
        indirect = amount - direct
        if overrun_type is CostOverrunType.LOW_PRODUCTIVITY:
            # Unproductive hours are billed as site labor regardless of the
            # baseline element mix.
            cs_direct = direct
            es_direct = 0.0
        else:
            shares = baseline.direct_element_shares() if direct > 0 else {}
            es_direct = direct * shares.get(CostElement.FACTORY_EQUIPMENT, 0.0)
            cs_direct = direct - es_direct  # site material + site labor
        cs_indirect = indirect * baseline.indirect_subcontractor_share
        dm_indirect = indirect - cs_indirect
        result[(overrun_type, Stakeholder.CONSTRUCTION_SUBCONTRACTORS)] = (
            cs_direct + cs_indirect
        )
        result[(overrun_type, Stakeholder.EQUIPMENT_SUPPLIERS)] = es_direct
        result[(overrun_type, Stakeholder.DESIGN_AND_MANAGEMENT)] = dm_indirect
    result[(CostOverrunType.FINANCING, Stakeholder.CREDITORS)] = financing_overrun
    return result


def attribute_schedule_causers(
    totals: tuple[float, float, float],
    factors: ReworkFactors,
    shares: ResponsibilityShares,
    baseline: BaselineCostModel,
    rework_cost: ReworkCostFn = total_rework_cost,
) -> dict[tuple[Stakeholder, ScheduleOverrunType], float]:
    """Split schedule overrun months (rework, low-productivity, supply-chain)
    across causers; supply-chain delays are carried entirely by the
    equipment suppliers."""
    dt_rework, dt_lp, dt_scd = totals
    if dt_scd < 0:
        raise DomainError("supply-chain delay must be non-negative")
    result = {(s, t): 0.0 for s in Stakeholder for t in ScheduleOverrunType}
    rw = attribute_rework_causers(dt_rework, factors, baseline, rework_cost)
    lp = attribute_lp_causers(dt_lp, shares)
    for stakeholder in Stakeholder:
        result[(stakeholder, ScheduleOverrunType.REWORK)] = rw[stakeholder]
        result[(stakeholder, ScheduleOverrunType.LOW_PRODUCTIVITY)] = lp[stakeholder]
    result[(Stakeholder.EQUIPMENT_SUPPLIERS, ScheduleOverrunType.SUPPLY_CHAIN_DELAY)] = (
        dt_scd
    )
    return result


@dataclass(frozen=True)
class AttributionResult:
    """The assembled two-sided ledger for one plant.

    cost entries are USD; schedule entries are months. Per overrun type the
    causer column and the recipient column must sum to the same total.
    """

    cost_by_causer_and_type: Mapping[tuple[Stakeholder, CostOverrunType], float]
    cost_by_type_and_recipient: Mapping[tuple[CostOverrunType, Stakeholder], float]
    schedule_by_causer_and_type: Mapping[tuple[Stakeholder, ScheduleOverrunType], float]

    def cost_caused_by(self, stakeholder: Stakeholder) -> float:
        return sum(
            v for (s, _), v in self.cost_by_causer_and_type.items() if s is stakeholder
        )

    def cost_received_by(self, stakeholder: Stakeholder) -> float:
        return sum(
            v
            for (_, s), v in self.cost_by_type_and_recipient.items()
            if s is stakeholder
        )

    def cost_type_total(self, overrun_type: CostOverrunType) -> float:
        return sum(
            v
            for (_, t), v in self.cost_by_causer_and_type.items()
            if t is overrun_type
        )

    def total_cost_overrun(self) -> float:
        return sum(self.cost_by_causer_and_type.values())

    def validate(self, rtol: float = CONSERVATION_RTOL) -> None:
        """Check ledger conservation and the creditor rules; raises
        AttributionError on violation."""
        for mapping in (
            self.cost_by_causer_and_type,
            self.cost_by_type_and_recipient,
            self.schedule_by_causer_and_type,
        ):
            for key, value in mapping.items():
                if value < 0:
                    raise AttributionError(f"negative ledger entry at {key}: {value}")
        for overrun_type in CostOverrunType:
            caused = sum(
                v
                for (_, t), v in self.cost_by_causer_and_type.items()
                if t is overrun_type
            )
            received = sum(
                v
                for (t, _), v in self.cost_by_type_and_recipient.items()
                if t is overrun_type
            )
            scale = max(1.0, abs(caused), abs(received))
            if abs(caused - received) > rtol * scale:
                raise AttributionError(
                    f"{overrun_type.value}: caused {caused} != received {received}"
                )
        for (stakeholder, _), value in self.cost_by_causer_and_type.items():
            if stakeholder is Stakeholder.CREDITORS and value != 0:
                raise AttributionError("creditors cannot cause cost overruns")
        for (stakeholder, _), value in self.schedule_by_causer_and_type.items():
            if stakeholder is Stakeholder.CREDITORS and value != 0:
                raise AttributionError("creditors cannot cause schedule overruns")
        for (overrun_type, stakeholder), value in self.cost_by_type_and_recipient.items():
            if (
                stakeholder is Stakeholder.CREDITORS
                and overrun_type is not CostOverrunType.FINANCING
                and value != 0
            ):
                raise AttributionError("creditors only receive financing overruns")
