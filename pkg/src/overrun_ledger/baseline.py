"""Baseline ("well-executed") cost and schedule model plus the lever system.

The baseline holds what the project *should* cost and how long it should
take when nobody reworks anything and the site runs at full productivity.
All overruns elsewhere in the package are measured against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError
from .stakeholders import Account, CostElement

#: Construction proficiency lever range. The productivity correlation hits
#: exactly 1.0 at CP_MAX, so values above it would imply negative
#: unproductive hours.
CP_MIN = 0.5
CP_MAX = 2.0


@dataclass(frozen=True)
class BaselineCostModel:
    """Well-executed overnight costs by (account, element) plus schedule.

    occ0_by_account_element maps (Account, CostElement) cells to 2024 USD.
    Missing cells mean zero. Only the direct account's element split is
    consumed downstream (recipient attribution and the site-labor base);
    element placement for the other accounts is bookkeeping.
    """

    plant_capacity_kwe: float
    occ0_by_account_element: Mapping[tuple[Account, CostElement], float]
    tc0_months: float
    ts0_months: float
    indirect_subcontractor_share: float = 0.306  # EEDB construction-services share

    def __post_init__(self):
        if self.plant_capacity_kwe <= 0:
            raise DomainError("plant capacity must be positive")
        if self.tc0_months <= 0:
            raise DomainError("baseline construction duration must be positive")
        if self.ts0_months < 0:
            raise DomainError("startup duration must be non-negative")
        if not 0.0 <= self.indirect_subcontractor_share <= 1.0:
            raise DomainError("indirect subcontractor share must be within [0, 1]")
        for key, value in self.occ0_by_account_element.items():
            if value < 0:
                raise DomainError(f"baseline cost cell {key} is negative")

    def account_total(self, account: Account) -> float:
        return sum(
            v for (acct, _), v in self.occ0_by_account_element.items() if acct is account
        )

    def total_occ(self) -> float:
        """Total baseline overnight cost across all accounts (USD)."""
        return sum(self.occ0_by_account_element.values())

    def direct_indirect_total(self) -> float:
        """Accounts 2+3 total, the base on which rework and LP overruns act."""
        return self.account_total(Account.DIRECT) + self.account_total(Account.INDIRECT)

    def site_labor_cost(self) -> float:
        """Baseline direct site-labor cost (USD), the low-productivity base."""
        return self.occ0_by_account_element.get(
            (Account.DIRECT, CostElement.SITE_LABOR), 0.0
        )

    def direct_element_shares(self) -> dict[CostElement, float]:
        """Fractions of the direct account by cost element (sum to 1)."""
        total = self.account_total(Account.DIRECT)
        if total <= 0:
            raise DomainError("direct account is empty; element shares undefined")
        return {
            element: self.occ0_by_account_element.get((Account.DIRECT, element), 0.0)
            / total
            for element in CostElement
        }

    def scaled(self, k: float) -> "BaselineCostModel":
        """Return a copy with every money cell multiplied by k."""
        return BaselineCostModel(
            plant_capacity_kwe=self.plant_capacity_kwe,
            occ0_by_account_element={
                key: v * k for key, v in self.occ0_by_account_element.items()
            },
            tc0_months=self.tc0_months,
            ts0_months=self.ts0_months,
            indirect_subcontractor_share=self.indirect_subcontractor_share,
        )


@dataclass(frozen=True)
class LeverState:
    """Proficiency/completeness levers for one plant in a deployment series.

    cp: construction proficiency, [0.5, 2.0]; 0.5 is a fully green workforce.
    aep: architect-engineer proficiency, [0, 1].
    dc: fraction of detailed design completed before construction, [0, 1].
    """

    cp: float
    aep: float
    dc: float

    def __post_init__(self):
        if not CP_MIN <= self.cp <= CP_MAX:
            raise DomainError(f"cp={self.cp} outside [{CP_MIN}, {CP_MAX}]")
        if not 0.0 <= self.aep <= 1.0:
            raise DomainError(f"aep={self.aep} outside [0, 1]")
        if not 0.0 <= self.dc <= 1.0:
            raise DomainError(f"dc={self.dc} outside [0, 1]")

    @property
    def maximal(self) -> bool:
        return self.cp == CP_MAX and self.aep == 1.0 and self.dc == 1.0


@dataclass(frozen=True)
class LeverSchedule:
    """Lever states for plants 1..N of a deployment series (1-based)."""

    per_plant: tuple[LeverState, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.per_plant) < 1:
            raise DomainError("lever schedule must cover at least one plant")

    def __len__(self) -> int:
        return len(self.per_plant)

    def state_for_plant(self, plant_index: int) -> LeverState:
        if not 1 <= plant_index <= len(self.per_plant):
            raise DomainError(
                f"plant index {plant_index} outside schedule of {len(self.per_plant)}"
            )
        return self.per_plant[plant_index - 1]

    def with_pinned_cp(self, cp: float = CP_MIN) -> "LeverSchedule":
        """The same schedule with construction proficiency pinned (the
        'fresh construction workforce on every build' variant)."""
        return LeverSchedule(
            tuple(LeverState(cp=cp, aep=s.aep, dc=s.dc) for s in self.per_plant)
        )
