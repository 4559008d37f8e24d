"""Shared vocabulary: stakeholders, cost accounts, cost elements, overrun types.

Money is carried in absolute 2024 USD everywhere inside the engine;
per-kWe figures are a reporting view computed at output time.
"""

from __future__ import annotations

import enum


class Stakeholder(enum.Enum):
    """Parties that cause overruns and/or receive payment for them.

    DESIGN_AND_MANAGEMENT bundles the reactor vendor, the architect-engineer,
    and the constructor into one party. CREDITORS are the project financiers;
    they never cause overruns but collect all financing charges.
    """

    CONSTRUCTION_SUBCONTRACTORS = "construction_subcontractors"
    EQUIPMENT_SUPPLIERS = "equipment_suppliers"
    DESIGN_AND_MANAGEMENT = "design_and_management"
    CREDITORS = "creditors"


#: Stakeholders that can cause overruns (everyone but the creditors).
CAUSERS = (
    Stakeholder.CONSTRUCTION_SUBCONTRACTORS,
    Stakeholder.EQUIPMENT_SUPPLIERS,
    Stakeholder.DESIGN_AND_MANAGEMENT,
)


class CostElement(enum.Enum):
    """EEDB-style breakdown of where a dollar of cost physically goes."""

    FACTORY_EQUIPMENT = "factory_equipment"
    SITE_MATERIAL = "site_material"
    SITE_LABOR = "site_labor"


class Account(enum.Enum):
    """Generalized code-of-accounts buckets for capitalized costs."""

    PRECONSTRUCTION = "preconstruction"  # GN-COA 1
    DIRECT = "direct"  # GN-COA 2
    INDIRECT = "indirect"  # GN-COA 3
    SUPPLEMENTARY = "supplementary"  # GN-COA 5

    @property
    def code(self) -> int:
        return {"preconstruction": 1, "direct": 2, "indirect": 3, "supplementary": 5}[
            self.value
        ]


class CostOverrunType(enum.Enum):
    """Categories of cost overruns tracked in the money ledger."""

    REWORK = "rework"
    LOW_PRODUCTIVITY = "low_productivity"
    FINANCING = "financing"


class ScheduleOverrunType(enum.Enum):
    """Categories of construction schedule overruns (months ledger)."""

    REWORK = "rework"
    LOW_PRODUCTIVITY = "low_productivity"
    SUPPLY_CHAIN_DELAY = "supply_chain_delay"
