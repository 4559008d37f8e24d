import pytest

from overrun_ledger.attribution import (
    ResponsibilityCategory,
    ResponsibilityMatrix,
)
from overrun_ledger.baseline import BaselineCostModel
from overrun_ledger.config_io import bundled_config
from overrun_ledger.stakeholders import Account, CostElement, Stakeholder

CS = Stakeholder.CONSTRUCTION_SUBCONTRACTORS
DM = Stakeholder.DESIGN_AND_MANAGEMENT
ES = Stakeholder.EQUIPMENT_SUPPLIERS
CR = Stakeholder.CREDITORS


def make_baseline(
    direct_factory=400.0,
    direct_material=100.0,
    direct_labor=500.0,
    indirect=0.0,
    preconstruction=0.0,
    supplementary=0.0,
    capacity=1000.0,
    tc0=60.0,
    ts0=12.0,
    indirect_cs_share=0.306,
):
    """Small synthetic baseline; defaults give a 1000-unit direct account."""
    cells = {
        (Account.DIRECT, CostElement.FACTORY_EQUIPMENT): direct_factory,
        (Account.DIRECT, CostElement.SITE_MATERIAL): direct_material,
        (Account.DIRECT, CostElement.SITE_LABOR): direct_labor,
    }
    if indirect:
        cells[(Account.INDIRECT, CostElement.SITE_LABOR)] = indirect
    if preconstruction:
        cells[(Account.PRECONSTRUCTION, CostElement.SITE_MATERIAL)] = preconstruction
    if supplementary:
        cells[(Account.SUPPLEMENTARY, CostElement.SITE_MATERIAL)] = supplementary
    return BaselineCostModel(
        plant_capacity_kwe=capacity,
        occ0_by_account_element=cells,
        tc0_months=tc0,
        ts0_months=ts0,
        indirect_subcontractor_share=indirect_cs_share,
    )


def survey_matrix():
    """The bundled unproductive-hours survey matrix, built inline."""
    rows = [
        ("Material Availability", 6.80, {CS, DM, ES}),
        ("Tool Availability", 4.28, {CS}),
        ("Crew Interfacing", 3.54, {CS, DM}),
        ("Overcrowded Work Areas", 4.62, {DM}),
        ("Instructions Time", 2.27, {CS}),
        ("Inspection Delays", 2.61, {DM}),
    ]
    return ResponsibilityMatrix(
        tuple(
            ResponsibilityCategory(name, hours, frozenset(capable))
            for name, hours, capable in rows
        )
    )


@pytest.fixture(scope="session")
def us_experience():
    return bundled_config("us-experience")


@pytest.fixture(scope="session")
def fixed_cp():
    return bundled_config("fixed-construction-proficiency")
