"""Result serialization: structured JSON (lossless round trip) and tabular CSV.

The JSON document mirrors the result dataclasses field for field, carries
the plant capacity so per-kWe views can be recomputed, and parses back into
an equal list of PlantResult objects. The CSV is the flat ledger view: one
row per (plant, side, party, overrun type) with amounts in absolute USD and
USD per kWe.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Mapping

from .attribution import AttributionResult
from .config_io import terms_from_dict, terms_to_dict
from .contracts import LitigationAssessment
from .errors import DomainError
from .overrun_model import OverrunTotals
from .scenario import (
    AggregateTotals,
    ContractOutcome,
    PlantResult,
    SankeyFlows,
    ScheduleBreakdown,
    aggregate,
    sankey_flows,
)
from .stakeholders import CostOverrunType, ScheduleOverrunType, Stakeholder

FORMATS = ("json", "csv")


def _cost_causer_grid(mapping) -> dict[str, dict[str, float]]:
    return {
        s.value: {t.value: mapping[(s, t)] for t in CostOverrunType}
        for s in Stakeholder
    }


def _cost_recipient_grid(mapping) -> dict[str, dict[str, float]]:
    return {
        t.value: {s.value: mapping[(t, s)] for s in Stakeholder}
        for t in CostOverrunType
    }


def _schedule_causer_grid(mapping) -> dict[str, dict[str, float]]:
    return {
        s.value: {t.value: mapping[(s, t)] for t in ScheduleOverrunType}
        for s in Stakeholder
    }


def _sankey_links(flows: SankeyFlows) -> dict[str, list[dict[str, Any]]]:
    return {
        "causer_to_type": [
            {"source": s.value, "target": t.value, "value_usd": v}
            for (s, t), v in flows.causer_to_type.items()
        ],
        "type_to_recipient": [
            {"source": t.value, "target": s.value, "value_usd": v}
            for (t, s), v in flows.type_to_recipient.items()
        ],
    }


def _flags_to_dict(flags: LitigationAssessment) -> dict[str, Any]:
    return {
        "delta_usd": flags.delta,
        "delta_sign": flags.delta_sign,
        "cause_in_zero_profit_region": flags.cause_in_zero_profit_region,
        "recipient_in_zero_profit_region": flags.recipient_in_zero_profit_region,
        "slope_sign_at_recipient": flags.slope_sign_at_recipient,
        "litigation_risk_against_causers": flags.litigation_risk_against_causers,
    }


def _flags_from_dict(data: Mapping[str, Any]) -> LitigationAssessment:
    return LitigationAssessment(
        delta=data["delta_usd"],
        delta_sign=data["delta_sign"],
        cause_in_zero_profit_region=data["cause_in_zero_profit_region"],
        recipient_in_zero_profit_region=data["recipient_in_zero_profit_region"],
        slope_sign_at_recipient=data["slope_sign_at_recipient"],
        litigation_risk_against_causers=data["litigation_risk_against_causers"],
    )


def plant_result_to_dict(result: PlantResult) -> dict[str, Any]:
    return {
        "plant_index": result.plant_index,
        "baseline_occ_usd": result.baseline_occ,
        "baseline_tci_usd": result.baseline_tci,
        "tci_usd": result.tci,
        "overruns": {
            "rework_usd": result.overrun_totals.dc_rework,
            "low_productivity_usd": result.overrun_totals.dc_lp,
            "financing_usd": result.financing_overrun,
            "total_usd": result.total_cost_overrun,
        },
        "schedule_months": {
            "baseline_construction": result.schedule.tc0_months,
            "construction_overrun": result.schedule.overrun_months,
            "startup": result.schedule.ts_months,
            "total": result.schedule.total_months,
            "overrun_by_category": {
                "rework": result.overrun_totals.dt_rework,
                "low_productivity": result.overrun_totals.dt_lp,
                "supply_chain_delay": result.overrun_totals.dt_scd,
            },
        },
        "attribution": {
            "cost_by_causer_and_type": _cost_causer_grid(
                result.attribution.cost_by_causer_and_type
            ),
            "cost_by_type_and_recipient": _cost_recipient_grid(
                result.attribution.cost_by_type_and_recipient
            ),
            "schedule_by_causer_and_type": _schedule_causer_grid(
                result.attribution.schedule_by_causer_and_type
            ),
        },
        "sankey": _sankey_links(sankey_flows(result)),
        "contracts": {
            stakeholder.value: {
                "terms": terms_to_dict(outcome.terms),
                "we_usd": outcome.we,
                "or_caused_usd": outcome.or_caused,
                "or_received_usd": outcome.or_received,
                "profit_cause_usd": outcome.profit_cause,
                "profit_recipient_usd": outcome.profit_recipient,
                "delta_usd": outcome.delta,
                "flags": _flags_to_dict(outcome.flags),
            }
            for stakeholder, outcome in result.contract_outcomes.items()
        },
    }


def plant_result_from_dict(data: Mapping[str, Any]) -> PlantResult:
    overruns = data["overruns"]
    sched = data["schedule_months"]
    by_cat = sched["overrun_by_category"]
    attribution = AttributionResult(
        cost_by_causer_and_type={
            (Stakeholder(s), CostOverrunType(t)): v
            for s, row in data["attribution"]["cost_by_causer_and_type"].items()
            for t, v in row.items()
        },
        cost_by_type_and_recipient={
            (CostOverrunType(t), Stakeholder(s)): v
            for t, row in data["attribution"]["cost_by_type_and_recipient"].items()
            for s, v in row.items()
        },
        schedule_by_causer_and_type={
            (Stakeholder(s), ScheduleOverrunType(t)): v
            for s, row in data["attribution"]["schedule_by_causer_and_type"].items()
            for t, v in row.items()
        },
    )
    outcomes = {}
    for key, entry in data["contracts"].items():
        outcomes[Stakeholder(key)] = ContractOutcome(
            terms=terms_from_dict(entry["terms"], "contracts"),
            we=entry["we_usd"],
            or_caused=entry["or_caused_usd"],
            or_received=entry["or_received_usd"],
            profit_cause=entry["profit_cause_usd"],
            profit_recipient=entry["profit_recipient_usd"],
            delta=entry["delta_usd"],
            flags=_flags_from_dict(entry["flags"]),
        )
    return PlantResult(
        plant_index=data["plant_index"],
        baseline_occ=data["baseline_occ_usd"],
        baseline_tci=data["baseline_tci_usd"],
        overrun_totals=OverrunTotals(
            dc_rework=overruns["rework_usd"],
            dc_lp=overruns["low_productivity_usd"],
            dt_rework=by_cat["rework"],
            dt_lp=by_cat["low_productivity"],
            dt_scd=by_cat["supply_chain_delay"],
        ),
        financing_overrun=overruns["financing_usd"],
        tci=data["tci_usd"],
        attribution=attribution,
        schedule=ScheduleBreakdown(
            tc0_months=sched["baseline_construction"],
            overrun_months=sched["construction_overrun"],
            ts_months=sched["startup"],
        ),
        contract_outcomes=outcomes,
    )


def results_to_dict(
    results: list[PlantResult],
    scenario_name: str,
    plant_capacity_kwe: float,
) -> dict[str, Any]:
    document: dict[str, Any] = {
        "scenario_name": scenario_name,
        "plant_capacity_kwe": plant_capacity_kwe,
        "currency": "2024-USD",
        "plants": [plant_result_to_dict(r) for r in results],
    }
    if results:
        totals = aggregate(results)
        document["aggregate"] = {
            "cost_by_causer_and_type": _cost_causer_grid(totals.cost_by_causer_and_type),
            "cost_by_type_and_recipient": _cost_recipient_grid(
                totals.cost_by_type_and_recipient
            ),
            "schedule_by_causer_and_type": _schedule_causer_grid(
                totals.schedule_by_causer_and_type
            ),
            "total_cost_overrun_usd": totals.total_cost_overrun,
        }
    return document


def results_from_dict(data: Mapping[str, Any]) -> list[PlantResult]:
    return [plant_result_from_dict(entry) for entry in data["plants"]]


def results_to_json(
    results: list[PlantResult], scenario_name: str, plant_capacity_kwe: float
) -> str:
    return json.dumps(
        results_to_dict(results, scenario_name, plant_capacity_kwe),
        indent=2,
        sort_keys=True,
    )


def results_from_json(text: str) -> list[PlantResult]:
    return results_from_dict(json.loads(text))


def results_to_csv(
    results: list[PlantResult], scenario_name: str, plant_capacity_kwe: float
) -> str:
    """Flat cost-ledger view: one row per (plant, side, party, overrun type)."""
    if plant_capacity_kwe <= 0:
        raise DomainError("plant capacity must be positive")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        [
            "scenario",
            "plant_index",
            "side",
            "party",
            "overrun_type",
            "amount_usd",
            "amount_usd_per_kwe",
            "plant_capacity_kwe",
        ]
    )
    for result in results:
        for stakeholder in Stakeholder:
            for overrun_type in CostOverrunType:
                amount = result.attribution.cost_by_causer_and_type[
                    (stakeholder, overrun_type)
                ]
                writer.writerow(
                    [
                        scenario_name,
                        result.plant_index,
                        "caused_by",
                        stakeholder.value,
                        overrun_type.value,
                        repr(amount),
                        repr(amount / plant_capacity_kwe),
                        repr(plant_capacity_kwe),
                    ]
                )
        for overrun_type in CostOverrunType:
            for stakeholder in Stakeholder:
                amount = result.attribution.cost_by_type_and_recipient[
                    (overrun_type, stakeholder)
                ]
                writer.writerow(
                    [
                        scenario_name,
                        result.plant_index,
                        "received_by",
                        stakeholder.value,
                        overrun_type.value,
                        repr(amount),
                        repr(amount / plant_capacity_kwe),
                        repr(plant_capacity_kwe),
                    ]
                )
    return buffer.getvalue()


def export(
    results: list[PlantResult],
    scenario_name: str,
    plant_capacity_kwe: float,
    format: str,
) -> str:
    """Serialize a result series as 'json' or 'csv'."""
    if format == "json":
        return results_to_json(results, scenario_name, plant_capacity_kwe)
    if format == "csv":
        return results_to_csv(results, scenario_name, plant_capacity_kwe)
    raise DomainError(f"unknown export format {format!r}; expected one of {FORMATS}")
