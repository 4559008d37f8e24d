"""Scenario configuration files: YAML schema, validation, bundled defaults.

A scenario is one human-editable YAML document. Baseline costs are written
in USD per kWe (the unit practitioners quote) and are expanded to absolute
2024 USD on load using the plant capacity. Contract scope costs are already
absolute USD. The responsibility matrix may be inlined or referenced as a
CSV file living next to the config (or in the bundled data directory).

Named configs resolve in this order: explicit path, then
$OVERRUN_LEDGER_CONFIG_DIR/<name>.yaml, then the bundled data directory.
"""

from __future__ import annotations

import csv
import io
import os
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

import yaml

from .attribution import ResponsibilityCategory, ResponsibilityMatrix
from .baseline import BaselineCostModel, LeverSchedule, LeverState
from .contracts import ContractTerms, CostPlus, FixedPrice, PerformanceBased
from .errors import ConfigError, DomainError
from .financing import FinancingParams
from .overrun_model import OverrunModelParams
from .scenario import ContractAssignment, ScenarioConfig
from .stakeholders import Account, CostElement, Stakeholder

ENV_CONFIG_DIR = "OVERRUN_LEDGER_CONFIG_DIR"

BUNDLED_SCENARIOS = ("us-experience", "fixed-construction-proficiency")

#: Where a scalar (element-less) account amount is booked. Only the direct
#: account's element split carries meaning downstream; these are bookkeeping
#: conventions for owner-style and services-style accounts.
_SCALAR_ACCOUNT_ELEMENT = {
    Account.PRECONSTRUCTION: CostElement.SITE_MATERIAL,
    Account.INDIRECT: CostElement.SITE_LABOR,
    Account.SUPPLEMENTARY: CostElement.SITE_MATERIAL,
}

_TERMS_TYPES = {
    "performance_based": PerformanceBased,
    "fixed_price": FixedPrice,
    "cost_plus": CostPlus,
}


def _require(mapping: Mapping[str, Any], key: str, where: str) -> Any:
    if key not in mapping:
        raise ConfigError(f"{where}.{key}" if where else key, "missing")
    return mapping[key]


def _number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(field, f"expected a number, got {value!r}")
    return float(value)


def baseline_from_dict(data: Mapping[str, Any]) -> BaselineCostModel:
    capacity = _number(_require(data, "plant_capacity_kwe", "baseline"),
                       "baseline.plant_capacity_kwe")
    occ = _require(data, "occ0_usd_per_kwe", "baseline")
    cells: dict[tuple[Account, CostElement], float] = {}
    for account in Account:
        if account.value not in occ:
            continue
        entry = occ[account.value]
        field = f"baseline.occ0_usd_per_kwe.{account.value}"
        if isinstance(entry, Mapping):
            for element in CostElement:
                if element.value in entry:
                    cells[(account, element)] = (
                        _number(entry[element.value], f"{field}.{element.value}")
                        * capacity
                    )
            unknown = set(entry) - {e.value for e in CostElement}
            if unknown:
                raise ConfigError(field, f"unknown cost elements {sorted(unknown)}")
        else:
            cells[(account, _SCALAR_ACCOUNT_ELEMENT.get(account, CostElement.SITE_MATERIAL))] = (
                _number(entry, field) * capacity
            )
    unknown = set(occ) - {a.value for a in Account}
    if unknown:
        raise ConfigError("baseline.occ0_usd_per_kwe", f"unknown accounts {sorted(unknown)}")
    try:
        return BaselineCostModel(
            plant_capacity_kwe=capacity,
            occ0_by_account_element=cells,
            tc0_months=_number(_require(data, "tc0_months", "baseline"), "baseline.tc0_months"),
            ts0_months=_number(_require(data, "ts0_months", "baseline"), "baseline.ts0_months"),
            indirect_subcontractor_share=_number(
                data.get("indirect_subcontractor_share", 0.306),
                "baseline.indirect_subcontractor_share",
            ),
        )
    except DomainError as exc:
        raise ConfigError("baseline", str(exc)) from exc


def baseline_to_dict(baseline: BaselineCostModel) -> dict[str, Any]:
    capacity = baseline.plant_capacity_kwe
    occ: dict[str, Any] = {}
    for account in Account:
        elements = {
            element.value: value / capacity
            for (acct, element), value in baseline.occ0_by_account_element.items()
            if acct is account
        }
        if elements:
            occ[account.value] = elements
    return {
        "plant_capacity_kwe": capacity,
        "tc0_months": baseline.tc0_months,
        "ts0_months": baseline.ts0_months,
        "indirect_subcontractor_share": baseline.indirect_subcontractor_share,
        "occ0_usd_per_kwe": occ,
    }


def levers_from_dict(data: Mapping[str, Any]) -> LeverSchedule:
    rows = _require(data, "per_plant", "levers")
    if not isinstance(rows, list) or not rows:
        raise ConfigError("levers.per_plant", "expected a non-empty list")
    states = []
    for i, row in enumerate(rows):
        where = f"levers.per_plant[{i}]"
        try:
            states.append(
                LeverState(
                    cp=_number(_require(row, "cp", where), f"{where}.cp"),
                    aep=_number(_require(row, "aep", where), f"{where}.aep"),
                    dc=_number(_require(row, "dc", where), f"{where}.dc"),
                )
            )
        except DomainError as exc:
            raise ConfigError(where, str(exc)) from exc
    return LeverSchedule(tuple(states))


def overrun_params_from_dict(data: Mapping[str, Any]) -> OverrunModelParams:
    where = "overrun_model"
    scd = _require(data, "supply_chain_delay_months", where)
    if not isinstance(scd, list):
        raise ConfigError(f"{where}.supply_chain_delay_months", "expected a list")
    try:
        return OverrunModelParams(
            rho_c=_number(_require(data, "rework_slope_construction", where),
                          f"{where}.rework_slope_construction"),
            rho_ae=_number(_require(data, "rework_slope_architect_engineer", where),
                           f"{where}.rework_slope_architect_engineer"),
            rho_d=_number(_require(data, "rework_slope_design_completion", where),
                          f"{where}.rework_slope_design_completion"),
            lambda_lp=_number(_require(data, "low_productivity_scale", where),
                              f"{where}.low_productivity_scale"),
            sigma_sched=_number(_require(data, "schedule_months_per_relative_cost", where),
                                f"{where}.schedule_months_per_relative_cost"),
            scd_months_per_plant=tuple(
                _number(v, f"{where}.supply_chain_delay_months[{i}]")
                for i, v in enumerate(scd)
            ),
        )
    except DomainError as exc:
        raise ConfigError(where, str(exc)) from exc


def overrun_params_to_dict(params: OverrunModelParams) -> dict[str, Any]:
    return {
        "rework_slope_construction": params.rho_c,
        "rework_slope_architect_engineer": params.rho_ae,
        "rework_slope_design_completion": params.rho_d,
        "low_productivity_scale": params.lambda_lp,
        "schedule_months_per_relative_cost": params.sigma_sched,
        "supply_chain_delay_months": list(params.scd_months_per_plant),
    }


def terms_from_dict(data: Mapping[str, Any], where: str) -> ContractTerms:
    kind = _require(data, "type", where)
    if kind not in _TERMS_TYPES:
        raise ConfigError(
            f"{where}.type", f"unknown contract type {kind!r}; "
            f"expected one of {sorted(_TERMS_TYPES)}"
        )
    kwargs = {k: v for k, v in data.items() if k != "type"}
    try:
        return _TERMS_TYPES[kind](**kwargs)
    except (TypeError, DomainError) as exc:
        raise ConfigError(where, str(exc)) from exc


def terms_to_dict(terms: ContractTerms) -> dict[str, Any]:
    for name, cls in _TERMS_TYPES.items():
        if isinstance(terms, cls):
            out: dict[str, Any] = {"type": name}
            out.update(terms.__dict__)
            return out
    raise TypeError(f"unknown contract terms: {terms!r}")


def matrix_from_rows(rows: list[Mapping[str, Any]], where: str) -> ResponsibilityMatrix:
    categories = []
    flag_fields = {
        Stakeholder.CONSTRUCTION_SUBCONTRACTORS: "construction_subcontractors",
        Stakeholder.DESIGN_AND_MANAGEMENT: "design_and_management",
        Stakeholder.EQUIPMENT_SUPPLIERS: "equipment_suppliers",
    }
    for i, row in enumerate(rows):
        here = f"{where}[{i}]"
        capable = frozenset(
            s for s, key in flag_fields.items() if int(_require(row, key, here))
        )
        try:
            categories.append(
                ResponsibilityCategory(
                    name=str(_require(row, "category", here)),
                    hours_per_week=_number(
                        _require(row, "hours_per_week", here), f"{here}.hours_per_week"
                    ),
                    capable=capable,
                )
            )
        except DomainError as exc:
            raise ConfigError(here, str(exc)) from exc
    try:
        return ResponsibilityMatrix(tuple(categories))
    except DomainError as exc:
        raise ConfigError(where, str(exc)) from exc


def load_responsibility_csv(path: Path) -> ResponsibilityMatrix:
    with open(path, newline="") as handle:
        return _matrix_from_csv_text(handle.read(), str(path))


def _matrix_from_csv_text(text: str, where: str) -> ResponsibilityMatrix:
    reader = csv.DictReader(io.StringIO(text))
    rows = [dict(r) for r in reader]
    for row in rows:
        row["hours_per_week"] = float(row["hours_per_week"])
    return matrix_from_rows(rows, where)


def matrix_to_rows(matrix: ResponsibilityMatrix) -> list[dict[str, Any]]:
    rows = []
    for category in matrix.categories:
        rows.append(
            {
                "category": category.name,
                "hours_per_week": category.hours_per_week,
                "construction_subcontractors": int(
                    Stakeholder.CONSTRUCTION_SUBCONTRACTORS in category.capable
                ),
                "design_and_management": int(
                    Stakeholder.DESIGN_AND_MANAGEMENT in category.capable
                ),
                "equipment_suppliers": int(
                    Stakeholder.EQUIPMENT_SUPPLIERS in category.capable
                ),
            }
        )
    return rows


def _bundled_path(filename: str) -> Path:
    return Path(str(resources.files("overrun_ledger").joinpath("data", filename)))


def config_from_dict(data: Mapping[str, Any], base_dir: Path | None = None) -> ScenarioConfig:
    """Build and validate a ScenarioConfig from its canonical dict form."""
    if not isinstance(data, Mapping):
        raise ConfigError("config", "expected a mapping at the top level")
    name = str(_require(data, "scenario_name", ""))
    baseline = baseline_from_dict(_require(data, "baseline", ""))
    levers = levers_from_dict(_require(data, "levers", ""))
    params = overrun_params_from_dict(_require(data, "overrun_model", ""))
    fin = _require(data, "financing", "")
    try:
        financing = FinancingParams(
            rate=_number(_require(fin, "rate", "financing"), "financing.rate"),
            time_step_months=_number(
                fin.get("time_step_months", 1.0), "financing.time_step_months"
            ),
        )
    except DomainError as exc:
        raise ConfigError("financing", str(exc)) from exc

    matrix_entry = _require(data, "responsibility_matrix", "")
    if isinstance(matrix_entry, Mapping) and "file" in matrix_entry:
        filename = str(matrix_entry["file"])
        candidates = []
        if base_dir is not None:
            candidates.append(base_dir / filename)
        candidates.append(_bundled_path(filename))
        for candidate in candidates:
            if candidate.exists():
                matrix = load_responsibility_csv(candidate)
                break
        else:
            raise ConfigError(
                "responsibility_matrix.file", f"{filename} not found near config or bundled"
            )
    elif isinstance(matrix_entry, Mapping) and "categories" in matrix_entry:
        matrix = matrix_from_rows(
            matrix_entry["categories"], "responsibility_matrix.categories"
        )
    else:
        raise ConfigError(
            "responsibility_matrix", "expected {file: ...} or {categories: [...]}"
        )

    contracts: dict[Stakeholder, ContractAssignment] = {}
    for key, entry in (data.get("contracts") or {}).items():
        where = f"contracts.{key}"
        try:
            stakeholder = Stakeholder(key)
        except ValueError as exc:
            raise ConfigError(where, f"unknown stakeholder {key!r}") from exc
        try:
            contracts[stakeholder] = ContractAssignment(
                terms=terms_from_dict(_require(entry, "terms", where), f"{where}.terms"),
                we=_number(_require(entry, "we_usd", where), f"{where}.we_usd"),
            )
        except DomainError as exc:
            raise ConfigError(where, str(exc)) from exc

    override: dict[Stakeholder, float] = {}
    for key, value in (data.get("responsibility_point_override") or {}).items():
        where = f"responsibility_point_override.{key}"
        try:
            override[Stakeholder(key)] = _number(value, where)
        except ValueError as exc:
            raise ConfigError(where, f"unknown stakeholder {key!r}") from exc

    target = data.get("schedule_target_months")
    config = ScenarioConfig(
        scenario_name=name,
        baseline=baseline,
        lever_schedule=levers,
        overrun_params=params,
        financing=financing,
        responsibility_matrix=matrix,
        n_plants=int(_require(data, "n_plants", "")),
        contracts=contracts,
        responsibility_point_override=override,
        schedule_target_months=None if target is None else _number(
            target, "schedule_target_months"
        ),
    )
    config.validate()
    return config


def config_to_dict(config: ScenarioConfig) -> dict[str, Any]:
    """Canonical, JSON-serializable form (responsibility matrix inlined)."""
    out: dict[str, Any] = {
        "scenario_name": config.scenario_name,
        "n_plants": config.n_plants,
        "baseline": baseline_to_dict(config.baseline),
        "levers": {
            "per_plant": [
                {"cp": s.cp, "aep": s.aep, "dc": s.dc}
                for s in config.lever_schedule.per_plant
            ]
        },
        "overrun_model": overrun_params_to_dict(config.overrun_params),
        "financing": {
            "rate": config.financing.rate,
            "time_step_months": config.financing.time_step_months,
        },
        "responsibility_matrix": {"categories": matrix_to_rows(config.responsibility_matrix)},
        "contracts": {
            stakeholder.value: {
                "we_usd": assignment.we,
                "terms": terms_to_dict(assignment.terms),
            }
            for stakeholder, assignment in config.contracts.items()
        },
    }
    if config.responsibility_point_override:
        out["responsibility_point_override"] = {
            s.value: v for s, v in config.responsibility_point_override.items()
        }
    if config.schedule_target_months is not None:
        out["schedule_target_months"] = config.schedule_target_months
    return out


def resolve_config_path(name_or_path: str) -> Path:
    """Resolve a config argument: explicit path, env config dir, bundled."""
    direct = Path(name_or_path)
    if direct.exists():
        return direct
    stem = name_or_path if name_or_path.endswith(".yaml") else f"{name_or_path}.yaml"
    env_dir = os.environ.get(ENV_CONFIG_DIR)
    if env_dir:
        candidate = Path(env_dir) / stem
        if candidate.exists():
            return candidate
    bundled = _bundled_path(stem)
    if bundled.exists():
        return bundled
    raise ConfigError("config", f"no config found for {name_or_path!r}")


def load_config(name_or_path: str) -> ScenarioConfig:
    path = resolve_config_path(name_or_path)
    with open(path) as handle:
        data = yaml.safe_load(handle)
    return config_from_dict(data, base_dir=path.parent)


def bundled_config(name: str) -> ScenarioConfig:
    if name not in BUNDLED_SCENARIOS:
        raise ConfigError("config", f"unknown bundled scenario {name!r}")
    return load_config(str(_bundled_path(f"{name}.yaml")))


def write_overrun_params(path: Path, params: OverrunModelParams) -> None:
    """Rewrite a config file's overrun_model block with fitted constants.

    The file is re-emitted by the YAML serializer, so hand comments are not
    preserved; keep notes outside the block if you need them to survive.
    """
    with open(path) as handle:
        data = yaml.safe_load(handle)
    data["overrun_model"] = overrun_params_to_dict(params)
    with open(path, "w") as handle:
        yaml.safe_dump(data, handle, sort_keys=False)
