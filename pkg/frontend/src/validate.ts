/** Client-side scenario validation, mirroring the server's rules and field
 * naming so problems surface before a request is made (the server remains
 * authoritative; anything it rejects is shown inline from its response). */

import type { ScenarioConfigDto } from "./types.js";

export interface ValidationIssue {
  field: string;
  message: string;
}

export const CP_MIN = 0.5;
export const CP_MAX = 2.0;

const CONTRACT_TYPES = new Set(["performance_based", "fixed_price", "cost_plus"]);
const STAKEHOLDER_KEYS = new Set([
  "construction_subcontractors",
  "equipment_suppliers",
  "design_and_management",
  "creditors",
]);

export function validateConfig(config: ScenarioConfigDto): ValidationIssue[] {
  const issues: ValidationIssue[] = [];
  const push = (field: string, message: string) => issues.push({ field, message });

  if (!Number.isInteger(config.n_plants) || config.n_plants < 1) {
    push("n_plants", "must be at least 1");
  }

  const baseline = config.baseline;
  if (baseline.plant_capacity_kwe <= 0) {
    push("baseline.plant_capacity_kwe", "must be positive");
  }
  if (baseline.tc0_months <= 0) push("baseline.tc0_months", "must be positive");
  if (baseline.ts0_months < 0) push("baseline.ts0_months", "must be non-negative");
  if (
    baseline.indirect_subcontractor_share < 0 ||
    baseline.indirect_subcontractor_share > 1
  ) {
    push("baseline.indirect_subcontractor_share", "must be within [0, 1]");
  }
  let directIndirect = 0;
  for (const [account, entry] of Object.entries(baseline.occ0_usd_per_kwe)) {
    const cells = typeof entry === "number" ? { _: entry } : entry;
    for (const [element, value] of Object.entries(cells)) {
      if (value < 0) {
        push(`baseline.occ0_usd_per_kwe.${account}.${element}`, "must be non-negative");
      }
      if (account === "direct" || account === "indirect") directIndirect += value;
    }
  }
  if (directIndirect <= 0) {
    push("baseline.occ0", "direct+indirect baseline costs must be positive");
  }

  const levers = config.levers.per_plant;
  if (levers.length !== config.n_plants) {
    push(
      "levers.per_plant",
      `covers ${levers.length} plants but n_plants is ${config.n_plants}`,
    );
  }
  levers.forEach((row, i) => {
    if (row.cp < CP_MIN || row.cp > CP_MAX) {
      push(`levers.per_plant[${i}].cp`, `outside [${CP_MIN}, ${CP_MAX}]`);
    }
    if (row.aep < 0 || row.aep > 1) push(`levers.per_plant[${i}].aep`, "outside [0, 1]");
    if (row.dc < 0 || row.dc > 1) push(`levers.per_plant[${i}].dc`, "outside [0, 1]");
  });

  const model = config.overrun_model;
  for (const key of [
    "rework_slope_construction",
    "rework_slope_architect_engineer",
    "rework_slope_design_completion",
    "low_productivity_scale",
    "schedule_months_per_relative_cost",
  ] as const) {
    if (model[key] < 0) push(`overrun_model.${key}`, "must be non-negative");
  }
  if (model.supply_chain_delay_months.length < config.n_plants) {
    push(
      "overrun_model.supply_chain_delay_months",
      `covers ${model.supply_chain_delay_months.length} plants but n_plants is ` +
        `${config.n_plants}`,
    );
  }
  model.supply_chain_delay_months.forEach((months, i) => {
    if (months < 0) {
      push(`overrun_model.supply_chain_delay_months[${i}]`, "must be non-negative");
    }
  });

  if (config.financing.rate < 0) push("financing.rate", "must be non-negative");
  if (config.financing.time_step_months <= 0) {
    push("financing.time_step_months", "must be positive");
  }

  if (config.schedule_target_months !== undefined) {
    const floor = baseline.tc0_months + baseline.ts0_months;
    if (config.schedule_target_months < floor) {
      push(
        "schedule_target_months",
        `must be at least the overrun-free duration ${floor}`,
      );
    }
  }

  for (const [key, entry] of Object.entries(config.contracts ?? {})) {
    if (!STAKEHOLDER_KEYS.has(key)) {
      push(`contracts.${key}`, `unknown stakeholder '${key}'`);
      continue;
    }
    if (key === "creditors") {
      push(
        "contracts.creditors",
        "creditors are compensated through interest, not contract profit",
      );
    }
    if (entry.we_usd <= 0) push(`contracts.${key}.we_usd`, "must be positive");
    if (!CONTRACT_TYPES.has(entry.terms.type)) {
      push(`contracts.${key}.terms.type`, `unknown contract type '${entry.terms.type}'`);
    }
  }

  return issues;
}
