/** DTOs mirroring the scenario service JSON, field for field. */

export type StakeholderId =
  | "construction_subcontractors"
  | "equipment_suppliers"
  | "design_and_management"
  | "creditors";

export type CostTypeId = "rework" | "low_productivity" | "financing";
export type ScheduleTypeId = "rework" | "low_productivity" | "supply_chain_delay";

export const STAKEHOLDERS: readonly StakeholderId[] = [
  "construction_subcontractors",
  "equipment_suppliers",
  "design_and_management",
  "creditors",
];

export const COST_TYPES: readonly CostTypeId[] = [
  "rework",
  "low_productivity",
  "financing",
];

export const STAKEHOLDER_LABELS: Record<StakeholderId, string> = {
  construction_subcontractors: "Construction Subcontractors",
  equipment_suppliers: "Equipment Suppliers",
  design_and_management: "Design & Management",
  creditors: "Creditors",
};

export const COST_TYPE_LABELS: Record<CostTypeId, string> = {
  rework: "Rework",
  low_productivity: "Low Productivity",
  financing: "Financing",
};

export interface LeverRow {
  cp: number;
  aep: number;
  dc: number;
}

export interface MatrixRow {
  category: string;
  hours_per_week: number;
  construction_subcontractors: number;
  design_and_management: number;
  equipment_suppliers: number;
}

export interface ContractTermsDto {
  type: "performance_based" | "fixed_price" | "cost_plus";
  pm_at_zero?: number;
  zero_profit_overrun_frac?: number;
  contingency_frac?: number;
  pm_at_contingency?: number;
  pm?: number;
}

export interface ContractEntryDto {
  we_usd: number;
  terms: ContractTermsDto;
}

export interface ScenarioConfigDto {
  scenario_name: string;
  n_plants: number;
  baseline: {
    plant_capacity_kwe: number;
    tc0_months: number;
    ts0_months: number;
    indirect_subcontractor_share: number;
    occ0_usd_per_kwe: Record<string, Record<string, number> | number>;
  };
  levers: { per_plant: LeverRow[] };
  overrun_model: {
    rework_slope_construction: number;
    rework_slope_architect_engineer: number;
    rework_slope_design_completion: number;
    low_productivity_scale: number;
    schedule_months_per_relative_cost: number;
    supply_chain_delay_months: number[];
  };
  financing: { rate: number; time_step_months: number };
  responsibility_matrix: { categories: MatrixRow[] } | { file: string };
  contracts: Record<string, ContractEntryDto>;
  responsibility_point_override?: Record<string, number>;
  schedule_target_months?: number;
}

export interface SankeyLinkDto {
  source: string;
  target: string;
  value_usd: number;
}

export interface LitigationFlagsDto {
  delta_usd: number;
  delta_sign: number;
  cause_in_zero_profit_region: boolean;
  recipient_in_zero_profit_region: boolean;
  slope_sign_at_recipient: number;
  litigation_risk_against_causers: boolean;
}

export interface ContractOutcomeDto {
  terms: ContractTermsDto;
  we_usd: number;
  or_caused_usd: number;
  or_received_usd: number;
  profit_cause_usd: number;
  profit_recipient_usd: number;
  delta_usd: number;
  flags: LitigationFlagsDto;
}

export interface PlantDto {
  plant_index: number;
  baseline_occ_usd: number;
  baseline_tci_usd: number;
  tci_usd: number;
  overruns: {
    rework_usd: number;
    low_productivity_usd: number;
    financing_usd: number;
    total_usd: number;
  };
  schedule_months: {
    baseline_construction: number;
    construction_overrun: number;
    startup: number;
    total: number;
    overrun_by_category: Record<ScheduleTypeId, number>;
  };
  attribution: {
    cost_by_causer_and_type: Record<StakeholderId, Record<CostTypeId, number>>;
    cost_by_type_and_recipient: Record<CostTypeId, Record<StakeholderId, number>>;
    schedule_by_causer_and_type: Record<StakeholderId, Record<ScheduleTypeId, number>>;
  };
  sankey: {
    causer_to_type: SankeyLinkDto[];
    type_to_recipient: SankeyLinkDto[];
  };
  contracts: Record<string, ContractOutcomeDto>;
}

export interface ResultsDto {
  scenario_name: string;
  plant_capacity_kwe: number;
  currency: string;
  plants: PlantDto[];
  aggregate?: {
    cost_by_causer_and_type: Record<StakeholderId, Record<CostTypeId, number>>;
    cost_by_type_and_recipient: Record<CostTypeId, Record<StakeholderId, number>>;
    schedule_by_causer_and_type: Record<StakeholderId, Record<ScheduleTypeId, number>>;
    total_cost_overrun_usd: number;
  };
}

export interface CurvePointDto {
  overrun_usd: number;
  profit_usd: number;
}

export interface CurveDto {
  samples: CurvePointDto[];
  cause_point: CurvePointDto;
  recipient_point: CurvePointDto;
  summary: {
    margin_at_zero: number;
    margin_at_30pct: number;
    margin_at_60pct: number;
    max_margin: number;
    min_margin: number | null; // null = unbounded below
  };
}

export interface RateRequestDto {
  occ_usd: number;
  cfin_usd: number;
  tc_months: number;
  ts_months: number;
  time_step_months?: number;
}

export interface CurveRequestDto {
  terms: ContractTermsDto;
  we_usd: number;
  scope: { or_caused_usd: number; or_received_usd: number };
  or_max_usd?: number;
  n?: number;
}
