/** Session state: the active config, the last results, selections, and the
 * contract draft. Results carry the serialized config they were computed
 * from; rendering is blocked whenever that tag no longer matches the active
 * config (the stale-results guard). */

import type {
  ContractTermsDto,
  LeverRow,
  ResultsDto,
  ScenarioConfigDto,
  StakeholderId,
} from "./types.js";
import { CP_MIN, validateConfig, type ValidationIssue } from "./validate.js";

export type LeverName = keyof LeverRow;

export class SessionStore {
  private config: ScenarioConfigDto | null = null;
  private results: ResultsDto | null = null;
  private resultsTag: string | null = null;
  private stashedCp: number[] | null = null; // pre-toggle values, for restore
  selectedPlant = 1;
  selectedStakeholder: StakeholderId = "equipment_suppliers";
  contractDraft: ContractTermsDto = {
    type: "performance_based",
    pm_at_zero: 0.16,
    zero_profit_overrun_frac: 0.6,
  };
  private listeners: Array<() => void> = [];

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  configTag(): string {
    return JSON.stringify(this.config);
  }

  activeConfig(): ScenarioConfigDto | null {
    return this.config;
  }

  lastResults(): ResultsDto | null {
    return this.results;
  }

  setConfig(config: ScenarioConfigDto): ValidationIssue[] {
    const issues = validateConfig(config);
    if (issues.length > 0) return issues;
    this.config = config;
    this.stashedCp = null;
    this.selectedPlant = Math.min(this.selectedPlant, config.n_plants);
    this.notify();
    return [];
  }

  /** Results are only accepted for the config they were computed from. */
  acceptResults(forTag: string, results: ResultsDto): boolean {
    if (forTag !== this.configTag()) return false; // superseded
    this.results = results;
    this.resultsTag = forTag;
    this.notify();
    return true;
  }

  /** Stale-results guard: charts may render only when this holds. */
  resultsAreCurrent(): boolean {
    return this.results !== null && this.resultsTag === this.configTag();
  }

  selectPlant(plantIndex: number): void {
    if (this.config === null) return;
    this.selectedPlant = Math.min(Math.max(1, plantIndex), this.config.n_plants);
    this.notify();
  }

  selectStakeholder(stakeholder: StakeholderId): void {
    this.selectedStakeholder = stakeholder;
    this.notify();
  }

  setContractDraft(terms: ContractTermsDto): void {
    this.contractDraft = terms;
    this.notify();
  }

  /** Set one lever over a 1-based inclusive plant range. Returns validation
   * issues (and leaves the config untouched) if the edit is out of range. */
  setLever(
    lever: LeverName,
    firstPlant: number,
    lastPlant: number,
    value: number,
  ): ValidationIssue[] {
    if (this.config === null) return [{ field: "config", message: "no active config" }];
    const edited: ScenarioConfigDto = structuredClone(this.config);
    for (let plant = firstPlant; plant <= lastPlant; plant += 1) {
      const row = edited.levers.per_plant[plant - 1];
      if (row === undefined) {
        return [
          { field: "levers.per_plant", message: `plant ${plant} outside series` },
        ];
      }
      row[lever] = value;
    }
    const issues = validateConfig(edited);
    if (issues.length > 0) return issues;
    this.config = edited;
    this.notify();
    return [];
  }

  fixedCpActive(): boolean {
    return this.stashedCp !== null;
  }

  /** Pin construction proficiency at its minimum across all plants; toggling
   * off restores the values from before the toggle. */
  setFixedCp(active: boolean): void {
    if (this.config === null) return;
    if (active && this.stashedCp === null) {
      this.stashedCp = this.config.levers.per_plant.map((row) => row.cp);
      const edited = structuredClone(this.config);
      for (const row of edited.levers.per_plant) row.cp = CP_MIN;
      this.config = edited;
      this.notify();
    } else if (!active && this.stashedCp !== null) {
      const edited = structuredClone(this.config);
      edited.levers.per_plant.forEach((row, i) => {
        row.cp = this.stashedCp![i] ?? row.cp;
      });
      this.stashedCp = null;
      this.config = edited;
      this.notify();
    }
  }

  /** Round-trip export/import: the exported document re-imports to an
   * identical config (and therefore identical charts). */
  exportConfig(): string {
    return JSON.stringify(this.config, null, 2);
  }

  importConfig(text: string): ValidationIssue[] {
    let parsed: ScenarioConfigDto;
    try {
      parsed = JSON.parse(text) as ScenarioConfigDto;
    } catch (error) {
      return [{ field: "config", message: `not valid JSON: ${String(error)}` }];
    }
    return this.setConfig(parsed);
  }
}
