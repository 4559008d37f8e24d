/** Browser wiring: fetch the bundled scenarios, render lever sliders and
 * charts, debounce re-evaluation on edits, and keep the charts gated on the
 * stale-results guard. Pure logic lives in the sibling modules; this file
 * only touches the DOM. */

import { ApiClient } from "./api.js";
import { ContractPanel } from "./contract_panel.js";
import { DEFAULT_DEBOUNCE_MS, EvaluationLoop } from "./evaluation.js";
import { pct, raw } from "./format.js";
import { renderStackedBars } from "./render/bars.js";
import { renderProfitCurve } from "./render/curve.js";
import { renderDeltaGrid } from "./render/grid.js";
import { renderAggregatePies } from "./render/pies.js";
import { renderSankey } from "./render/sankey.js";
import { SessionStore, type LeverName } from "./state.js";
import type { ContractTermsDto, ScenarioConfigDto, StakeholderId } from "./types.js";
import { CP_MIN, CP_MAX } from "./validate.js";

declare global {
  interface Window {
    OVERRUN_API_BASE?: string;
  }
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

function showError(message: string): void {
  const box = el<HTMLDivElement>("errors");
  box.textContent = message;
  box.hidden = message === "";
}

function main(): void {
  const api = new ApiClient(window.OVERRUN_API_BASE ?? "");
  const store = new SessionStore();
  const loop = new EvaluationLoop(api, store, DEFAULT_DEBOUNCE_MS, showError);
  const panel = new ContractPanel(api, (readout) => {
    el<HTMLSpanElement>("max-margin").textContent = readout.maxMargin;
    el<HTMLSpanElement>("min-margin").textContent = readout.minMargin;
    el<HTMLSpanElement>("margin-30").textContent = readout.marginAt30;
    el<HTMLDivElement>("curve").innerHTML = renderProfitCurve(readout.curve);
  }, showError);

  const leverPanel = el<HTMLDivElement>("levers");

  function renderLevers(config: ScenarioConfigDto): void {
    const rows = config.levers.per_plant
      .map((row, i) => {
        const plant = i + 1;
        const slider = (lever: LeverName, min: number, max: number, value: number) =>
          `<label>${lever}<input type="range" data-plant="${plant}" ` +
          `data-lever="${lever}" min="${min}" max="${max}" step="0.01" ` +
          `value="${value}"><span class="lever-value">${raw(value)}</span></label>`;
        return (
          `<fieldset class="plant-levers"><legend>Plant ${plant}</legend>` +
          slider("cp", CP_MIN, CP_MAX, row.cp) +
          slider("aep", 0, 1, row.aep) +
          slider("dc", 0, 1, row.dc) +
          `</fieldset>`
        );
      })
      .join("");
    leverPanel.innerHTML = rows;
  }

  leverPanel.addEventListener("input", (event) => {
    const input = event.target as HTMLInputElement;
    if (input.dataset.lever === undefined) return;
    const plant = Number(input.dataset.plant);
    const issues = store.setLever(
      input.dataset.lever as LeverName,
      plant,
      plant,
      Number(input.value),
    );
    if (issues.length > 0) {
      showError(issues.map((i) => `${i.field}: ${i.message}`).join("; "));
      return;
    }
    showError("");
    const valueLabel = input.nextElementSibling;
    if (valueLabel !== null) valueLabel.textContent = raw(Number(input.value));
    loop.configEdited();
  });

  el<HTMLInputElement>("fixed-cp").addEventListener("change", (event) => {
    store.setFixedCp((event.target as HTMLInputElement).checked);
    const config = store.activeConfig();
    if (config !== null) renderLevers(config);
    loop.configEdited();
  });

  el<HTMLSelectElement>("plant-select").addEventListener("change", (event) => {
    store.selectPlant(Number((event.target as HTMLSelectElement).value));
  });

  el<HTMLSelectElement>("stakeholder-select").addEventListener("change", (event) => {
    store.selectStakeholder((event.target as HTMLSelectElement).value as StakeholderId);
    void refreshContracts();
  });

  el<HTMLSelectElement>("contract-type").addEventListener("change", () => {
    void refreshContracts();
  });

  function draftFromControls(): ContractTermsDto {
    const kind = el<HTMLSelectElement>("contract-type").value;
    if (kind === "fixed_price") {
      return { type: "fixed_price", contingency_frac: 0.3, pm_at_contingency: 0.08 };
    }
    if (kind === "cost_plus") return { type: "cost_plus", pm: 0.08 };
    return { type: "performance_based", pm_at_zero: 0.16, zero_profit_overrun_frac: 0.6 };
  }

  async function refreshContracts(): Promise<void> {
    const results = store.lastResults();
    if (results === null || !store.resultsAreCurrent()) return;
    const plant = results.plants[store.selectedPlant - 1];
    if (plant === undefined) return;
    const outcome = plant.contracts[store.selectedStakeholder];
    if (outcome === undefined) return;
    store.setContractDraft(draftFromControls());
    await panel.applyTerms(store.contractDraft, outcome);
  }

  function renderAll(): void {
    const results = store.lastResults();
    const stale = !store.resultsAreCurrent();
    el<HTMLDivElement>("charts").classList.toggle("stale", stale);
    if (results === null || stale) return; // guard: no mismatched renders
    el<HTMLDivElement>("bars").innerHTML = renderStackedBars(results);
    el<HTMLDivElement>("pies").innerHTML = renderAggregatePies(results);
    const plant = results.plants[store.selectedPlant - 1];
    if (plant !== undefined) {
      el<HTMLDivElement>("sankey").innerHTML = renderSankey(plant);
      el<HTMLDivElement>("grid").innerHTML = renderDeltaGrid(plant);
    }
    el<HTMLSpanElement>("rate-readout").textContent = pct(
      store.activeConfig()?.financing.rate ?? null,
    );
  }

  store.subscribe(renderAll);

  el<HTMLButtonElement>("export-config").addEventListener("click", () => {
    const blob = new Blob([store.exportConfig()], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = `${store.activeConfig()?.scenario_name ?? "scenario"}.json`;
    link.click();
    URL.revokeObjectURL(link.href);
  });

  el<HTMLInputElement>("import-config").addEventListener("change", async (event) => {
    const file = (event.target as HTMLInputElement).files?.[0];
    if (file === undefined) return;
    const issues = store.importConfig(await file.text());
    if (issues.length > 0) {
      showError(issues.map((i) => `${i.field}: ${i.message}`).join("; "));
      return;
    }
    const config = store.activeConfig();
    if (config !== null) renderLevers(config);
    loop.configEdited();
    loop.flushNow();
  });

  void (async () => {
    try {
      const defaults = await api.getDefaults();
      const select = el<HTMLSelectElement>("scenario-select");
      select.innerHTML = Object.keys(defaults)
        .map((name) => `<option value="${name}">${name}</option>`)
        .join("");
      const activate = (name: string) => {
        const config = defaults[name];
        if (config === undefined) return;
        store.setConfig(structuredClone(config));
        renderLevers(config);
        const plantSelect = el<HTMLSelectElement>("plant-select");
        plantSelect.innerHTML = config.levers.per_plant
          .map((_, i) => `<option value="${i + 1}">Plant ${i + 1}</option>`)
          .join("");
        loop.configEdited();
        loop.flushNow();
      };
      select.addEventListener("change", () => activate(select.value));
      activate(select.value || Object.keys(defaults)[0]!);
    } catch (error) {
      showError(error instanceof Error ? error.message : String(error));
    }
  })();
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", main);
}
