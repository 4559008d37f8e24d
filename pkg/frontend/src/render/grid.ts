/** Per-stakeholder allocation-delta grid for one plant (the contract
 * comparison table). Every cell is a payload number verbatim. */

import { esc, raw } from "../format.js";
import {
  STAKEHOLDER_LABELS,
  type PlantDto,
  type StakeholderId,
} from "../types.js";

const COLUMNS = [
  ["we_usd", "Scope (WE)"],
  ["or_caused_usd", "Overruns caused"],
  ["or_received_usd", "Overruns received"],
  ["profit_cause_usd", "Profit (cause-based)"],
  ["profit_recipient_usd", "Profit (recipient-based)"],
  ["delta_usd", "Delta"],
] as const;

export function renderDeltaGrid(plant: PlantDto): string {
  const rows: string[] = [];
  for (const [stakeholder, outcome] of Object.entries(plant.contracts)) {
    const label = STAKEHOLDER_LABELS[stakeholder as StakeholderId] ?? stakeholder;
    const cells = COLUMNS.map(
      ([key]) =>
        `<td class="num" data-field="${key}" ` +
        `data-stakeholder="${esc(stakeholder)}">${esc(raw(outcome[key]))}</td>`,
    ).join("");
    const risk = outcome.flags.litigation_risk_against_causers
      ? `<span class="flag flag-risk" title="paid less under the ` +
        `recipient-based allocation; motive to recover from causers">` +
        `litigation risk</span>`
      : `<span class="flag flag-ok">aligned</span>`;
    const zone =
      outcome.flags.cause_in_zero_profit_region ||
      outcome.flags.recipient_in_zero_profit_region
        ? `<span class="flag flag-zero">zero-profit region</span>`
        : "";
    rows.push(
      `<tr><th scope="row">${esc(label)} ` +
        `<small>(${esc(outcome.terms.type)})</small></th>${cells}` +
        `<td class="flags">${risk}${zone}</td></tr>`,
    );
  }
  const header = COLUMNS.map(([, title]) => `<th>${esc(title)} USD</th>`).join("");
  return (
    `<table class="delta-grid" data-plant="${plant.plant_index}">` +
    `<thead><tr><th>Stakeholder</th>${header}<th>Flags</th></tr></thead>` +
    `<tbody>${rows.join("")}</tbody></table>`
  );
}
