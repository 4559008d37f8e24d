/** Aggregate overrun pies from the payload's aggregate grids.
 *
 * Every slice is one ledger cell (party x overrun type), so every displayed
 * number is a payload field verbatim; grouping is expressed by hue (one hue
 * per party or type, shaded per sub-slice). Slice angles are geometry.
 */

import { esc, raw } from "../format.js";
import {
  COST_TYPES,
  COST_TYPE_LABELS,
  STAKEHOLDERS,
  STAKEHOLDER_LABELS,
  type ResultsDto,
} from "../types.js";

const GROUP_COLORS = ["#d1495b", "#edae49", "#00798c", "#6b7f94", "#30638e"];
const SHADE = [1.0, 0.78, 0.58];
const R = 70;
const SIZE = 2 * R + 20;

interface Slice {
  group: string;
  label: string;
  value: number;
  color: string;
}

function shade(hex: string, factor: number): string {
  const n = parseInt(hex.slice(1), 16);
  const mix = (channel: number) => Math.round(channel * factor + 255 * (1 - factor) * 0.25);
  const r = Math.min(255, mix((n >> 16) & 0xff));
  const g = Math.min(255, mix((n >> 8) & 0xff));
  const b = Math.min(255, mix(n & 0xff));
  return `#${((r << 16) | (g << 8) | b).toString(16).padStart(6, "0")}`;
}

function arcPath(startFrac: number, endFrac: number): string {
  const a0 = 2 * Math.PI * startFrac - Math.PI / 2;
  const a1 = 2 * Math.PI * endFrac - Math.PI / 2;
  const cx = SIZE / 2;
  const cy = SIZE / 2;
  const x0 = cx + R * Math.cos(a0);
  const y0 = cy + R * Math.sin(a0);
  const x1 = cx + R * Math.cos(a1);
  const y1 = cy + R * Math.sin(a1);
  const large = endFrac - startFrac > 0.5 ? 1 : 0;
  return (
    `M ${cx.toFixed(2)} ${cy.toFixed(2)} L ${x0.toFixed(2)} ${y0.toFixed(2)} ` +
    `A ${R} ${R} 0 ${large} 1 ${x1.toFixed(2)} ${y1.toFixed(2)} Z`
  );
}

function pie(title: string, slices: Slice[]): string {
  const total = slices.reduce((acc, s) => acc + s.value, 0);
  const pieces: string[] = [];
  if (total <= 0) {
    pieces.push(`<circle cx="${SIZE / 2}" cy="${SIZE / 2}" r="${R}" fill="#eee"/>`);
  } else {
    let cursor = 0;
    for (const slice of slices) {
      if (slice.value <= 0) continue;
      const next = cursor + slice.value / total;
      const path =
        slice.value >= total
          ? `M ${SIZE / 2 - R} ${SIZE / 2} A ${R} ${R} 0 1 1 ${SIZE / 2 + R} ` +
            `${SIZE / 2} A ${R} ${R} 0 1 1 ${SIZE / 2 - R} ${SIZE / 2} Z`
          : arcPath(cursor, next);
      pieces.push(
        `<path class="slice" d="${path}" fill="${slice.color}" ` +
          `data-key="${esc(slice.group)}" data-value="${esc(raw(slice.value))}">` +
          `<title>${esc(slice.label)}: ${esc(raw(slice.value))} USD</title></path>`,
      );
      cursor = next;
    }
  }
  return (
    `<figure class="pie"><svg viewBox="0 0 ${SIZE} ${SIZE}" role="img" ` +
    `aria-label="${esc(title)}">${pieces.join("")}</svg>` +
    `<figcaption>${esc(title)}</figcaption></figure>`
  );
}

export function renderAggregatePies(results: ResultsDto): string {
  const aggregate = results.aggregate;
  if (aggregate === undefined) return `<div class="pies"></div>`;

  const byType: Slice[] = [];
  COST_TYPES.forEach((t, ti) => {
    STAKEHOLDERS.forEach((s, si) => {
      byType.push({
        group: t,
        label: `${COST_TYPE_LABELS[t]} · caused by ${STAKEHOLDER_LABELS[s]}`,
        value: aggregate.cost_by_causer_and_type[s][t],
        color: shade(GROUP_COLORS[ti % GROUP_COLORS.length]!, SHADE[si % SHADE.length]!),
      });
    });
  });
  const byCauser: Slice[] = [];
  STAKEHOLDERS.forEach((s, si) => {
    COST_TYPES.forEach((t, ti) => {
      byCauser.push({
        group: s,
        label: `${STAKEHOLDER_LABELS[s]} · ${COST_TYPE_LABELS[t]}`,
        value: aggregate.cost_by_causer_and_type[s][t],
        color: shade(GROUP_COLORS[si % GROUP_COLORS.length]!, SHADE[ti % SHADE.length]!),
      });
    });
  });
  const byRecipient: Slice[] = [];
  STAKEHOLDERS.forEach((s, si) => {
    COST_TYPES.forEach((t, ti) => {
      byRecipient.push({
        group: s,
        label: `${STAKEHOLDER_LABELS[s]} · ${COST_TYPE_LABELS[t]} received`,
        value: aggregate.cost_by_type_and_recipient[t][s],
        color: shade(GROUP_COLORS[si % GROUP_COLORS.length]!, SHADE[ti % SHADE.length]!),
      });
    });
  });

  return (
    `<div class="pies">${pie("Overruns by type", byType)}` +
    `${pie("Overruns by causer", byCauser)}` +
    `${pie("Overruns by recipient", byRecipient)}</div>`
  );
}
