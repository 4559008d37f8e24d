/** Stacked capital-cost bars: one bar per plant, baseline plus the three
 * overrun categories. Geometry is local; every displayed number is the
 * payload value verbatim (data-value attributes and tooltips). */

import { esc, raw } from "../format.js";
import type { ResultsDto } from "../types.js";

const WIDTH = 720;
const HEIGHT = 320;
const PAD = { top: 16, right: 12, bottom: 28, left: 12 };

const SEGMENTS = [
  { key: "baseline", label: "Baseline", color: "#6b7f94" },
  { key: "rework", label: "Rework", color: "#d1495b" },
  { key: "low_productivity", label: "Low productivity", color: "#edae49" },
  { key: "financing", label: "Financing", color: "#00798c" },
] as const;

export function renderStackedBars(results: ResultsDto): string {
  const plants = results.plants;
  if (plants.length === 0) return `<svg class="chart bars"></svg>`;
  const maxTci = Math.max(...plants.map((p) => p.tci_usd));
  const innerW = WIDTH - PAD.left - PAD.right;
  const innerH = HEIGHT - PAD.top - PAD.bottom;
  const slot = innerW / plants.length;
  const barW = Math.min(44, slot * 0.7);

  const pieces: string[] = [];
  plants.forEach((plant, i) => {
    const values = {
      baseline: plant.baseline_tci_usd,
      rework: plant.overruns.rework_usd,
      low_productivity: plant.overruns.low_productivity_usd,
      financing: plant.overruns.financing_usd,
    };
    const x = PAD.left + slot * i + (slot - barW) / 2;
    let yCursor = HEIGHT - PAD.bottom;
    for (const segment of SEGMENTS) {
      const value = values[segment.key];
      if (value === 0) continue;
      const h = maxTci > 0 ? (value / maxTci) * innerH : 0;
      yCursor -= h;
      pieces.push(
        `<rect class="seg seg-${segment.key}" x="${x.toFixed(2)}" ` +
          `y="${yCursor.toFixed(2)}" width="${barW.toFixed(2)}" ` +
          `height="${h.toFixed(2)}" fill="${segment.color}" ` +
          `data-plant="${plant.plant_index}" data-kind="${segment.key}" ` +
          `data-value="${esc(raw(value))}">` +
          `<title>Plant ${plant.plant_index} ${segment.label}: ` +
          `${esc(raw(value))} USD</title></rect>`,
      );
    }
    pieces.push(
      `<text class="axis" x="${(x + barW / 2).toFixed(2)}" ` +
        `y="${HEIGHT - PAD.bottom + 16}" text-anchor="middle">` +
        `${plant.plant_index}</text>`,
    );
  });

  return (
    `<svg class="chart bars" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
    `role="img" aria-label="Capital cost by plant">${pieces.join("")}</svg>`
  );
}
