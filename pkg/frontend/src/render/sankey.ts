/** Three-column sankey (causers -> overrun types -> recipients) for one
 * plant, straight from the payload's link lists. Ribbon thickness is
 * geometry; ribbon values are payload numbers verbatim. The per-type node
 * balance is a payload invariant, not something recomputed here. */

import { esc, raw } from "../format.js";
import {
  COST_TYPE_LABELS,
  STAKEHOLDER_LABELS,
  type CostTypeId,
  type PlantDto,
  type SankeyLinkDto,
  type StakeholderId,
} from "../types.js";

const WIDTH = 760;
const HEIGHT = 360;
const COL_X = [10, 330, 650];
const NODE_W = 14;
const PAD_Y = 10;
const GAP = 8;

const TYPE_COLORS: Record<string, string> = {
  rework: "#d1495b",
  low_productivity: "#edae49",
  financing: "#00798c",
};

interface NodeLayout {
  y0: number;
  y1: number;
  cursorOut: number;
  cursorIn: number;
}

function layoutColumn(
  ids: string[],
  weights: Map<string, number>,
  scale: number,
): Map<string, NodeLayout> {
  const layout = new Map<string, NodeLayout>();
  let y = PAD_Y;
  for (const id of ids) {
    const weight = weights.get(id) ?? 0;
    if (weight <= 0) continue;
    const h = weight * scale;
    layout.set(id, { y0: y, y1: y + h, cursorOut: y, cursorIn: y });
    y += h + GAP;
  }
  return layout;
}

function ribbon(
  x0: number,
  y0: number,
  x1: number,
  y1: number,
  thickness: number,
): string {
  const mid = (x0 + x1) / 2;
  return (
    `M ${x0} ${y0} C ${mid} ${y0}, ${mid} ${y1}, ${x1} ${y1} ` +
    `L ${x1} ${y1 + thickness} C ${mid} ${y1 + thickness}, ${mid} ` +
    `${y0 + thickness}, ${x0} ${y0 + thickness} Z`
  );
}

export function renderSankey(plant: PlantDto): string {
  const left = plant.sankey.causer_to_type;
  const right = plant.sankey.type_to_recipient;
  if (left.length === 0 && right.length === 0) {
    return (
      `<svg class="chart sankey" viewBox="0 0 ${WIDTH} ${HEIGHT}">` +
      `<text x="${WIDTH / 2}" y="${HEIGHT / 2}" text-anchor="middle" ` +
      `class="axis">no overruns for plant ${plant.plant_index}</text></svg>`
    );
  }

  const causerWeight = new Map<string, number>();
  const typeWeight = new Map<string, number>();
  const recipientWeight = new Map<string, number>();
  for (const link of left) {
    causerWeight.set(link.source, (causerWeight.get(link.source) ?? 0) + link.value_usd);
    typeWeight.set(link.target, (typeWeight.get(link.target) ?? 0) + link.value_usd);
  }
  for (const link of right) {
    recipientWeight.set(
      link.target,
      (recipientWeight.get(link.target) ?? 0) + link.value_usd,
    );
  }

  const causerIds = Object.keys(STAKEHOLDER_LABELS);
  const typeIds = Object.keys(COST_TYPE_LABELS);
  const columnTotal = (weights: Map<string, number>, ids: string[]) =>
    ids.reduce((acc, id) => acc + (weights.get(id) ?? 0), 0);
  const maxTotal = Math.max(
    columnTotal(causerWeight, causerIds),
    columnTotal(typeWeight, typeIds),
    columnTotal(recipientWeight, causerIds),
  );
  const usable = HEIGHT - 2 * PAD_Y - GAP * 3;
  const scale = maxTotal > 0 ? usable / maxTotal : 0;

  const causers = layoutColumn(causerIds, causerWeight, scale);
  const types = layoutColumn(typeIds, typeWeight, scale);
  const recipients = layoutColumn(causerIds, recipientWeight, scale);

  const pieces: string[] = [];
  const drawLinks = (
    links: SankeyLinkDto[],
    from: Map<string, NodeLayout>,
    to: Map<string, NodeLayout>,
    x0: number,
    x1: number,
    colorOf: (link: SankeyLinkDto) => string,
    labelOf: (link: SankeyLinkDto) => string,
  ) => {
    for (const link of links) {
      const a = from.get(link.source);
      const b = to.get(link.target);
      if (a === undefined || b === undefined) continue;
      const thickness = link.value_usd * scale;
      const path = ribbon(x0, a.cursorOut, x1, b.cursorIn, thickness);
      a.cursorOut += thickness;
      b.cursorIn += thickness;
      pieces.push(
        `<path class="ribbon" d="${path}" fill="${colorOf(link)}" ` +
          `fill-opacity="0.55" data-source="${esc(link.source)}" ` +
          `data-target="${esc(link.target)}" ` +
          `data-value="${esc(raw(link.value_usd))}">` +
          `<title>${labelOf(link)}: ${esc(raw(link.value_usd))} USD</title></path>`,
      );
    }
  };

  drawLinks(
    left,
    causers,
    types,
    COL_X[0]! + NODE_W,
    COL_X[1]!,
    (link) => TYPE_COLORS[link.target] ?? "#888",
    (link) =>
      `${esc(STAKEHOLDER_LABELS[link.source as StakeholderId])} → ` +
      `${esc(COST_TYPE_LABELS[link.target as CostTypeId])}`,
  );
  drawLinks(
    right,
    types,
    recipients,
    COL_X[1]! + NODE_W,
    COL_X[2]!,
    (link) => TYPE_COLORS[link.source] ?? "#888",
    (link) =>
      `${esc(COST_TYPE_LABELS[link.source as CostTypeId])} → ` +
      `${esc(STAKEHOLDER_LABELS[link.target as StakeholderId])}`,
  );

  const drawNodes = (
    layout: Map<string, NodeLayout>,
    x: number,
    labels: Record<string, string>,
    anchorEnd: boolean,
  ) => {
    for (const [id, node] of layout) {
      pieces.push(
        `<rect class="node" x="${x}" y="${node.y0.toFixed(2)}" ` +
          `width="${NODE_W}" height="${(node.y1 - node.y0).toFixed(2)}" ` +
          `fill="#3c4758" data-node="${esc(id)}"/>`,
      );
      const tx = anchorEnd ? x - 4 : x + NODE_W + 4;
      pieces.push(
        `<text class="node-label" x="${tx}" ` +
          `y="${((node.y0 + node.y1) / 2).toFixed(2)}" dominant-baseline="middle" ` +
          `text-anchor="${anchorEnd ? "end" : "start"}">${esc(labels[id] ?? id)}</text>`,
      );
    }
  };
  drawNodes(causers, COL_X[0]!, STAKEHOLDER_LABELS, false);
  drawNodes(types, COL_X[1]!, COST_TYPE_LABELS, false);
  drawNodes(recipients, COL_X[2]!, STAKEHOLDER_LABELS, true);

  return (
    `<svg class="chart sankey" viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" ` +
    `aria-label="Overrun flows for plant ${plant.plant_index}">` +
    `${pieces.join("")}</svg>`
  );
}
