/** Profit-vs-overrun curve with the cause/recipient markers, from the curve
 * endpoint payload. Marker readouts are payload numbers verbatim. */

import { esc, raw } from "../format.js";
import type { CurveDto } from "../types.js";

const WIDTH = 720;
const HEIGHT = 300;
const PAD = { top: 14, right: 16, bottom: 24, left: 16 };

export function renderProfitCurve(curve: CurveDto): string {
  const samples = curve.samples;
  if (samples.length === 0) return `<svg class="chart curve"></svg>`;
  const xs = samples.map((s) => s.overrun_usd);
  const ys = samples.map((s) => s.profit_usd).concat([0]);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const yMin = Math.min(...ys);
  const yMax = Math.max(...ys);
  const innerW = WIDTH - PAD.left - PAD.right;
  const innerH = HEIGHT - PAD.top - PAD.bottom;
  const px = (x: number) =>
    PAD.left + (xMax > xMin ? ((x - xMin) / (xMax - xMin)) * innerW : 0);
  const py = (y: number) =>
    PAD.top + (yMax > yMin ? ((yMax - y) / (yMax - yMin)) * innerH : innerH / 2);

  const pieces: string[] = [];
  pieces.push(
    `<line class="zero" x1="${PAD.left}" y1="${py(0).toFixed(2)}" ` +
      `x2="${WIDTH - PAD.right}" y2="${py(0).toFixed(2)}" stroke="#aaa" ` +
      `stroke-dasharray="4 3"/>`,
  );
  const points = samples
    .map((s) => `${px(s.overrun_usd).toFixed(2)},${py(s.profit_usd).toFixed(2)}`)
    .join(" ");
  pieces.push(
    `<polyline class="profit" points="${points}" fill="none" ` +
      `stroke="#30638e" stroke-width="2.5"/>`,
  );

  const marker = (
    kind: "cause" | "recipient",
    color: string,
    point: { overrun_usd: number; profit_usd: number },
  ) =>
    `<circle class="marker marker-${kind}" cx="${px(point.overrun_usd).toFixed(2)}" ` +
    `cy="${py(point.profit_usd).toFixed(2)}" r="6" fill="${color}" ` +
    `data-kind="${kind}" data-overrun="${esc(raw(point.overrun_usd))}" ` +
    `data-profit="${esc(raw(point.profit_usd))}">` +
    `<title>${kind === "cause" ? "Caused" : "Received"} overrun ` +
    `${esc(raw(point.overrun_usd))} USD → profit ` +
    `${esc(raw(point.profit_usd))} USD</title></circle>`;
  pieces.push(marker("cause", "#5ca85c", curve.cause_point));
  pieces.push(marker("recipient", "#c0392b", curve.recipient_point));

  return (
    `<svg class="chart curve" viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" ` +
    `aria-label="Profit versus overrun">${pieces.join("")}</svg>`
  );
}
