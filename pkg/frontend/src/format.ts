/** Formatting helpers.
 *
 * Engine quantities are never recomputed here: `raw` serializes a payload
 * value verbatim (the golden tests compare displayed strings against the
 * service JSON), and `pct` is pure presentation for margin readouts.
 */

export function raw(value: number | string | boolean | null): string {
  return JSON.stringify(value);
}

/** Fraction -> percent readout: 0.16 -> "16%", 0.404 -> "40.40%",
 * -0.1225 -> "-12.25%", null -> "unbounded". */
export function pct(fraction: number | null): string {
  if (fraction === null) return "unbounded";
  const fixed = (fraction * 100).toFixed(2);
  const trimmed = fixed.endsWith(".00") ? fixed.slice(0, -3) : fixed;
  return `${trimmed}%`;
}

/** Escape a string for embedding in SVG/HTML text nodes and attributes. */
export function esc(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
