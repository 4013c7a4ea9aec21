import type { ClassifyPayload, DatasetInfo, MapType } from "./types.js";

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

function label(lo: number, hi: number): string {
  return `${lo.toFixed(1)} – ${hi.toFixed(1)}`;
}

/**
 * Legend rows from the service classification payload: colour swatches for
 * choropleth, sized circles for gsm, striped squares (via the service CSS)
 * for the choriented types, plus a grey "no data" row.
 */
export function renderLegend(
  dataset: DatasetInfo,
  classify: ClassifyPayload,
  mapType: MapType,
  patternCss: Map<number, string>,
): string {
  const rows: string[] = [];
  const darkest = classify.palette.entries[classify.palette.entries.length - 1];
  classify.breaks.bounds.forEach(([lo, hi], i) => {
    let swatch: string;
    if (mapType === "gsm") {
      const r = 3 + classify.styles[i].radiusPx * 0.25;
      swatch = `<span class="swatch circle" style="width: ${2 * r}px; height: ${2 * r}px; background: #${darkest.hex};"></span>`;
    } else if (mapType === "choriented" || mapType === "choriented-mobile") {
      const css = patternCss.get(i) ?? `background: #${classify.palette.entries[i].hex};`;
      swatch = `<span class="swatch striped" style="${css}"></span>`;
    } else {
      swatch = `<span class="swatch" style="background: #${classify.palette.entries[i].hex};"></span>`;
    }
    rows.push(`<div class="legend-row">${swatch}<span class="legend-label">${label(lo, hi)}</span></div>`);
  });
  rows.push(
    `<div class="legend-row"><span class="swatch" style="background: #${classify.palette.missingHex};"></span>` +
      `<span class="legend-label">no data</span></div>`,
  );
  const title = `${esc(dataset.indicator)} (${esc(dataset.unit)})`;
  return `<div class="legend-title">${title}</div>${rows.join("")}`;
}
