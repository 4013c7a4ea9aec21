import type { ClassifyPayload, GeometryFeature } from "./types.js";

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

/**
 * Popup body at a country's anchor: name, value line and the class swatch.
 * Values and classes come from the classify payload; nothing is derived here.
 */
export function renderPopup(
  feature: GeometryFeature,
  classify: ClassifyPayload,
  value: number | null,
  unit: string,
): string {
  const name = esc(feature.properties.NAME);
  const classIndex = classify.classes[feature.properties.ISO3];
  let detail: string;
  let swatch = "";
  if (value === null || classIndex === null || classIndex === undefined) {
    detail = "no data";
    swatch = `<span class="swatch" style="background: #${classify.palette.missingHex};"></span>`;
  } else {
    detail = `${value} ${esc(unit)}`;
    swatch = `<span class="swatch" style="background: #${classify.palette.entries[classIndex].hex};"></span>`;
  }
  return `<div class="popup-name">${name}</div><div class="popup-detail">${swatch}${detail}</div>`;
}
