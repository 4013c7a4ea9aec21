import { projectToPixels } from "./mercator.js";
import type { Bounds, ClassifyPayload, GeometryDoc } from "./types.js";

// Choriented-mobile markers are square HTML elements whose styling is taken
// verbatim from the service's /api/pattern.css; the client never rebuilds
// colours or angles itself.

/** Per-class declaration blocks from the service CSS, keyed by class index. */
export function parsePatternCss(cssText: string): Map<number, string> {
  const out = new Map<number, string>();
  const rule = /\.pattern-class-(\d+)\s*\{\s*([^}]*?)\s*\}/g;
  for (const m of cssText.matchAll(rule)) {
    out.set(Number(m[1]), m[2]);
  }
  return out;
}

export interface MarkerSpec {
  country: string;
  x: number;
  y: number;
  /** Verbatim CSS declaration from the service (size + striped background). */
  styleText: string;
  classIndex: number;
}

export function buildMarkers(
  geometry: GeometryDoc,
  classify: ClassifyPayload,
  patternCss: Map<number, string>,
  bounds: Bounds,
  widthPx: number,
  heightPx: number,
): MarkerSpec[] {
  const specs: MarkerSpec[] = [];
  for (const feature of geometry.features) {
    const country = feature.properties.ISO3;
    const classIndex = classify.classes[country];
    if (classIndex === null || classIndex === undefined) continue; // missing data: grey polygon only
    const styleText = patternCss.get(classIndex);
    if (styleText === undefined) continue;
    const [x, y] = projectToPixels(feature.properties.anchorLonLat, bounds, widthPx, heightPx);
    specs.push({ country, x, y, styleText, classIndex });
  }
  specs.sort((a, b) => (a.country < b.country ? -1 : a.country > b.country ? 1 : 0));
  return specs;
}

export function markerHtml(spec: MarkerSpec): string {
  // The service declaration carries width/height; position is overlay math.
  const pos = `position: absolute; left: ${spec.x.toFixed(1)}px; top: ${spec.y.toFixed(1)}px; transform: translate(-50%, -50%);`;
  return `<div class="mobile-marker" data-country="${spec.country}" style="${pos} ${spec.styleText}"></div>`;
}
