import type { Bounds } from "./types.js";

// Mirror of the server's viewport projection, used only to position HTML
// overlays (markers, popups) on top of the server-rendered SVG. The bounds
// come verbatim from the SVG's data-bounds attribute.

function mercY(latDeg: number): number {
  return Math.log(Math.tan(Math.PI / 4 + (latDeg * Math.PI) / 360));
}

export function projectToPixels(
  lonLat: [number, number],
  bounds: Bounds,
  widthPx: number,
  heightPx: number,
): [number, number] {
  const [lonMin, latMin, lonMax, latMax] = bounds;
  const [lon, lat] = lonLat;
  const top = mercY(latMax);
  const bottom = mercY(latMin);
  const x = ((lon - lonMin) / (lonMax - lonMin)) * widthPx;
  const y = ((top - mercY(lat)) / (top - bottom)) * heightPx;
  return [x, y];
}

export function parseBounds(svgMarkup: string): Bounds | null {
  const m = svgMarkup.match(/data-bounds="([^"]+)"/);
  if (!m) return null;
  const parts = m[1].split(",").map(Number);
  if (parts.length !== 4 || parts.some((v) => !Number.isFinite(v))) return null;
  return parts as unknown as Bounds;
}
