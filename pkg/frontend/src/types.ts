// Payload shapes of the map service API. The client never derives domain
// values itself; everything below arrives from the server.

export type MapType = "choropleth" | "gsm" | "choriented" | "choriented-mobile";

export const MAP_TYPES: MapType[] = ["choropleth", "gsm", "choriented", "choriented-mobile"];

export interface DatasetInfo {
  id: string;
  goal: number;
  indicator: string;
  unit: string;
  years: number[];
}

export interface BreaksPayload {
  k: number;
  bounds: [number, number][];
  gvf: number;
}

export interface PaletteEntryPayload {
  hex: string;
  lab: { L: number; a: number; b: number };
}

export interface PalettePayload {
  k: number;
  entries: PaletteEntryPayload[];
  missingHex: string;
}

export interface ClassStylePayload {
  classIndex: number;
  fillHex: string;
  angleDeg: number;
  stripeOnPx: number;
  stripeOffPx: number;
  lineHex: string;
  radiusPx: number;
  markerPx: number;
}

export interface ClassifyPayload {
  dataset: string;
  year: number;
  breaks: BreaksPayload;
  classes: Record<string, number | null>;
  values: Record<string, number | null>;
  palette: PalettePayload;
  styles: ClassStylePayload[];
}

export interface GeometryFeature {
  type: "Feature";
  properties: { ISO3: string; NAME: string; anchorLonLat: [number, number] };
  geometry: unknown;
}

export interface GeometryDoc {
  type: "FeatureCollection";
  features: GeometryFeature[];
}

/** lonMin, latMin, lonMax, latMax as exposed by the SVG data-bounds attribute. */
export type Bounds = [number, number, number, number];
