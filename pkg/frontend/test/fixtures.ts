import type { ClassifyPayload, DatasetInfo, GeometryDoc } from "../src/types.js";

// Byte-exact copy of the service's GET /api/pattern.css?k=4 response.
export const PATTERN_CSS_K4 =
  ".pattern-class-0 { width: 30px; height: 30px; background: repeating-linear-gradient(0deg, #ffffe5, #ffffe5 20px, black 20px, black 40px); }\n" +
  ".pattern-class-1 { width: 30px; height: 30px; background: repeating-linear-gradient(45deg, #fff7bc, #fff7bc 20px, black 20px, black 40px); }\n" +
  ".pattern-class-2 { width: 30px; height: 30px; background: repeating-linear-gradient(90deg, #fee391, #fee391 20px, black 20px, black 40px); }\n" +
  ".pattern-class-3 { width: 30px; height: 30px; background: repeating-linear-gradient(135deg, #fec44f, #fec44f 20px, black 20px, black 40px); }\n";

export const LIFE_DATASET: DatasetInfo = {
  id: "sdg3_life_expectancy",
  goal: 3,
  indicator: "Life expectancy at birth",
  unit: "years",
  years: Array.from({ length: 19 }, (_, i) => 2000 + i), // 2000..2018
};

export const POVERTY_DATASET: DatasetInfo = {
  id: "sdg1_poverty_risk",
  goal: 1,
  indicator: "People at risk of poverty or social exclusion",
  unit: "%",
  years: Array.from({ length: 14 }, (_, i) => 2005 + i),
};

export const CLASSIFY_2004: ClassifyPayload = {
  dataset: "sdg3_life_expectancy",
  year: 2004,
  breaks: {
    k: 4,
    bounds: [
      [70.0, 72.5],
      [73.0, 75.5],
      [76.0, 78.5],
      [79.0, 82.0],
    ],
    gvf: 0.95,
  },
  classes: { DEU: 2, FRA: 3, FIN: 1, SWE: 0, NOR: null },
  values: { DEU: 77.1, FRA: 80.2, FIN: 74.4, SWE: 71.0, NOR: null },
  palette: {
    k: 4,
    entries: [
      { hex: "ffffe5", lab: { L: 99.39, a: -4.33, b: 12.44 } },
      { hex: "fff7bc", lab: { L: 96.58, a: -6.24, b: 29.4 } },
      { hex: "fee391", lab: { L: 90.81, a: -1.53, b: 43.36 } },
      { hex: "fec44f", lab: { L: 82.44, a: 9.37, b: 64.35 } },
    ],
    missingHex: "737373",
  },
  styles: [0, 45, 90, 135].map((angle, i) => ({
    classIndex: i,
    fillHex: ["ffffe5", "fff7bc", "fee391", "fec44f"][i],
    angleDeg: angle,
    stripeOnPx: 20,
    stripeOffPx: 20,
    lineHex: "000000",
    radiusPx: [6, 12, 18, 24][i],
    markerPx: 30,
  })),
};

export const GEOMETRY: GeometryDoc = {
  type: "FeatureCollection",
  features: [
    { type: "Feature", properties: { ISO3: "DEU", NAME: "Germany", anchorLonLat: [10.2, 51.1] }, geometry: {} },
    { type: "Feature", properties: { ISO3: "FRA", NAME: "France", anchorLonLat: [2.4, 46.5] }, geometry: {} },
    { type: "Feature", properties: { ISO3: "FIN", NAME: "Finland", anchorLonLat: [26.1, 63.9] }, geometry: {} },
    { type: "Feature", properties: { ISO3: "SWE", NAME: "Sweden", anchorLonLat: [15.4, 62.0] }, geometry: {} },
    { type: "Feature", properties: { ISO3: "NOR", NAME: "Norway", anchorLonLat: [8.9, 61.4] }, geometry: {} },
  ],
};

export const SVG_WITH_BOUNDS =
  '<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600" viewBox="0 0 800 600" ' +
  'data-bounds="-9.92,37.90,28.60,65.81"><g id="features"></g></svg>';
