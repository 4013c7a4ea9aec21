import { describe, expect, it } from "vitest";

import { renderLegend } from "../src/legend.js";
import { parsePatternCss } from "../src/markers.js";
import { renderPopup } from "../src/popup.js";
import { CLASSIFY_2004, GEOMETRY, LIFE_DATASET, PATTERN_CSS_K4 } from "./fixtures.js";

const css = parsePatternCss(PATTERN_CSS_K4);

describe("renderLegend", () => {
  it("renders one row per class plus the no-data row", () => {
    const html = renderLegend(LIFE_DATASET, CLASSIFY_2004, "choropleth", css);
    expect(html.match(/legend-row/g)).toHaveLength(5);
    expect(html).toContain("no data");
    expect(html).toContain("#737373");
  });

  it("labels rows with the break bounds", () => {
    const html = renderLegend(LIFE_DATASET, CLASSIFY_2004, "choropleth", css);
    expect(html).toContain("70.0 – 72.5");
    expect(html).toContain("79.0 – 82.0");
  });

  it("uses the service stripe declarations for choriented swatches", () => {
    const html = renderLegend(LIFE_DATASET, CLASSIFY_2004, "choriented", css);
    expect(html).toContain(css.get(0)!);
    expect(html).toContain(css.get(3)!);
  });

  it("shows sized circles for graduated symbols", () => {
    const html = renderLegend(LIFE_DATASET, CLASSIFY_2004, "gsm", css);
    expect(html.match(/swatch circle/g)).toHaveLength(4);
  });
});

describe("renderPopup", () => {
  it("shows name, value and the class swatch", () => {
    const deu = GEOMETRY.features[0];
    const html = renderPopup(deu, CLASSIFY_2004, 77.1, "years");
    expect(html).toContain("Germany");
    expect(html).toContain("77.1 years");
    expect(html).toContain("#fee391"); // class 2 colour
  });

  it("falls back to the grey no-data rendering", () => {
    const nor = GEOMETRY.features[4];
    const html = renderPopup(nor, CLASSIFY_2004, null, "years");
    expect(html).toContain("Norway");
    expect(html).toContain("no data");
    expect(html).toContain("#737373");
  });
});
