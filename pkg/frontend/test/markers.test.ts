import { describe, expect, it } from "vitest";

import { buildMarkers, markerHtml, parsePatternCss } from "../src/markers.js";
import { parseBounds, projectToPixels } from "../src/mercator.js";
import { CLASSIFY_2004, GEOMETRY, PATTERN_CSS_K4, SVG_WITH_BOUNDS } from "./fixtures.js";

describe("parsePatternCss", () => {
  it("extracts one declaration block per class", () => {
    const css = parsePatternCss(PATTERN_CSS_K4);
    expect([...css.keys()]).toEqual([0, 1, 2, 3]);
  });

  it("keeps the service declaration byte-for-byte", () => {
    const css = parsePatternCss(PATTERN_CSS_K4);
    expect(css.get(2)).toBe(
      "width: 30px; height: 30px; background: repeating-linear-gradient(90deg, #fee391, #fee391 20px, black 20px, black 40px);",
    );
  });
});

describe("buildMarkers", () => {
  const bounds = parseBounds(SVG_WITH_BOUNDS)!;
  const css = parsePatternCss(PATTERN_CSS_K4);

  it("creates one marker per country with data, none for missing", () => {
    const specs = buildMarkers(GEOMETRY, CLASSIFY_2004, css, bounds, 800, 600);
    expect(specs.map((s) => s.country)).toEqual(["DEU", "FIN", "FRA", "SWE"]);
    expect(specs.find((s) => s.country === "NOR")).toBeUndefined();
  });

  it("applies the service CSS string verbatim to the marker element", () => {
    const specs = buildMarkers(GEOMETRY, CLASSIFY_2004, css, bounds, 800, 600);
    const deu = specs.find((s) => s.country === "DEU")!;
    expect(CLASSIFY_2004.classes.DEU).toBe(2);
    expect(deu.styleText).toBe(css.get(2));
    const html = markerHtml(deu);
    expect(html).toContain(css.get(2)!);
    expect(html).toContain(
      "background: repeating-linear-gradient(90deg, #fee391, #fee391 20px, black 20px, black 40px);",
    );
  });

  it("positions markers at the projected anchor", () => {
    const specs = buildMarkers(GEOMETRY, CLASSIFY_2004, css, bounds, 800, 600);
    const fra = specs.find((s) => s.country === "FRA")!;
    const [x, y] = projectToPixels([2.4, 46.5], bounds, 800, 600);
    expect(fra.x).toBeCloseTo(x, 9);
    expect(fra.y).toBeCloseTo(y, 9);
  });
});

describe("parseBounds", () => {
  it("reads the SVG data-bounds attribute", () => {
    expect(parseBounds(SVG_WITH_BOUNDS)).toEqual([-9.92, 37.9, 28.6, 65.81]);
  });

  it("returns null when absent", () => {
    expect(parseBounds("<svg></svg>")).toBeNull();
  });
});

describe("projectToPixels", () => {
  it("maps the bounds corners onto the pixel rectangle", () => {
    const bounds: [number, number, number, number] = [-10, -10, 10, 10];
    expect(projectToPixels([0, 0], bounds, 100, 100)[0]).toBeCloseTo(50);
    expect(projectToPixels([0, 0], bounds, 100, 100)[1]).toBeCloseTo(50);
    expect(projectToPixels([10, 10], bounds, 100, 100)[0]).toBeCloseTo(100);
    expect(projectToPixels([10, 10], bounds, 100, 100)[1]).toBeCloseTo(0);
  });
});
