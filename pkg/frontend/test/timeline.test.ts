import { describe, expect, it } from "vitest";

import { countDots, renderTimeline } from "../src/timeline.js";
import { stepYear } from "../src/state.js";
import { LIFE_DATASET } from "./fixtures.js";

describe("timeline", () => {
  it("renders one dot per year (19 for 2000-2018)", () => {
    const html = renderTimeline(LIFE_DATASET.years, 2004);
    expect(LIFE_DATASET.years).toHaveLength(19);
    expect(countDots(html)).toBe(19);
  });

  it("marks exactly the selected year as the red dot", () => {
    const html = renderTimeline(LIFE_DATASET.years, 2004);
    expect(html.match(/class="dot selected"/g)).toHaveLength(1);
    expect(html).toContain('class="dot selected" data-year="2004"');
  });

  it("shows the selected year label above the strip", () => {
    const html = renderTimeline(LIFE_DATASET.years, 2011);
    expect(html).toContain('<div class="timeline-label">2011</div>');
  });

  it("disables the right arrow at the last year", () => {
    const html = renderTimeline(LIFE_DATASET.years, 2018);
    expect(html).toMatch(/arrow-right" data-step="1" disabled/);
    expect(html).not.toMatch(/arrow-left" data-step="-1" disabled/);
  });

  it("disables the left arrow at the first year", () => {
    const html = renderTimeline(LIFE_DATASET.years, 2000);
    expect(html).toMatch(/arrow-left" data-step="-1" disabled/);
    expect(html).not.toMatch(/arrow-right" data-step="1" disabled/);
  });
});

describe("stepYear", () => {
  const years = LIFE_DATASET.years;

  it("moves by one year in either direction", () => {
    expect(stepYear(years, 2004, 1)).toBe(2005);
    expect(stepYear(years, 2004, -1)).toBe(2003);
  });

  it("clamps at both ends", () => {
    expect(stepYear(years, 2018, 1)).toBeNull();
    expect(stepYear(years, 2000, -1)).toBeNull();
  });
});
