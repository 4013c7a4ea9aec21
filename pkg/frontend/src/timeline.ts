// Timeline strip: one selectable dot per year with the current year in red,
// arrow buttons stepping the selection and clamping at the ends.

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

export function renderTimeline(years: number[], selected: number): string {
  const dots = years
    .map((y) => {
      const cls = y === selected ? "dot selected" : "dot";
      return `<button class="${cls}" data-year="${y}" title="${y}" aria-label="${y}"></button>`;
    })
    .join("");
  const atStart = years.length === 0 || selected === years[0];
  const atEnd = years.length === 0 || selected === years[years.length - 1];
  return (
    `<div class="timeline">` +
    `<div class="timeline-label">${esc(String(selected))}</div>` +
    `<div class="timeline-controls">` +
    `<button class="arrow arrow-left" data-step="-1"${atStart ? " disabled" : ""}>&#9664;</button>` +
    `<div class="dots">${dots}</div>` +
    `<button class="arrow arrow-right" data-step="1"${atEnd ? " disabled" : ""}>&#9654;</button>` +
    `</div></div>`
  );
}

export function countDots(html: string): number {
  return (html.match(/class="dot[" ]/g) ?? []).length;
}
