import type { ApiClient } from "./api.js";
import type { ClassifyPayload, DatasetInfo, MapType } from "./types.js";

export interface UiState {
  selectedDataset: string;
  selectedYear: number;
  selectedMapType: MapType;
  panelsOpen: { goals: boolean; layers: boolean; legend: boolean };
  popupCountry: string | null;
}

export function initialState(datasets: DatasetInfo[]): UiState {
  const first = datasets[0];
  if (!first) throw new Error("no datasets loaded");
  return {
    selectedDataset: first.id,
    selectedYear: first.years[first.years.length - 1],
    selectedMapType: "choropleth",
    panelsOpen: { goals: false, layers: false, legend: false },
    popupCountry: null,
  };
}

/** Clamp-move the year selection by one step; null means no change. */
export function stepYear(years: number[], selected: number, step: -1 | 1): number | null {
  const idx = years.indexOf(selected);
  if (idx < 0) return years.length ? years[0] : null;
  const next = idx + step;
  if (next < 0 || next >= years.length) return null;
  return years[next];
}

export function selectDataset(state: UiState, dataset: DatasetInfo): UiState {
  const years = dataset.years;
  const year = years.includes(state.selectedYear) ? state.selectedYear : years[years.length - 1];
  return { ...state, selectedDataset: dataset.id, selectedYear: year, popupCountry: null };
}

export function selectYear(state: UiState, year: number): UiState {
  return { ...state, selectedYear: year, popupCountry: null };
}

export function selectMapType(state: UiState, mapType: MapType): UiState {
  return { ...state, selectedMapType: mapType };
}

export function togglePanel(state: UiState, panel: keyof UiState["panelsOpen"]): UiState {
  return { ...state, panelsOpen: { ...state.panelsOpen, [panel]: !state.panelsOpen[panel] } };
}

/** Only one popup at a time; clicking the same country closes it. */
export function showPopup(state: UiState, country: string | null): UiState {
  return { ...state, popupCountry: country === state.popupCountry ? null : country };
}

export interface ViewData {
  classify: ClassifyPayload;
  svg: string;
}

/**
 * Fetch everything one map view needs: exactly one classification request
 * and one render request. Responses superseded by a later call are flagged
 * stale through the sequence number so the caller can drop them.
 */
export class ViewFetcher {
  private seq = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly width: number,
    private readonly height: number,
  ) {}

  async fetchView(state: UiState): Promise<{ data: ViewData; stale: () => boolean }> {
    const mySeq = ++this.seq;
    const [classify, svg] = await Promise.all([
      this.api.classify(state.selectedDataset, state.selectedYear),
      this.api.renderSvg(state.selectedDataset, state.selectedYear, state.selectedMapType, this.width, this.height),
    ]);
    return { data: { classify, svg }, stale: () => mySeq !== this.seq };
  }
}
