import { ApiClient } from "./api.js";
import { renderLegend } from "./legend.js";
import { buildMarkers, markerHtml, parsePatternCss } from "./markers.js";
import { parseBounds, projectToPixels } from "./mercator.js";
import { renderPopup } from "./popup.js";
import {
  UiState,
  ViewFetcher,
  initialState,
  selectDataset,
  selectMapType,
  selectYear,
  showPopup,
  stepYear,
  togglePanel,
} from "./state.js";
import { renderTimeline } from "./timeline.js";
import { MAP_TYPES, type ClassifyPayload, type DatasetInfo, type GeometryDoc, type MapType } from "./types.js";

const MAP_WIDTH = 800;
const MAP_HEIGHT = 600;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

class Explorer {
  private state!: UiState;
  private datasets: DatasetInfo[] = [];
  private geometry!: GeometryDoc;
  private fetcher: ViewFetcher;
  private currentClassify: ClassifyPayload | null = null;
  private currentSvg = "";
  private patternCssCache = new Map<number, Map<number, string>>();

  constructor(private readonly api: ApiClient) {
    this.fetcher = new ViewFetcher(api, MAP_WIDTH, MAP_HEIGHT);
  }

  async start(): Promise<void> {
    [this.datasets, this.geometry] = await Promise.all([this.api.datasets(), this.api.geometry()]);
    this.state = initialState(this.datasets);
    this.renderGoalPanel();
    this.renderTypePanel();
    this.wirePanelToggles();
    await this.refreshView();
  }

  private dataset(): DatasetInfo {
    const d = this.datasets.find((d) => d.id === this.state.selectedDataset);
    if (!d) throw new Error(`unknown dataset ${this.state.selectedDataset}`);
    return d;
  }

  private async patternCss(k: number): Promise<Map<number, string>> {
    let cached = this.patternCssCache.get(k);
    if (!cached) {
      cached = parsePatternCss(await this.api.patternCss(k));
      this.patternCssCache.set(k, cached);
    }
    return cached;
  }

  /** One classification fetch plus one render fetch per view change. */
  private async refreshView(): Promise<void> {
    const { data, stale } = await this.fetcher.fetchView(this.state);
    if (stale()) return; // superseded by a newer selection
    this.currentClassify = data.classify;
    this.currentSvg = data.svg;
    el("map").innerHTML = data.svg;
    await this.renderOverlays();
    this.renderTimelineBar();
    await this.renderLegendPanel();
    this.wireFeatureClicks();
  }

  private async renderOverlays(): Promise<void> {
    const overlay = el("overlay");
    overlay.innerHTML = "";
    if (!this.currentClassify) return;
    if (this.state.selectedMapType === "choriented-mobile") {
      el("map").classList.add("hide-svg-markers");
      const bounds = parseBounds(this.currentSvg);
      if (bounds) {
        const css = await this.patternCss(this.currentClassify.breaks.k);
        const specs = buildMarkers(this.geometry, this.currentClassify, css, bounds, MAP_WIDTH, MAP_HEIGHT);
        overlay.innerHTML = specs.map(markerHtml).join("");
      }
    } else {
      el("map").classList.remove("hide-svg-markers");
    }
    this.renderPopupOverlay();
  }

  private renderPopupOverlay(): void {
    const host = el("popup-host");
    if (!this.state.popupCountry || !this.currentClassify) {
      host.innerHTML = "";
      host.style.display = "none";
      return;
    }
    const feature = this.geometry.features.find((f) => f.properties.ISO3 === this.state.popupCountry);
    const bounds = parseBounds(this.currentSvg);
    if (!feature || !bounds) return;
    const value = this.currentClassify.values[feature.properties.ISO3] ?? null;
    host.innerHTML = renderPopup(feature, this.currentClassify, value, this.dataset().unit);
    const [x, y] = projectToPixels(feature.properties.anchorLonLat, bounds, MAP_WIDTH, MAP_HEIGHT);
    host.style.display = "block";
    host.style.left = `${x}px`;
    host.style.top = `${y}px`;
  }

  private renderGoalPanel(): void {
    const panel = el("goal-list");
    panel.innerHTML = this.datasets
      .map(
        (d) =>
          `<button class="goal${d.id === this.state.selectedDataset ? " selected" : ""}" data-dataset="${d.id}">` +
          `SDG ${d.goal}: ${d.indicator}</button>`,
      )
      .join("");
    panel.querySelectorAll<HTMLButtonElement>("button.goal").forEach((btn) => {
      btn.onclick = () => {
        const ds = this.datasets.find((d) => d.id === btn.dataset.dataset);
        if (!ds) return;
        this.state = selectDataset(this.state, ds);
        this.renderGoalPanel();
        void this.refreshView();
      };
    });
  }

  private renderTypePanel(): void {
    const panel = el("type-list");
    panel.innerHTML = MAP_TYPES.map(
      (t) =>
        `<button class="map-type${t === this.state.selectedMapType ? " selected" : ""}" data-type="${t}">${t}</button>`,
    ).join("");
    panel.querySelectorAll<HTMLButtonElement>("button.map-type").forEach((btn) => {
      btn.onclick = () => {
        this.state = selectMapType(this.state, btn.dataset.type as MapType);
        this.renderTypePanel();
        void this.refreshView();
      };
    });
  }

  private renderTimelineBar(): void {
    const bar = el("timeline-host");
    bar.innerHTML = renderTimeline(this.dataset().years, this.state.selectedYear);
    bar.querySelectorAll<HTMLButtonElement>("button.dot").forEach((dot) => {
      dot.onclick = () => {
        this.state = selectYear(this.state, Number(dot.dataset.year));
        void this.refreshView();
      };
    });
    bar.querySelectorAll<HTMLButtonElement>("button.arrow").forEach((arrow) => {
      arrow.onclick = () => {
        const next = stepYear(this.dataset().years, this.state.selectedYear, Number(arrow.dataset.step) as -1 | 1);
        if (next === null) return;
        this.state = selectYear(this.state, next);
        void this.refreshView();
      };
    });
  }

  private async renderLegendPanel(): Promise<void> {
    if (!this.currentClassify) return;
    const css = await this.patternCss(this.currentClassify.breaks.k);
    el("legend-body").innerHTML = renderLegend(this.dataset(), this.currentClassify, this.state.selectedMapType, css);
  }

  private wirePanelToggles(): void {
    (["goals", "layers", "legend"] as const).forEach((panel) => {
      el(`${panel}-toggle`).onclick = () => {
        this.state = togglePanel(this.state, panel);
        el(`${panel}-panel`).classList.toggle("open", this.state.panelsOpen[panel]);
      };
    });
  }

  private wireFeatureClicks(): void {
    const svg = el("map").querySelector("svg");
    if (!svg) return;
    svg.querySelectorAll<SVGPathElement>("path[id^='feature-']").forEach((path) => {
      path.addEventListener("click", () => {
        const country = path.id.replace("feature-", "");
        this.state = showPopup(this.state, country);
        this.renderPopupOverlay();
      });
    });
  }
}

export function boot(): void {
  const explorer = new Explorer(new ApiClient(""));
  void explorer.start().catch((err) => {
    el("map").innerHTML = `<div class="load-error">Failed to load: ${String(err)}</div>`;
  });
}

if (typeof document !== "undefined" && document.getElementById("map")) {
  boot();
}
