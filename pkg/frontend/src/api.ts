import type { ClassifyPayload, DatasetInfo, GeometryDoc, MapType } from "./types.js";

export type FetchLike = (url: string) => Promise<{ ok: boolean; status: number; text(): Promise<string>; json(): Promise<unknown> }>;

/** Thin typed client over the map service; the fetch function is injectable for tests. */
export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  private async get(url: string): Promise<unknown> {
    const res = await this.fetchFn(this.base + url);
    if (!res.ok) throw new Error(`GET ${url} failed with ${res.status}`);
    return res.json();
  }

  private async getText(url: string): Promise<string> {
    const res = await this.fetchFn(this.base + url);
    if (!res.ok) throw new Error(`GET ${url} failed with ${res.status}`);
    return res.text();
  }

  datasets(): Promise<DatasetInfo[]> {
    return this.get("/api/datasets") as Promise<DatasetInfo[]>;
  }

  geometry(): Promise<GeometryDoc> {
    return this.get("/api/geometry") as Promise<GeometryDoc>;
  }

  classify(dataset: string, year: number, k?: number): Promise<ClassifyPayload> {
    const kk = k === undefined ? "" : `&k=${k}`;
    return this.get(`/api/classify?dataset=${encodeURIComponent(dataset)}&year=${year}${kk}`) as Promise<ClassifyPayload>;
  }

  renderSvg(dataset: string, year: number, type: MapType, width: number, height: number): Promise<string> {
    return this.getText(
      `/api/render?dataset=${encodeURIComponent(dataset)}&year=${year}&type=${type}&width=${width}&height=${height}`,
    );
  }

  patternCss(k: number, scheme?: string): Promise<string> {
    const sch = scheme === undefined ? "" : `&scheme=${scheme}`;
    return this.getText(`/api/pattern.css?k=${k}${sch}`);
  }
}
