"""CLI and HTTP facade over the engine.

Every HTTP response is exactly the canonical serialization of the
corresponding library call; the facade adds no domain logic of its own.
Exit codes: 0 success, 1 validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response

from . import geom, query, stats
from .classify import classify_year
from .ingest import ParseError, ValidationError, feature_set_to_geojson, parse_indicator
from .render import MAP_TYPES, RenderOptions, RenderRequest, palette_for, render_map
from .serde import canonical_bytes, canonical_dumps
from .symbolize import (
    ClassStyle,
    SCHEME_HORIZONTAL_TO_VERTICAL,
    SCHEME_SPREAD,
    class_styles,
    css_stripes,
    raster_stripe_tile,
    svg_stripe_pattern,
)
from .workspace import Workspace

ANGLE_SCHEMES = (SCHEME_SPREAD, SCHEME_HORIZONTAL_TO_VERTICAL)


@dataclass
class WorkspaceConfig:
    geometry_path: str
    dataset_paths: list[str]
    default_classes: int = 4
    port: int = 8000
    angle_scheme: str = SCHEME_SPREAD
    cors_origins: list[str] = field(default_factory=list)
    static_dir: str | None = None

    def __post_init__(self):
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port {self.port} out of range")
        if self.angle_scheme not in ANGLE_SCHEMES:
            raise ValueError(f"angle scheme must be one of {ANGLE_SCHEMES}")


def _dataset_summary(ws: Workspace) -> list[dict]:
    out = []
    for sid in sorted(ws.datasets):
        s = ws.datasets[sid]
        out.append(
            {"id": s.id, "goal": s.goal, "indicator": s.indicator, "unit": s.unit, "years": s.years()}
        )
    return out


def _geometry_payload(ws: Workspace) -> dict:
    doc = feature_set_to_geojson(ws.feature_set)
    vp = geom.world_viewport()
    for feat in doc["features"]:
        fid = feat["properties"]["ISO3"]
        anchor = ws.anchors(vp, precision=0.05)[fid]
        lon, lat = geom.unproject(anchor.position, vp)
        feat["properties"]["anchorLonLat"] = [lon, lat]
    return doc


def _classify_payload(ws: Workspace, dataset: str, year: int, k: int, scheme: str) -> dict:
    c = ws.classification(dataset, year, k)
    series = ws.dataset(dataset)
    palette = palette_for(c.k)
    styles = class_styles(palette, scheme)
    payload = c.to_jsonable()
    payload["values"] = {cid: series.value(cid, year) for cid in c.classes}
    payload["palette"] = palette.to_jsonable()
    payload["styles"] = [s.to_jsonable() for s in styles]
    return payload


def _pattern_css(k: int, scheme: str) -> str:
    palette = palette_for(k)
    rules = []
    for style in class_styles(palette, scheme):
        rules.append(f".pattern-class-{style.class_index} {{ {css_stripes(style)} }}")
    return "\n".join(rules) + "\n"


def create_app(config: WorkspaceConfig) -> FastAPI:
    """Build the HTTP app with the workspace loaded read-only at startup."""
    ws = Workspace.load(config.geometry_path, config.dataset_paths)
    app = FastAPI(title="chorient", docs_url=None, redoc_url=None)
    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=config.cors_origins,
            allow_methods=["GET"],
            allow_headers=["*"],
        )
    app.state.workspace = ws
    app.state.config = config

    def json_response(payload) -> Response:
        return Response(content=canonical_bytes(payload), media_type="application/json")

    def get_series(dataset: str):
        if dataset not in ws.datasets:
            raise HTTPException(status_code=404, detail=f"unknown dataset {dataset!r}")
        return ws.datasets[dataset]

    def run(fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except KeyError as e:
            raise HTTPException(status_code=404, detail=str(e)) from e
        except (ValueError, ValidationError) as e:
            raise HTTPException(status_code=400, detail=str(e)) from e

    @app.get("/api/datasets")
    def datasets():
        return json_response(_dataset_summary(ws))

    @app.get("/api/geometry")
    def geometry():
        return json_response(_geometry_payload(ws))

    @app.get("/api/classify")
    def classify(dataset: str, year: int, k: int | None = None):
        get_series(dataset)
        kk = k if k is not None else config.default_classes
        return json_response(run(_classify_payload, ws, dataset, year, kk, config.angle_scheme))

    @app.get("/api/render")
    def render(
        dataset: str,
        year: int,
        type: str = Query(default="choropleth"),
        width: int = 800,
        height: int = 600,
        legend: bool = False,
        k: int | None = None,
        popup: str | None = None,
    ):
        get_series(dataset)
        if type not in MAP_TYPES:
            raise HTTPException(status_code=400, detail=f"unknown map type {type!r}")
        req = RenderRequest(
            workspace=ws,
            dataset_id=dataset,
            year=year,
            map_type=type,
            viewport=ws.default_viewport(width, height),
            options=RenderOptions(
                legend=legend,
                popup_for=popup,
                classes=k if k is not None else config.default_classes,
                angle_scheme=config.angle_scheme,
            ),
        )
        doc = run(render_map, req)
        return Response(content=doc.bytes, media_type="image/svg+xml")

    @app.get("/api/query/clusters")
    def clusters(dataset: str, year: int, ref: str, relation: str = "same", k: int | None = None):
        get_series(dataset)
        c = run(ws.classification, dataset, year, k if k is not None else config.default_classes)
        ids = run(query.clusters_query, c, ref.upper(), relation)
        return json_response({"kind": "clusters", "ids": sorted(ids)})

    @app.get("/api/query/frequency")
    def frequency(dataset: str, year: int, ref: str, relation: str = "fewer", k: int | None = None):
        get_series(dataset)
        c = run(ws.classification, dataset, year, k if k is not None else config.default_classes)
        count = run(query.frequency_query, c, ref.upper(), relation)
        return json_response({"kind": "frequency", "count": count})

    @app.get("/api/query/trend")
    def trend(dataset: str, country: str, from_year: int = Query(alias="from"), to_year: int = Query(alias="to"), k: int | None = None):
        s = get_series(dataset)
        r = run(
            query.trend_query,
            s,
            country.upper(),
            from_year,
            to_year,
            fs=ws.feature_set,
            k=k if k is not None else config.default_classes,
        )
        return json_response({"kind": "trend", **r.to_jsonable()})

    @app.get("/api/query/distribution")
    def distribution(
        dataset: str,
        a: str,
        b: str,
        from_year: int = Query(alias="from"),
        to_year: int = Query(alias="to"),
        mode: str = "differ",
        k: int | None = None,
    ):
        s = get_series(dataset)
        r = run(
            query.distribution_query,
            s,
            a.upper(),
            b.upper(),
            (from_year, to_year),
            mode,
            fs=ws.feature_set,
            k=k if k is not None else config.default_classes,
        )
        return json_response({"kind": "distribution", **r.to_jsonable()})

    @app.get("/api/pattern.css")
    def pattern_css(k: int | None = None, scheme: str | None = None):
        kk = k if k is not None else config.default_classes
        sch = scheme if scheme is not None else config.angle_scheme
        if sch not in ANGLE_SCHEMES:
            raise HTTPException(status_code=400, detail=f"unknown scheme {sch!r}")
        return Response(content=run(_pattern_css, kk, sch), media_type="text/css; charset=utf-8")

    if config.static_dir and Path(config.static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="static")

    return app


# ---------------------------------------------------------------------------
# CLI


def _write_out(data: bytes | str, out: str | None):
    if isinstance(data, str):
        data = data.encode("utf-8")
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        if not data.endswith(b"\n"):
            sys.stdout.buffer.write(b"\n")


def _load_workspace(args) -> Workspace:
    return Workspace.load(args.countries, args.data)


def _cmd_render(args) -> int:
    ws = _load_workspace(args)
    dataset = args.dataset or sorted(ws.datasets)[0]
    req = RenderRequest(
        workspace=ws,
        dataset_id=dataset,
        year=args.year,
        map_type=args.type,
        viewport=ws.default_viewport(args.width, args.height),
        options=RenderOptions(legend=args.legend, classes=args.k, angle_scheme=args.angle_scheme),
    )
    doc = render_map(req)
    _write_out(doc.bytes, args.out)
    return 0


def _cmd_classify(args) -> int:
    series = parse_indicator(Path(args.data).read_bytes())
    if args.countries:
        ws = Workspace.load(args.countries, [args.data])
        c = ws.classification(series.id, args.year, args.k)
    else:
        from .ingest import FeatureSet

        c = classify_year(FeatureSet(features=()), series, args.year, args.k)
    payload = c.to_jsonable()
    payload["palette"] = palette_for(c.k).to_jsonable()
    _write_out(canonical_dumps(payload), args.out)
    return 0


def _cmd_query(args) -> int:
    series = parse_indicator(Path(args.data).read_bytes())
    from .ingest import FeatureSet

    fs = FeatureSet(features=())
    if args.query_kind == "clusters":
        c = classify_year(fs, series, args.year, args.k)
        ids = query.clusters_query(c, args.ref.upper(), args.relation)
        payload = {"kind": "clusters", "ids": sorted(ids)}
    elif args.query_kind == "frequency":
        c = classify_year(fs, series, args.year, args.k)
        count = query.frequency_query(c, args.ref.upper(), args.relation)
        payload = {"kind": "frequency", "count": count}
    elif args.query_kind == "trend":
        r = query.trend_query(series, args.country.upper(), args.from_year, args.to_year, k=args.k)
        payload = {"kind": "trend", **r.to_jsonable()}
    else:
        r = query.distribution_query(
            series, args.a.upper(), args.b.upper(), (args.from_year, args.to_year), args.mode, k=args.k
        )
        payload = {"kind": "distribution", **r.to_jsonable()}
    _write_out(canonical_dumps(payload), args.out)
    return 0


def _cmd_bench(args) -> int:
    ws = _load_workspace(args)
    report = stats.bench_render(
        ws,
        iterations=args.iterations,
        viewport=ws.default_viewport(args.width, args.height),
        dataset_id=args.dataset,
        year=args.year,
    )
    _write_out(canonical_dumps(report.to_jsonable()), args.out)
    return 0


def _parse_group(text: str) -> list[float]:
    if text.startswith("@"):
        return [float(v) for v in json.loads(Path(text[1:]).read_text())]
    return [float(v) for v in text.split(",") if v.strip()]


def _cmd_boot(args) -> int:
    result = stats.bootstrap_diff(
        _parse_group(args.group_a), _parse_group(args.group_b), n=args.resamples, seed=args.seed
    )
    _write_out(canonical_dumps(result.to_jsonable()), args.out)
    return 0


def _cmd_pattern(args) -> int:
    style = ClassStyle(
        class_index=0,
        fill_hex=args.color,
        angle_deg=args.angle,
        stripe_on_px=args.on,
        stripe_off_px=args.off,
    )
    if args.format == "css":
        _write_out(css_stripes(style), args.out)
    elif args.format == "svg":
        _write_out(svg_stripe_pattern(style, "pattern-class-0"), args.out)
    else:
        _write_out(raster_stripe_tile(style).to_png(), args.out)
    return 0


def _cmd_serve(args) -> int:
    config = WorkspaceConfig(
        geometry_path=args.countries,
        dataset_paths=args.data,
        default_classes=args.k,
        port=args.port,
        angle_scheme=args.angle_scheme,
        cors_origins=args.cors_origin,
        static_dir=args.static_dir,
    )
    app = create_app(config)
    import uvicorn

    uvicorn.run(app, host=args.host, port=config.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chorient", description="Thematic map engine")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_geometry=True):
        if needs_geometry:
            p.add_argument("--countries", required=True, help="GeoJSON FeatureCollection path")
        p.add_argument("--data", required=True, action="append" if needs_geometry else None,
                       help="indicator JSON path")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--k", type=int, default=4, help="class count (default 4)")

    p = sub.add_parser("render", help="render one map to SVG")
    add_common(p)
    p.add_argument("--dataset", default=None, help="dataset id (default: first loaded)")
    p.add_argument("--year", type=int, required=True)
    p.add_argument("--type", choices=MAP_TYPES, default="choropleth")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=600)
    p.add_argument("--legend", action="store_true")
    p.add_argument("--angle-scheme", choices=ANGLE_SCHEMES, default=SCHEME_SPREAD)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("classify", help="classify one year of a dataset")
    p.add_argument("--countries", default=None)
    add_common(p, needs_geometry=False)
    p.add_argument("--year", type=int, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("query", help="run a comparison query")
    qsub = p.add_subparsers(dest="query_kind", required=True)
    for kind in ("clusters", "frequency", "trend", "distribution"):
        q = qsub.add_parser(kind)
        add_common(q, needs_geometry=False)
        if kind in ("clusters", "frequency"):
            q.add_argument("--year", type=int, required=True)
            q.add_argument("--ref", required=True)
            default_rel = "same" if kind == "clusters" else "fewer"
            q.add_argument("--relation", default=default_rel)
        elif kind == "trend":
            q.add_argument("--country", required=True)
            q.add_argument("--from", dest="from_year", type=int, required=True)
            q.add_argument("--to", dest="to_year", type=int, required=True)
        else:
            q.add_argument("--a", required=True)
            q.add_argument("--b", required=True)
            q.add_argument("--from", dest="from_year", type=int, required=True)
            q.add_argument("--to", dest="to_year", type=int, required=True)
            q.add_argument("--mode", choices=("same", "differ"), default="differ")
        q.set_defaults(func=_cmd_query)

    p = sub.add_parser("bench", help="benchmark rendering of all four types")
    add_common(p)
    p.add_argument("--dataset", default=None)
    p.add_argument("--year", type=int, default=None)
    p.add_argument("--iterations", type=int, default=stats.DEFAULT_ITERATIONS)
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=600)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("boot", help="bootstrap difference of group means")
    p.add_argument("--group-a", required=True, help="comma-separated values or @file.json")
    p.add_argument("--group-b", required=True)
    p.add_argument("--resamples", type=int, default=stats.DEFAULT_RESAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_boot)

    p = sub.add_parser("pattern", help="emit a stripe pattern (css, svg or png)")
    p.add_argument("--angle", type=float, required=True)
    p.add_argument("--color", required=True, help="fill colour, 6 hex digits")
    p.add_argument("--format", choices=("css", "svg", "png"), default="css")
    p.add_argument("--on", type=float, default=20.0)
    p.add_argument("--off", type=float, default=20.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_pattern)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--countries", required=True)
    p.add_argument("--data", required=True, action="append")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--angle-scheme", choices=ANGLE_SCHEMES, default=SCHEME_SPREAD)
    p.add_argument("--cors-origin", action="append", default=[])
    p.add_argument("--static-dir", default=None, help="serve a built explorer from this directory")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError, ValueError, KeyError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
