"""Deterministic SVG assembly for the four map types.

Identical requests produce byte-identical documents: anchors are cached on
the workspace, features are emitted in id order and timing lives only in the
document metadata, never in the bytes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import geom
from .classify import Classification
from .colorlab import MISSING_HEX, Palette, study_palette


def palette_for(k: int) -> Palette:
    """Palette sized to an effective class count, downgrading gracefully to
    a single entry when a degenerate year leaves only one class."""
    if k >= 2:
        return study_palette(k)
    base = study_palette(2)
    return Palette(k=1, entries=(base.entries[0],), missing_hex=base.missing_hex)
from .geom import Viewport
from .symbolize import (
    ClassStyle,
    LegendSpec,
    SCHEME_SPREAD,
    assemble_pattern_defs,
    class_styles,
    legend_spec,
)
from .workspace import Workspace

MAP_TYPES = ("choropleth", "gsm", "choriented", "choriented-mobile")

NEUTRAL_FILL = "eeeeee"
BORDER_HEX = "999999"
BORDER_WIDTH = 0.5
COORD_DECIMALS = 2


class RenderRequestError(ValueError):
    pass


@dataclass(frozen=True)
class RenderOptions:
    legend: bool = False
    popup_for: str | None = None
    classes: int = 4
    angle_scheme: str = SCHEME_SPREAD


@dataclass(frozen=True)
class RenderRequest:
    workspace: Workspace
    dataset_id: str
    year: int
    map_type: str
    viewport: Viewport
    options: RenderOptions = field(default_factory=RenderOptions)

    def __post_init__(self):
        if self.map_type not in MAP_TYPES:
            raise RenderRequestError(f"unknown map type {self.map_type!r}; expected one of {MAP_TYPES}")


@dataclass(frozen=True)
class SvgMeta:
    feature_count: int
    pattern_count: int
    render_millis: float


@dataclass(frozen=True)
class SvgDocument:
    bytes: bytes
    meta: SvgMeta


def _fmt(v: float) -> str:
    s = f"{v:.{COORD_DECIMALS}f}"
    return "0.00" if s == "-0.00" else s


def _path_data(parts, vp: Viewport) -> str:
    cmds = []
    for part in parts:
        for ring in part:
            pts = [geom.project(pt, vp) for pt in ring[:-1]]
            cmds.append(
                "M" + " L".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts) + " Z"
            )
    return " ".join(cmds)


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def _polygon_fill(map_type: str, cls: int | None, styles: list[ClassStyle]) -> str:
    if cls is None:
        return f"#{MISSING_HEX}"
    if map_type == "choropleth":
        return f"#{styles[cls].fill_hex}"
    if map_type == "choriented":
        return f"url(#pattern-class-{cls})"
    return f"#{NEUTRAL_FILL}"


def render_legend(spec: LegendSpec, x: float = 0.0, y: float = 0.0) -> str:
    """Stacked legend rows, swatch left and label right, "no data" last."""
    row_h = 22.0
    swatch = 16.0
    out = [f'<g id="legend" transform="translate({_fmt(x)},{_fmt(y)})">']
    cursor = 0.0
    if spec.title:
        cursor += row_h * 0.75
        out.append(f'<text x="0" y="{_fmt(cursor)}" font-size="13" font-family="sans-serif">{_esc(spec.title)}</text>')
        cursor += row_h * 0.25
    rows = list(spec.rows) + [None]
    for row in rows:
        if row is None:
            label = spec.missing_label
            style = None
        else:
            style = row.style
            label = row.label
        sy = cursor
        if spec.map_type == "gsm" and style is not None:
            r = 3.0 + style.radius_px * 0.25
            hexcode = spec.symbol_hex or style.fill_hex
            out.append(
                f'<circle cx="{_fmt(swatch / 2)}" cy="{_fmt(sy + swatch / 2)}" r="{_fmt(r)}" '
                f'fill="#{hexcode}" stroke="#000000" stroke-width="{BORDER_WIDTH}"/>'
            )
        elif spec.map_type in ("choriented", "choriented-mobile") and style is not None:
            out.append(
                f'<rect x="0" y="{_fmt(sy)}" width="{_fmt(swatch)}" height="{_fmt(swatch)}" '
                f'fill="url(#pattern-class-{style.class_index})" stroke="#{BORDER_HEX}" stroke-width="{BORDER_WIDTH}"/>'
            )
        else:
            fill = f"#{style.fill_hex}" if style is not None else f"#{spec.missing_hex}"
            out.append(
                f'<rect x="0" y="{_fmt(sy)}" width="{_fmt(swatch)}" height="{_fmt(swatch)}" '
                f'fill="{fill}" stroke="#{BORDER_HEX}" stroke-width="{BORDER_WIDTH}"/>'
            )
        out.append(
            f'<text x="{_fmt(swatch + 6)}" y="{_fmt(sy + swatch - 4)}" font-size="12" '
            f'font-family="sans-serif">{_esc(label)}</text>'
        )
        cursor += row_h
    out.append("</g>")
    return "".join(out)


def render_popup(req: RenderRequest, country_id: str) -> str:
    """Popup fragment anchored at the feature's pole of inaccessibility."""
    ws = req.workspace
    try:
        feature = ws.feature_set.get(country_id)
    except KeyError:
        raise RenderRequestError(f"unknown country {country_id!r}") from None
    anchor = ws.anchors(req.viewport)[country_id]
    series = ws.dataset(req.dataset_id)
    value = series.value(country_id, req.year)
    if value is None:
        detail = "no data"
    else:
        classification = ws.classification(req.dataset_id, req.year, req.options.classes)
        cls = classification.classes[country_id]
        detail = f"{value:g} {series.unit} (class {cls + 1})"
    x, y = anchor.position
    w = max(120.0, 8.0 * max(len(feature.name), len(detail)) * 0.9)
    h = 40.0
    return (
        f'<g id="popup" transform="translate({_fmt(x)},{_fmt(y - h - 8)})">'
        f'<rect x="{_fmt(-w / 2)}" y="0" width="{_fmt(w)}" height="{_fmt(h)}" rx="6" '
        f'fill="#ffffff" stroke="#333333" stroke-width="1"/>'
        f'<text x="0" y="16" text-anchor="middle" font-size="13" font-family="sans-serif" '
        f'font-weight="bold">{_esc(feature.name)}</text>'
        f'<text x="0" y="32" text-anchor="middle" font-size="12" font-family="sans-serif">{_esc(detail)}</text>'
        f"</g>"
    )


def _used_classes(classification: Classification, feature_ids: list[str]) -> list[int]:
    used = {classification.classes[fid] for fid in feature_ids if classification.classes.get(fid) is not None}
    return sorted(used)


def render_map(req: RenderRequest) -> SvgDocument:
    """Assemble the SVG document for one request."""
    start = time.perf_counter()
    ws = req.workspace
    series = ws.dataset(req.dataset_id)
    years = series.years()
    if req.year not in range(years[0], years[-1] + 1):
        raise RenderRequestError(f"year {req.year} outside dataset span {years[0]}..{years[-1]}")
    classification = ws.classification(req.dataset_id, req.year, req.options.classes)
    palette = palette_for(classification.k)
    styles = class_styles(palette, req.options.angle_scheme)
    vp = req.viewport

    features = sorted(ws.feature_set.features, key=lambda f: f.id)
    feature_ids = [f.id for f in features]
    legend = None
    if req.options.legend:
        legend = legend_spec(
            classification,
            palette,
            map_type=req.map_type,
            indicator=series.indicator,
            unit=series.unit,
            scheme=req.options.angle_scheme,
        )

    # Pattern defs for every class actually referenced by a fill.
    pattern_classes: list[int] = []
    if req.map_type in ("choriented", "choriented-mobile"):
        pattern_classes = _used_classes(classification, feature_ids)
        if legend is not None:
            pattern_classes = sorted(set(pattern_classes) | {s.class_index for s in styles})

    need_anchors = req.map_type in ("gsm", "choriented-mobile") or req.options.popup_for
    anchors = ws.anchors(vp) if need_anchors else {}

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{vp.width_px}" height="{vp.height_px}" '
             f'viewBox="0 0 {vp.width_px} {vp.height_px}" data-bounds="{",".join(_fmt(b) for b in vp.bounds)}">']
    if pattern_classes:
        defs = assemble_pattern_defs([(styles[i], f"pattern-class-{i}") for i in pattern_classes])
        parts.append(f"<defs>{defs}</defs>")

    parts.append('<g id="features">')
    for f in features:
        cls = classification.classes.get(f.id)
        fill = _polygon_fill(req.map_type, cls, styles)
        d = _path_data(f.parts, vp)
        parts.append(
            f'<path id="feature-{f.id}" d="{d}" fill="{fill}" fill-rule="evenodd" '
            f'stroke="#{BORDER_HEX}" stroke-width="{BORDER_WIDTH}"/>'
        )
    parts.append("</g>")

    if req.map_type == "gsm":
        symbol_hex = palette.entries[-1].hex
        parts.append('<g id="markers">')
        for f in features:
            cls = classification.classes.get(f.id)
            if cls is None:
                continue
            x, y = anchors[f.id].position
            parts.append(
                f'<circle id="marker-{f.id}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(styles[cls].radius_px)}" '
                f'fill="#{symbol_hex}" stroke="#000000" stroke-width="{BORDER_WIDTH}"/>'
            )
        parts.append("</g>")
    elif req.map_type == "choriented-mobile":
        parts.append('<g id="markers">')
        for f in features:
            cls = classification.classes.get(f.id)
            if cls is None:
                continue
            x, y = anchors[f.id].position
            side = styles[cls].marker_px
            parts.append(
                f'<rect id="marker-{f.id}" x="{_fmt(x - side / 2)}" y="{_fmt(y - side / 2)}" '
                f'width="{side}" height="{side}" fill="url(#pattern-class-{cls})" '
                f'stroke="#000000" stroke-width="{BORDER_WIDTH}"/>'
            )
        parts.append("</g>")

    if legend is not None:
        parts.append(render_legend(legend, x=10.0, y=10.0))
    if req.options.popup_for:
        parts.append(render_popup(req, req.options.popup_for))
    parts.append("</svg>")

    body = "".join(parts).encode("utf-8")
    millis = (time.perf_counter() - start) * 1000.0
    return SvgDocument(
        bytes=body,
        meta=SvgMeta(
            feature_count=len(features),
            pattern_count=len(pattern_classes),
            render_millis=millis,
        ),
    )
