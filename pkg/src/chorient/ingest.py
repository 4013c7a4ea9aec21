"""Parsing and validation of country geometry and indicator-series inputs.

Geometry arrives as a GeoJSON FeatureCollection of Polygon/MultiPolygon
features; indicator data as a JSON document with per-country year/value
tables where null (or absence) means missing, never zero.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

log = logging.getLogger(__name__)

# Web-Mercator-safe latitude band; inputs are clamped into it at parse time.
MAX_SAFE_LAT = 85.06

Ring = list[tuple[float, float]]
Part = list[Ring]  # outer ring first, then holes


class ParseError(ValueError):
    """Malformed document; carries the byte offset where parsing failed."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (byte offset {offset})")
        self.offset = offset


class ValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Feature:
    id: str
    name: str
    parts: tuple  # tuple of parts, each a tuple of rings of (lon, lat)


@dataclass(frozen=True)
class FeatureSet:
    features: tuple[Feature, ...]

    def ids(self) -> list[str]:
        return [f.id for f in self.features]

    def get(self, feature_id: str) -> Feature:
        for f in self.features:
            if f.id == feature_id:
                return f
        raise KeyError(feature_id)


@dataclass(frozen=True)
class IndicatorSeries:
    id: str
    goal: int
    indicator: str
    unit: str
    values: dict[str, dict[int, float]]  # country -> year -> value; absent = missing

    def years(self) -> list[int]:
        ys = {y for per_country in self.values.values() for y in per_country}
        return sorted(ys)

    def year_span(self) -> tuple[int, int]:
        ys = self.years()
        return ys[0], ys[-1]

    def value(self, country: str, year: int) -> float | None:
        return self.values.get(country, {}).get(year)

    def values_for_year(self, year: int) -> dict[str, float]:
        out = {}
        for cid, per_year in self.values.items():
            if year in per_year:
                out[cid] = per_year[year]
        return out


@dataclass(frozen=True)
class JoinReport:
    matched: int
    geometry_only: list[str] = field(default_factory=list)
    data_only: list[str] = field(default_factory=list)
    year_span: tuple[int, int] = (0, 0)

    def to_jsonable(self) -> dict:
        return {
            "matched": self.matched,
            "geometryOnly": list(self.geometry_only),
            "dataOnly": list(self.data_only),
            "yearSpan": list(self.year_span),
        }


def _ring_area(ring: Ring) -> float:
    # Shoelace over lon/lat treated as planar; positive for counterclockwise.
    s = 0.0
    for (x0, y0), (x1, y1) in zip(ring, ring[1:]):
        s += x0 * y1 - x1 * y0
    return s / 2.0


def _normalize_ring(raw, feature_idx: int, want_ccw: bool) -> Ring:
    if not isinstance(raw, list) or len(raw) < 3:
        raise ValidationError(f"feature {feature_idx}: ring with fewer than 3 positions")
    ring: Ring = []
    clamped = False
    for pos in raw:
        if not isinstance(pos, list) or len(pos) < 2:
            raise ValidationError(f"feature {feature_idx}: malformed position {pos!r}")
        lon, lat = float(pos[0]), float(pos[1])
        if not -180.0 <= lon <= 180.0:
            raise ValidationError(f"feature {feature_idx}: longitude {lon} out of range")
        if abs(lat) > MAX_SAFE_LAT:
            lat = max(-MAX_SAFE_LAT, min(MAX_SAFE_LAT, lat))
            clamped = True
        ring.append((lon, lat))
    if clamped:
        log.warning("feature %d: latitude clamped to the ±%s Mercator band", feature_idx, MAX_SAFE_LAT)
    if ring[0] != ring[-1]:
        ring.append(ring[0])
    if len(ring) < 4:
        raise ValidationError(f"feature {feature_idx}: ring has fewer than 4 positions after closing")
    area = _ring_area(ring)
    if (area > 0) != want_ccw and area != 0:
        ring = ring[::-1]
    return ring


def _normalize_part(raw_rings, feature_idx: int) -> Part:
    if not raw_rings:
        raise ValidationError(f"feature {feature_idx}: polygon without rings")
    part = [_normalize_ring(raw_rings[0], feature_idx, want_ccw=True)]
    if _ring_area(part[0]) == 0:
        raise ValidationError(f"feature {feature_idx}: outer ring has zero area")
    for hole in raw_rings[1:]:
        part.append(_normalize_ring(hole, feature_idx, want_ccw=False))
    return part


def parse_geojson(data: bytes | str, id_property: str = "ISO3", name_property: str = "NAME") -> FeatureSet:
    """Parse a FeatureCollection of Polygon/MultiPolygon country features.

    Rings are closed if needed and rewound to outer-counterclockwise /
    holes-clockwise. Feature order is preserved.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed GeoJSON: {e.msg}", offset=e.pos) from e
    if not isinstance(doc, dict) or doc.get("type") != "FeatureCollection":
        raise ValidationError("document is not a FeatureCollection")

    features = []
    missing_ids = []
    seen: set[str] = set()
    for idx, feat in enumerate(doc.get("features", [])):
        props = feat.get("properties") or {}
        fid = props.get(id_property) or feat.get("id")
        if not fid:
            missing_ids.append(idx)
            continue
        fid = str(fid).upper()
        if len(fid) != 3:
            raise ValidationError(f"feature {idx}: id {fid!r} is not a 3-character code")
        if fid in seen:
            raise ValidationError(f"feature {idx}: duplicate id {fid!r}")
        seen.add(fid)
        name = str(props.get(name_property, fid))
        geom = feat.get("geometry") or {}
        gtype = geom.get("type")
        coords = geom.get("coordinates", [])
        if gtype == "Polygon":
            parts = [_normalize_part(coords, idx)]
        elif gtype == "MultiPolygon":
            parts = [_normalize_part(p, idx) for p in coords]
        else:
            raise ValidationError(f"feature {idx}: geometry type {gtype!r} is not polygonal")
        features.append(
            Feature(id=fid, name=name, parts=tuple(tuple(tuple(pt for pt in r) for r in p) for p in parts))
        )
    if missing_ids:
        raise ValidationError(f"features missing the {id_property!r} property: {missing_ids}")
    return FeatureSet(features=tuple(features))


def feature_set_to_geojson(fs: FeatureSet, id_property: str = "ISO3", name_property: str = "NAME") -> dict:
    """Serialize back to the GeoJSON shape accepted by :func:`parse_geojson`."""
    out = []
    for f in fs.features:
        parts = [[[list(pt) for pt in ring] for ring in part] for part in f.parts]
        if len(parts) == 1:
            geom = {"type": "Polygon", "coordinates": parts[0]}
        else:
            geom = {"type": "MultiPolygon", "coordinates": parts}
        out.append(
            {
                "type": "Feature",
                "properties": {id_property: f.id, name_property: f.name},
                "geometry": geom,
            }
        )
    return {"type": "FeatureCollection", "features": out}


def parse_indicator(data: bytes | str) -> IndicatorSeries:
    """Parse one indicator series document.

    Null values and absent (country, year) pairs stay missing; they are never
    coerced to zero. Year keys become integers.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed indicator JSON: {e.msg}", offset=e.pos) from e

    for key in ("id", "goal", "indicator", "unit", "values"):
        if key not in doc:
            raise ValidationError(f"indicator document missing {key!r}")
    goal = doc["goal"]
    if not isinstance(goal, int) or not 1 <= goal <= 17:
        raise ValidationError(f"goal {goal!r} outside 1..17")
    raw_values = doc["values"]
    if not isinstance(raw_values, dict) or not raw_values:
        raise ValidationError("indicator has an empty values table")

    values: dict[str, dict[int, float]] = {}
    any_year = False
    for cid, per_year in raw_values.items():
        cid = str(cid).upper()
        if len(cid) != 3:
            raise ValidationError(f"country id {cid!r} is not a 3-character code")
        if not isinstance(per_year, dict):
            raise ValidationError(f"country {cid}: values must map year to number")
        table: dict[int, float] = {}
        for ystr, v in per_year.items():
            try:
                year = int(ystr)
            except (TypeError, ValueError):
                raise ValidationError(f"country {cid}: year key {ystr!r} is not an integer") from None
            if not 1000 <= year <= 9999:
                raise ValidationError(f"country {cid}: year {year} is not a 4-digit year")
            if v is None:
                continue  # explicit missing
            if isinstance(v, bool) or not isinstance(v, (int, float)) or v != v or v in (float("inf"), float("-inf")):
                raise ValidationError(f"non-numeric value for ({cid}, {year}): {v!r}")
            table[year] = float(v)
            any_year = True
        values[cid] = table
    if not any_year:
        raise ValidationError("indicator has no numeric values at all")
    return IndicatorSeries(id=str(doc["id"]), goal=goal, indicator=str(doc["indicator"]), unit=str(doc["unit"]), values=values)


def indicator_to_json(s: IndicatorSeries) -> dict:
    return {
        "id": s.id,
        "goal": s.goal,
        "indicator": s.indicator,
        "unit": s.unit,
        "values": {cid: {str(y): v for y, v in sorted(per.items())} for cid, per in s.values.items()},
    }


def join(fs: FeatureSet, s: IndicatorSeries) -> JoinReport:
    """Report id overlap between geometry and data without mutating either."""
    geo_ids = set(fs.ids())
    data_ids = {cid for cid, per in s.values.items()}
    matched = geo_ids & data_ids
    span = s.year_span() if s.years() else (0, 0)
    return JoinReport(
        matched=len(matched),
        geometry_only=sorted(geo_ids - data_ids),
        data_only=sorted(data_ids - geo_ids),
        year_span=span,
    )
