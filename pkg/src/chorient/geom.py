"""Planar geometry: Web Mercator projection, polygon measures, pole of inaccessibility."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .ingest import MAX_SAFE_LAT

# Latitude at which the spherical Mercator world becomes a square.
SQUARE_WORLD_LAT = math.degrees(2.0 * math.atan(math.exp(math.pi)) - math.pi / 2.0)

Ring = list[tuple[float, float]]
Rings = list[Ring]


@dataclass(frozen=True)
class Viewport:
    width_px: int
    height_px: int
    bounds: tuple[float, float, float, float]  # lonMin, latMin, lonMax, latMax

    def __post_init__(self):
        lon_min, lat_min, lon_max, lat_max = self.bounds
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("viewport dimensions must be positive")
        if not (lon_min < lon_max and lat_min < lat_max):
            raise ValueError(f"degenerate viewport bounds {self.bounds}")
        if max(abs(lat_min), abs(lat_max)) > MAX_SAFE_LAT:
            raise ValueError("viewport latitude outside the Mercator band")


@dataclass(frozen=True)
class AnchorPoint:
    position: tuple[float, float]
    clearance: float


def world_viewport(size_px: int = 1024) -> Viewport:
    """Square viewport covering the full Mercator world."""
    m = SQUARE_WORLD_LAT
    return Viewport(size_px, size_px, (-180.0, -m, 180.0, m))


def _merc_y(lat_deg: float) -> float:
    return math.log(math.tan(math.pi / 4.0 + math.radians(lat_deg) / 2.0))


def project(lonlat: tuple[float, float], vp: Viewport) -> tuple[float, float]:
    """Spherical Web Mercator into pixel coordinates, y growing downward."""
    lon, lat = lonlat
    if abs(lat) > MAX_SAFE_LAT:
        raise ValueError(f"latitude {lat} outside the Mercator band")
    lon_min, lat_min, lon_max, lat_max = vp.bounds
    y_top = _merc_y(lat_max)
    y_bottom = _merc_y(lat_min)
    x = (lon - lon_min) / (lon_max - lon_min) * vp.width_px
    y = (y_top - _merc_y(lat)) / (y_top - y_bottom) * vp.height_px
    return x, y


def unproject(xy: tuple[float, float], vp: Viewport) -> tuple[float, float]:
    """Inverse of :func:`project` for the same viewport."""
    x, y = xy
    lon_min, lat_min, lon_max, lat_max = vp.bounds
    y_top = _merc_y(lat_max)
    y_bottom = _merc_y(lat_min)
    lon = lon_min + x / vp.width_px * (lon_max - lon_min)
    merc = y_top - y / vp.height_px * (y_top - y_bottom)
    lat = math.degrees(2.0 * math.atan(math.exp(merc)) - math.pi / 2.0)
    return lon, lat


def project_rings(rings, vp: Viewport) -> Rings:
    return [[project(pt, vp) for pt in ring] for ring in rings]


def ring_signed_area(ring: Ring) -> float:
    s = 0.0
    n = len(ring)
    for i in range(n):
        x0, y0 = ring[i]
        x1, y1 = ring[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2.0


def polygon_area(rings) -> float:
    """Net area of outer ring minus holes, independent of winding."""
    if not rings:
        return 0.0
    total = abs(ring_signed_area(rings[0]))
    for hole in rings[1:]:
        total -= abs(ring_signed_area(hole))
    return total


def polygon_centroid(rings) -> tuple[float, float]:
    """Area-weighted centroid with holes subtracted (shoelace formula)."""
    ax = ay = area = 0.0
    for ring_idx, ring in enumerate(rings):
        sx = sy = s = 0.0
        n = len(ring)
        for i in range(n):
            x0, y0 = ring[i]
            x1, y1 = ring[(i + 1) % n]
            cross = x0 * y1 - x1 * y0
            sx += (x0 + x1) * cross
            sy += (y0 + y1) * cross
            s += cross
        sign = 1.0 if ring_idx == 0 else -1.0
        weight = sign * abs(s) / 2.0
        if s != 0.0:
            ax += weight * (sx / (3.0 * s))
            ay += weight * (sy / (3.0 * s))
        area += weight
    if area == 0.0:
        raise ValueError("degenerate polygon: zero area")
    return ax / area, ay / area


def _seg_dist_sq(px, py, ax, ay, bx, by) -> float:
    dx, dy = bx - ax, by - ay
    if dx or dy:
        t = ((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy)
        if t > 1.0:
            ax, ay = bx, by
        elif t > 0.0:
            ax, ay = ax + dx * t, ay + dy * t
    dx, dy = px - ax, py - ay
    return dx * dx + dy * dy


def signed_distance(x: float, y: float, rings) -> float:
    """Distance to the nearest edge; positive inside, negative outside."""
    inside = False
    min_sq = math.inf
    for ring in rings:
        bx, by = ring[-1]
        for ax, ay in ring:
            if (ay > y) != (by > y) and x < (bx - ax) * (y - ay) / (by - ay) + ax:
                inside = not inside
            min_sq = min(min_sq, _seg_dist_sq(x, y, ax, ay, bx, by))
            bx, by = ax, ay
    return math.sqrt(min_sq) * (1.0 if inside else -1.0)


def point_in_polygon(x: float, y: float, rings) -> bool:
    return signed_distance(x, y, rings) > 0.0


def pole_of_inaccessibility(rings, precision: float = 1.0) -> AnchorPoint:
    """Most distant interior point from the polygon outline.

    Quadtree cell subdivision: seed cells over the bounding box, rank by
    potential (center clearance plus half-diagonal), subdivide while any
    cell could still beat the best by more than ``precision``. Holes are
    respected through the signed distance.
    """
    if precision <= 0:
        raise ValueError("precision must be positive")
    if not rings or polygon_area(rings) == 0.0:
        raise ValueError("degenerate polygon: zero area")

    xs = [p[0] for p in rings[0]]
    ys = [p[1] for p in rings[0]]
    min_x, max_x, min_y, max_y = min(xs), max(xs), min(ys), max(ys)
    cell_size = min(max_x - min_x, max_y - min_y)
    if cell_size == 0:
        raise ValueError("degenerate polygon: zero extent")
    half = cell_size / 2.0

    counter = 0  # tie-break so heap entries never compare cells

    def make_cell(cx, cy, h):
        nonlocal counter
        d = signed_distance(cx, cy, rings)
        counter += 1
        return (-(d + h * math.sqrt(2.0)), counter, cx, cy, h, d)

    queue = []
    x = min_x
    while x < max_x:
        y = min_y
        while y < max_y:
            heapq.heappush(queue, make_cell(x + half, y + half, half))
            y += cell_size
        x += cell_size

    try:
        cx, cy = polygon_centroid(rings)
        best = (cx, cy, signed_distance(cx, cy, rings))
    except ValueError:
        best = (min_x, min_y, -math.inf)
    bx = min_x + (max_x - min_x) / 2.0
    by = min_y + (max_y - min_y) / 2.0
    d = signed_distance(bx, by, rings)
    if d > best[2]:
        best = (bx, by, d)

    while queue:
        neg_potential, _, cx, cy, h, d = heapq.heappop(queue)
        if d > best[2]:
            best = (cx, cy, d)
        if -neg_potential - best[2] <= precision:
            continue
        h /= 2.0
        for dx in (-h, h):
            for dy in (-h, h):
                heapq.heappush(queue, make_cell(cx + dx, cy + dy, h))

    if best[2] <= 0:
        raise ValueError("no interior point found: degenerate polygon")
    return AnchorPoint(position=(best[0], best[1]), clearance=best[2])


def largest_part(parts) -> Rings:
    """The polygon part with the greatest net area (for multipolygon anchors)."""
    return max(parts, key=polygon_area)
