"""Per-class symbol recipes: stripe orientations, pattern emitters, radii, legends.

Stripe angles are applied verbatim as the CSS gradient angle and as the SVG
pattern rotation, so the two emitters always agree visually.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np
from PIL import Image

from .classify import Classification
from .colorlab import Palette

SCHEME_SPREAD = "spread180"
SCHEME_HORIZONTAL_TO_VERTICAL = "horizontalToVertical"

DEFAULT_STRIPE_ON_PX = 20.0
DEFAULT_STRIPE_OFF_PX = 20.0
DEFAULT_LINE_HEX = "000000"
DEFAULT_MARKER_PX = 30
DEFAULT_RADIUS_MIN = 6.0
DEFAULT_RADIUS_MAX = 24.0

SEAMLESS_ANGLES = (0.0, 45.0, 90.0, 135.0)
MAX_TILE_SIDE = 64


@dataclass(frozen=True)
class ClassStyle:
    class_index: int
    fill_hex: str
    angle_deg: float
    stripe_on_px: float = DEFAULT_STRIPE_ON_PX
    stripe_off_px: float = DEFAULT_STRIPE_OFF_PX
    line_hex: str = DEFAULT_LINE_HEX
    radius_px: float = DEFAULT_RADIUS_MIN
    marker_px: int = DEFAULT_MARKER_PX

    def __post_init__(self):
        if self.stripe_on_px <= 0 or self.stripe_off_px <= 0:
            raise ValueError("stripe band widths must be positive")
        if not 0.0 <= self.angle_deg < 180.0:
            raise ValueError(f"angle {self.angle_deg} outside [0, 180)")

    @property
    def period_px(self) -> float:
        return self.stripe_on_px + self.stripe_off_px

    def to_jsonable(self) -> dict:
        return {
            "classIndex": self.class_index,
            "fillHex": self.fill_hex,
            "angleDeg": self.angle_deg,
            "stripeOnPx": self.stripe_on_px,
            "stripeOffPx": self.stripe_off_px,
            "lineHex": self.line_hex,
            "radiusPx": self.radius_px,
            "markerPx": self.marker_px,
        }


@dataclass(frozen=True)
class LegendRow:
    label: str
    style: ClassStyle


@dataclass(frozen=True)
class LegendSpec:
    title: str
    rows: tuple[LegendRow, ...]
    missing_hex: str
    missing_label: str = "no data"
    map_type: str = "choropleth"
    symbol_hex: str = ""  # single symbol colour for graduated-symbol legends


def orientation_angles(k: int, scheme: str = SCHEME_SPREAD) -> list[float]:
    """Stripe angles per class, ascending, all in [0, 180).

    The default scheme spreads k angles evenly over the half-turn
    (i * 180 / k); the alternate runs from horizontal to vertical
    (i * 90 / (k - 1)).
    """
    if k <= 0:
        raise ValueError(f"class count must be positive, got {k}")
    if scheme == SCHEME_SPREAD:
        return [i * 180.0 / k for i in range(k)]
    if scheme == SCHEME_HORIZONTAL_TO_VERTICAL:
        if k == 1:
            return [0.0]
        return [i * 90.0 / (k - 1) for i in range(k)]
    raise ValueError(f"unknown angle scheme {scheme!r}")


def gsm_radii(k: int, r_min: float = DEFAULT_RADIUS_MIN, r_max: float = DEFAULT_RADIUS_MAX) -> list[float]:
    """Linearly spaced graduated-symbol radii from r_min to r_max."""
    if k <= 0:
        raise ValueError(f"class count must be positive, got {k}")
    if r_min <= 0 or r_min > r_max:
        raise ValueError(f"invalid radius range {r_min}..{r_max}")
    if k == 1:
        return [r_min]
    return [r_min + i * (r_max - r_min) / (k - 1) for i in range(k)]


def class_styles(
    palette: Palette,
    scheme: str = SCHEME_SPREAD,
    stripe_on_px: float = DEFAULT_STRIPE_ON_PX,
    stripe_off_px: float = DEFAULT_STRIPE_OFF_PX,
    line_hex: str = DEFAULT_LINE_HEX,
    r_min: float = DEFAULT_RADIUS_MIN,
    r_max: float = DEFAULT_RADIUS_MAX,
    marker_px: int = DEFAULT_MARKER_PX,
) -> list[ClassStyle]:
    """One ClassStyle per palette entry, combining angles, colours and radii."""
    angles = orientation_angles(palette.k, scheme)
    radii = gsm_radii(palette.k, r_min, r_max)
    return [
        ClassStyle(
            class_index=i,
            fill_hex=entry.hex,
            angle_deg=angles[i],
            stripe_on_px=stripe_on_px,
            stripe_off_px=stripe_off_px,
            line_hex=line_hex,
            radius_px=radii[i],
            marker_px=marker_px,
        )
        for i, entry in enumerate(palette.entries)
    ]


def _fmt_num(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else f"{v:g}"


def _css_color(hex_color: str) -> str:
    # Plain black is written as the keyword to match the documented CSS shape.
    return "black" if hex_color.lower() == "000000" else f"#{hex_color}"


def css_gradient(style: ClassStyle) -> str:
    """The repeating-linear-gradient call for one class, byte-deterministic."""
    fill = f"#{style.fill_hex}"
    line = _css_color(style.line_hex)
    on = _fmt_num(style.stripe_on_px)
    period = _fmt_num(style.period_px)
    angle = _fmt_num(style.angle_deg)
    return (
        f"repeating-linear-gradient({angle}deg, {fill}, {fill} {on}px, "
        f"{line} {on}px, {line} {period}px)"
    )


def css_stripes(style: ClassStyle) -> str:
    """Full marker declaration: square size plus the striped background."""
    side = _fmt_num(style.marker_px)
    return f"width: {side}px; height: {side}px; background: {css_gradient(style)};"


def svg_stripe_pattern(style: ClassStyle, pattern_id: str) -> str:
    """SVG <pattern> definition tiling the stripe field for one class.

    The base tile is a period-sized square of horizontal bands; non-zero
    angles rotate it via patternTransform.
    """
    p = _fmt_num(style.period_px)
    on = _fmt_num(style.stripe_on_px)
    off = _fmt_num(style.stripe_off_px)
    transform = "" if style.angle_deg == 0 else f' patternTransform="rotate({_fmt_num(style.angle_deg)})"'
    return (
        f'<pattern id="{pattern_id}" width="{p}" height="{p}" patternUnits="userSpaceOnUse"{transform}>'
        f'<rect width="{p}" height="{p}" fill="#{style.fill_hex}"/>'
        f'<rect y="{on}" width="{p}" height="{off}" fill="#{style.line_hex}"/>'
        f"</pattern>"
    )


def assemble_pattern_defs(patterns: list[tuple[ClassStyle, str]]) -> str:
    """Concatenate pattern definitions, rejecting duplicate ids."""
    seen = set()
    for _, pattern_id in patterns:
        if pattern_id in seen:
            raise ValueError(f"duplicate pattern id {pattern_id!r} in one document")
        seen.add(pattern_id)
    return "".join(svg_stripe_pattern(style, pid) for style, pid in patterns)


@dataclass(frozen=True)
class StripeTile:
    width: int
    height: int
    pixels: np.ndarray = field(repr=False)  # uint8, shape (height, width, 4)
    seamless: bool = True

    def to_png(self) -> bytes:
        buf = io.BytesIO()
        Image.fromarray(self.pixels, mode="RGBA").save(buf, format="PNG")
        return buf.getvalue()


def _hex_rgba(hex_color: str) -> np.ndarray:
    return np.array(
        [int(hex_color[i : i + 2], 16) for i in (0, 2, 4)] + [255], dtype=np.float64
    )


def stripe_phase(x: float, y: float, angle_deg: float, axis_period: float) -> float:
    """Phase in [0, axis_period) of the stripe field at a raster position.

    For the lattice-exact angles the phase is an integer-friendly linear form
    so translation by the tile size wraps it exactly.
    """
    if angle_deg == 0.0:
        t = y
    elif angle_deg == 90.0:
        t = x
    elif angle_deg == 45.0:
        t = x - y
    elif angle_deg == 135.0:
        t = x + y
    else:
        rad = math.radians(angle_deg)
        t = x * math.sin(rad) - y * math.cos(rad)
    return t % axis_period


def raster_stripe_tile(style: ClassStyle, supersample: int = 4) -> StripeTile:
    """Smallest raster tile whose translation copies reproduce the stripe field.

    Horizontal stripes tile as 1 x period, vertical as period x 1; the two
    diagonals use a square of side round(period * sqrt(2)) with anti-aliased
    band edges. Other angles produce an approximate tile with the same
    machinery (seams up to one pixel per repeat) and are flagged not seamless.
    """
    period = style.period_px
    angle = style.angle_deg % 180.0
    fill = _hex_rgba(style.fill_hex)
    line = _hex_rgba(style.line_hex)

    if angle == 0.0:
        w, h = 1, int(round(period))
        axis_period = float(h)
    elif angle == 90.0:
        w, h = int(round(period)), 1
        axis_period = float(w)
    elif angle in (45.0, 135.0):
        side = int(round(period * math.sqrt(2.0)))
        w = h = side
        axis_period = float(side)
    else:
        # Approximate mode: true stripe geometry, seams of up to one pixel
        # per repeat where the tile side is not a multiple of the period.
        side = max(1, min(MAX_TILE_SIDE, int(round(1.5 * period))))
        w = h = side
        axis_period = period
    seamless = angle in SEAMLESS_ANGLES

    fill_frac = style.stripe_on_px / period
    edge = fill_frac * axis_period

    ss = supersample
    pixels = np.zeros((h, w, 4), dtype=np.uint8)
    for py in range(h):
        for px in range(w):
            covered = 0
            for sy in range(ss):
                for sx in range(ss):
                    t = stripe_phase(px + (sx + 0.5) / ss, py + (sy + 0.5) / ss, angle, axis_period)
                    if t < edge:
                        covered += 1
            frac = covered / (ss * ss)
            pixels[py, px] = np.clip(np.rint(fill * frac + line * (1.0 - frac)), 0, 255)
    return StripeTile(width=w, height=h, pixels=pixels, seamless=seamless)


def format_bound(v: float, precision: int = 1) -> str:
    return f"{v:.{precision}f}"


def legend_spec(
    c: Classification,
    p: Palette,
    map_type: str = "choropleth",
    indicator: str = "",
    unit: str = "",
    scheme: str = SCHEME_SPREAD,
    precision: int = 1,
) -> LegendSpec:
    """Legend rows for a classification, lowest class first, then "no data"."""
    if p.k != c.k:
        raise ValueError(f"palette has {p.k} classes but classification has {c.k}")
    styles = class_styles(p, scheme)
    rows = []
    for i, (lo, hi) in enumerate(c.breaks.bounds):
        label = f"{format_bound(lo, precision)} – {format_bound(hi, precision)}"
        rows.append(LegendRow(label=label, style=styles[i]))
    title = f"{indicator} ({unit})" if indicator and unit else indicator or unit
    return LegendSpec(
        title=title,
        rows=tuple(rows),
        missing_hex=p.missing_hex,
        map_type=map_type,
        symbol_hex=p.entries[-1].hex if map_type == "gsm" else "",
    )
