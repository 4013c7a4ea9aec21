"""Colour pipeline: sRGB to CIELAB conversion, CIEDE2000 distance, sequential palettes.

All Lab values use the D65 white point of the standard sRGB pipeline.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

# Just-noticeable-difference style thresholds for palette validation.
MIN_ADJACENT_DELTA_E = 2.0
RECOMMENDED_MEAN_DELTA_E = 9.0

MISSING_HEX = "737373"

_HEX_RE = re.compile(r"^[0-9a-fA-F]{6}$")

# D65 reference white (2-degree observer), linear-RGB -> XYZ matrix per IEC 61966-2-1.
_WHITE = (0.95047, 1.0, 1.08883)
_RGB_TO_XYZ = (
    (0.4124564, 0.3575761, 0.1804375),
    (0.2126729, 0.7151522, 0.0721750),
    (0.0193339, 0.1191920, 0.9503041),
)


class ColorError(ValueError):
    pass


@dataclass(frozen=True)
class LabColor:
    """CIELAB coordinates; L in [0, 100], a/b signed chroma axes."""

    L: float
    a: float
    b: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.L, self.a, self.b)):
            raise ColorError("Lab components must be finite")
        if not 0.0 <= self.L <= 100.0:
            raise ColorError(f"L out of range: {self.L}")


@dataclass(frozen=True)
class PaletteEntry:
    hex: str
    lab: LabColor


@dataclass(frozen=True)
class Palette:
    """Sequential class colours, lightest (lowest class) to darkest."""

    k: int
    entries: tuple[PaletteEntry, ...]
    missing_hex: str = MISSING_HEX

    def to_jsonable(self) -> dict:
        return {
            "k": self.k,
            "entries": [
                {"hex": e.hex, "lab": {"L": e.lab.L, "a": e.lab.a, "b": e.lab.b}}
                for e in self.entries
            ],
            "missingHex": self.missing_hex,
        }


@dataclass(frozen=True)
class PaletteDiagnostic:
    severity: str  # "error" | "warning"
    message: str


def _parse_hex(hex_color: str) -> tuple[float, float, float]:
    s = hex_color.lstrip("#")
    if not _HEX_RE.match(s):
        raise ColorError(f"malformed hex colour: {hex_color!r}")
    return tuple(int(s[i : i + 2], 16) / 255.0 for i in (0, 2, 4))


def srgb_to_lab(hex_color: str) -> LabColor:
    """Convert a 6-digit sRGB hex string to CIELAB (D65).

    Gamma expansion per the sRGB transfer curve, then linear RGB -> XYZ -> Lab.
    """
    rgb = _parse_hex(hex_color)
    lin = [c / 12.92 if c <= 0.04045 else ((c + 0.055) / 1.055) ** 2.4 for c in rgb]
    xyz = [sum(m * c for m, c in zip(row, lin)) for row in _RGB_TO_XYZ]

    eps = (6.0 / 29.0) ** 3

    def f(t: float) -> float:
        return t ** (1.0 / 3.0) if t > eps else t / (3.0 * (6.0 / 29.0) ** 2) + 4.0 / 29.0

    fx, fy, fz = (f(c / w) for c, w in zip(xyz, _WHITE))
    return LabColor(116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz))


def ciede2000(x: LabColor, y: LabColor) -> float:
    """CIEDE2000 colour difference, including the rotation term.

    Follows the implementation notes of Sharma, Wu and Dalal (2005), in
    particular the hue-average and zero-chroma edge cases.
    """
    L1, a1, b1 = x.L, x.a, x.b
    L2, a2, b2 = y.L, y.a, y.b

    C1 = math.hypot(a1, b1)
    C2 = math.hypot(a2, b2)
    c_bar = (C1 + C2) / 2.0
    G = 0.5 * (1.0 - math.sqrt(c_bar**7 / (c_bar**7 + 25.0**7)))
    a1p = a1 * (1.0 + G)
    a2p = a2 * (1.0 + G)
    C1p = math.hypot(a1p, b1)
    C2p = math.hypot(a2p, b2)

    def hue(ap: float, b: float) -> float:
        if ap == 0.0 and b == 0.0:
            return 0.0
        h = math.degrees(math.atan2(b, ap))
        return h + 360.0 if h < 0.0 else h

    h1p = hue(a1p, b1)
    h2p = hue(a2p, b2)

    dLp = L2 - L1
    dCp = C2p - C1p
    if C1p * C2p == 0.0:
        dhp = 0.0
    elif abs(h2p - h1p) <= 180.0:
        dhp = h2p - h1p
    elif h2p - h1p > 180.0:
        dhp = h2p - h1p - 360.0
    else:
        dhp = h2p - h1p + 360.0
    dHp = 2.0 * math.sqrt(C1p * C2p) * math.sin(math.radians(dhp) / 2.0)

    l_bar = (L1 + L2) / 2.0
    cp_bar = (C1p + C2p) / 2.0
    if C1p * C2p == 0.0:
        hp_bar = h1p + h2p
    elif abs(h1p - h2p) <= 180.0:
        hp_bar = (h1p + h2p) / 2.0
    elif h1p + h2p < 360.0:
        hp_bar = (h1p + h2p + 360.0) / 2.0
    else:
        hp_bar = (h1p + h2p - 360.0) / 2.0

    T = (
        1.0
        - 0.17 * math.cos(math.radians(hp_bar - 30.0))
        + 0.24 * math.cos(math.radians(2.0 * hp_bar))
        + 0.32 * math.cos(math.radians(3.0 * hp_bar + 6.0))
        - 0.20 * math.cos(math.radians(4.0 * hp_bar - 63.0))
    )
    S_L = 1.0 + 0.015 * (l_bar - 50.0) ** 2 / math.sqrt(20.0 + (l_bar - 50.0) ** 2)
    S_C = 1.0 + 0.045 * cp_bar
    S_H = 1.0 + 0.015 * cp_bar * T
    d_theta = 30.0 * math.exp(-(((hp_bar - 275.0) / 25.0) ** 2))
    R_C = 2.0 * math.sqrt(cp_bar**7 / (cp_bar**7 + 25.0**7))
    R_T = -math.sin(math.radians(2.0 * d_theta)) * R_C

    return math.sqrt(
        (dLp / S_L) ** 2
        + (dCp / S_C) ** 2
        + (dHp / S_H) ** 2
        + R_T * (dCp / S_C) * (dHp / S_H)
    )


# Sequential yellow-orange-brown ramps (ColorBrewer), lightest to darkest.
# The 4-class entry is the exact study set; 2 classes use the 3-class ramp
# endpoints since ColorBrewer starts at 3.
_YLORBR_RAMPS: dict[int, tuple[str, ...]] = {
    2: ("fff7bc", "d95f0e"),
    3: ("fff7bc", "fec44f", "d95f0e"),
    4: ("ffffe5", "fff7bc", "fee391", "fec44f"),
    5: ("ffffd4", "fed98e", "fe9929", "d95f0e", "993404"),
    6: ("ffffd4", "fee391", "fec44f", "fe9929", "d95f0e", "993404"),
    7: ("ffffd4", "fee391", "fec44f", "fe9929", "ec7014", "cc4c02", "8c2d04"),
    8: ("ffffe5", "fff7bc", "fee391", "fec44f", "fe9929", "ec7014", "cc4c02", "8c2d04"),
    9: ("ffffe5", "fff7bc", "fee391", "fec44f", "fe9929", "ec7014", "cc4c02", "993404", "662506"),
}


def study_palette(k: int) -> Palette:
    """Sequential palette for ``k`` classes with the grey missing-data colour."""
    if k not in _YLORBR_RAMPS:
        raise ColorError(f"unsupported class count {k}: palettes exist for k in 2..9")
    entries = tuple(PaletteEntry(h, srgb_to_lab(h)) for h in _YLORBR_RAMPS[k])
    return Palette(k=k, entries=entries, missing_hex=MISSING_HEX)


def validate_palette(p: Palette) -> list[PaletteDiagnostic]:
    """Check class separability and lightness ordering.

    Adjacent pairs below a ΔE2000 of 2.0 are errors (below the recommended
    minimum); a mean adjacent ΔE2000 below 9.0 is a warning. Lightness must
    strictly decrease so darker always means a higher class.
    """
    out: list[PaletteDiagnostic] = []
    deltas = []
    for i in range(len(p.entries) - 1):
        d = ciede2000(p.entries[i].lab, p.entries[i + 1].lab)
        deltas.append(d)
        if d < MIN_ADJACENT_DELTA_E:
            out.append(
                PaletteDiagnostic(
                    "error",
                    f"adjacent classes {i} and {i + 1}: ΔE2000 {d:.2f} below the "
                    f"recommended minimum {MIN_ADJACENT_DELTA_E}",
                )
            )
    if deltas:
        mean = sum(deltas) / len(deltas)
        if mean < RECOMMENDED_MEAN_DELTA_E:
            out.append(
                PaletteDiagnostic(
                    "warning",
                    f"mean adjacent ΔE2000 {mean:.2f} below {RECOMMENDED_MEAN_DELTA_E}",
                )
            )
    for i in range(len(p.entries) - 1):
        if not p.entries[i].lab.L > p.entries[i + 1].lab.L:
            out.append(
                PaletteDiagnostic(
                    "error",
                    f"lightness not strictly decreasing between classes {i} and {i + 1}",
                )
            )
    return out
