"""Generate the committed Europe demo fixtures (geometry + two indicator files).

Shapes are synthetic blobs keyed by real ISO-3 codes, placed on a rough map
of Europe. Deterministic: re-running reproduces the same files byte for byte.
"""

from __future__ import annotations

import json
import math
import random
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parents[1] / "fixtures"

# code, name, approx center (lon, lat), size scale
COUNTRIES = [
    ("PRT", "Portugal", -8.0, 39.6, 1.0),
    ("ESP", "Spain", -3.7, 40.3, 2.2),
    ("FRA", "France", 2.5, 46.6, 2.4),
    ("IRL", "Ireland", -8.2, 53.2, 1.0),
    ("GBR", "United Kingdom", -1.5, 53.0, 1.7),
    ("BEL", "Belgium", 4.6, 50.7, 0.7),
    ("NLD", "Netherlands", 5.4, 52.3, 0.7),
    ("LUX", "Luxembourg", 6.1, 49.7, 0.35),
    ("CHE", "Switzerland", 8.2, 46.9, 0.8),
    ("DEU", "Germany", 10.2, 51.2, 2.0),
    ("DNK", "Denmark", 9.3, 56.0, 0.8),
    ("NOR", "Norway", 8.8, 61.5, 1.9),
    ("SWE", "Sweden", 15.5, 62.2, 2.1),
    ("FIN", "Finland", 26.0, 63.8, 1.9),
    ("EST", "Estonia", 25.6, 58.8, 0.75),
    ("LVA", "Latvia", 24.9, 56.9, 0.8),
    ("LTU", "Lithuania", 23.9, 55.2, 0.8),
    ("POL", "Poland", 19.3, 52.1, 1.8),
    ("CZE", "Czechia", 15.4, 49.8, 0.9),
    ("SVK", "Slovakia", 19.5, 48.7, 0.8),
    ("AUT", "Austria", 14.5, 47.5, 1.0),
    ("HUN", "Hungary", 19.4, 47.1, 1.0),
    ("GRC", "Greece", 22.0, 39.3, 1.2),
    ("ITA", "Italy", 12.5, 43.0, 1.6),  # rendered as two parts, mainland with a hole
]

VERTICES = 140


def blob(cx: float, cy: float, scale: float, rng: random.Random, vertices: int = VERTICES):
    """Closed wavy ring around (cx, cy), counterclockwise."""
    phase1 = rng.uniform(0, 2 * math.pi)
    phase2 = rng.uniform(0, 2 * math.pi)
    amp1 = rng.uniform(0.08, 0.2)
    amp2 = rng.uniform(0.04, 0.12)
    ring = []
    for i in range(vertices):
        t = 2 * math.pi * i / vertices
        r = scale * (1.0 + amp1 * math.sin(3 * t + phase1) + amp2 * math.sin(7 * t + phase2))
        ring.append([round(cx + r * math.cos(t), 4), round(cy + 0.7 * r * math.sin(t), 4)])
    ring.append(ring[0])
    return ring


def main():
    rng = random.Random(20210521)
    features = []
    for code, name, lon, lat, scale in COUNTRIES:
        if code == "ITA":
            mainland = blob(lon, lat + 0.5, scale, rng)
            hole = blob(lon + 0.2, lat + 0.6, scale * 0.12, rng, vertices=24)
            hole.reverse()  # clockwise hole
            island = blob(lon - 3.6, lat - 4.0, scale * 0.45, rng, vertices=60)
            geometry = {"type": "MultiPolygon", "coordinates": [[mainland, hole], [island]]}
        else:
            geometry = {"type": "Polygon", "coordinates": [blob(lon, lat, scale, rng)]}
        features.append(
            {"type": "Feature", "properties": {"ISO3": code, "NAME": name}, "geometry": geometry}
        )
    OUT_DIR.mkdir(exist_ok=True)
    geojson = {"type": "FeatureCollection", "features": features}
    (OUT_DIR / "europe.geojson").write_text(json.dumps(geojson) + "\n")

    # Life expectancy, 2000-2018 (19 years). NOR has no data at all; a few
    # other gaps exercise missing handling; XKX exists only in the data.
    rng = random.Random(42)
    life_values = {}
    gaps = {"LTU": {2003}, "GRC": {2001, 2002}, "EST": {2000}}
    for code, _, _, _, _ in COUNTRIES:
        if code == "NOR":
            continue
        base = rng.uniform(70.0, 81.0)
        slope = rng.uniform(0.05, 0.25)
        table = {}
        for year in range(2000, 2019):
            if year in gaps.get(code, ()):
                table[str(year)] = None
            else:
                noise = rng.uniform(-0.3, 0.3)
                table[str(year)] = round(base + slope * (year - 2000) + noise, 1)
        life_values[code] = table
    life_values["XKX"] = {str(y): round(68.0 + 0.2 * (y - 2000), 1) for y in range(2008, 2019)}
    life = {
        "id": "sdg3_life_expectancy",
        "goal": 3,
        "indicator": "Life expectancy at birth",
        "unit": "years",
        "values": life_values,
    }
    (OUT_DIR / "life_expectancy.json").write_text(json.dumps(life, indent=1) + "\n")

    # People at risk of poverty or social exclusion, 2005-2018.
    rng = random.Random(7)
    pov_values = {}
    for code, _, _, _, _ in COUNTRIES:
        if code in ("NOR", "CHE"):
            continue
        base = rng.uniform(14.0, 34.0)
        slope = rng.uniform(-0.6, 0.3)
        table = {}
        for year in range(2005, 2019):
            noise = rng.uniform(-0.8, 0.8)
            table[str(year)] = round(max(5.0, base + slope * (year - 2005) + noise), 1)
        pov_values[code] = table
    poverty = {
        "id": "sdg1_poverty_risk",
        "goal": 1,
        "indicator": "People at risk of poverty or social exclusion",
        "unit": "%",
        "values": pov_values,
    }
    (OUT_DIR / "poverty_risk.json").write_text(json.dumps(poverty, indent=1) + "\n")
    print(f"wrote fixtures to {OUT_DIR}")


if __name__ == "__main__":
    main()
