import json
from pathlib import Path

import pytest

from chorient.ingest import FeatureSet, IndicatorSeries, parse_geojson, parse_indicator

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def square_feature(code: str, name: str, cx: float, cy: float, half: float = 1.0, clockwise: bool = False):
    ring = [
        [cx - half, cy - half],
        [cx + half, cy - half],
        [cx + half, cy + half],
        [cx - half, cy + half],
        [cx - half, cy - half],
    ]
    if clockwise:
        ring = ring[::-1]
    return {
        "type": "Feature",
        "properties": {"ISO3": code, "NAME": name},
        "geometry": {"type": "Polygon", "coordinates": [ring]},
    }


def collection(*features) -> bytes:
    return json.dumps({"type": "FeatureCollection", "features": list(features)}).encode()


def series_doc(values: dict, *, sid="test_series", goal=3, indicator="Test indicator", unit="units") -> bytes:
    return json.dumps(
        {"id": sid, "goal": goal, "indicator": indicator, "unit": unit, "values": values}
    ).encode()


def make_series(values: dict, **kwargs) -> IndicatorSeries:
    return parse_indicator(series_doc(values, **kwargs))


@pytest.fixture
def three_countries() -> FeatureSet:
    return parse_geojson(
        collection(
            square_feature("DEU", "Germany", 10.0, 51.0),
            square_feature("FRA", "France", 2.0, 47.0),
            square_feature("FIN", "Finland", 26.0, 64.0),
        )
    )


@pytest.fixture(scope="session")
def europe_paths():
    return (
        FIXTURES / "europe.geojson",
        [FIXTURES / "life_expectancy.json", FIXTURES / "poverty_risk.json"],
    )


@pytest.fixture(scope="session")
def europe_workspace(europe_paths):
    from chorient.workspace import Workspace

    geometry, datasets = europe_paths
    return Workspace.load(geometry, datasets)
