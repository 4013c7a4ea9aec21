"""Joined render-ready state: geometry plus indicator datasets with caches.

A workspace is read-only after load. Classification and anchor caches are
write-once behind a lock so concurrent renders compute each entry once.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from pathlib import Path

from . import geom
from .classify import Classification, classify_year
from .geom import AnchorPoint, Viewport
from .ingest import FeatureSet, IndicatorSeries, JoinReport, join, parse_geojson, parse_indicator

DEFAULT_ANCHOR_PRECISION = 1.0


@dataclass
class Workspace:
    feature_set: FeatureSet
    datasets: dict[str, IndicatorSeries]
    join_reports: dict[str, JoinReport] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    _classifications: dict = field(default_factory=dict, repr=False)
    _anchors: dict = field(default_factory=dict, repr=False)

    @classmethod
    def load(cls, geometry_path: str | Path, dataset_paths: list[str | Path]) -> "Workspace":
        fs = parse_geojson(Path(geometry_path).read_bytes())
        datasets: dict[str, IndicatorSeries] = {}
        for p in dataset_paths:
            series = parse_indicator(Path(p).read_bytes())
            if series.id in datasets:
                raise ValueError(f"duplicate dataset id {series.id!r}")
            datasets[series.id] = series
        ws = cls(feature_set=fs, datasets=datasets)
        ws.join_reports = {sid: join(fs, s) for sid, s in datasets.items()}
        return ws

    def dataset(self, dataset_id: str) -> IndicatorSeries:
        try:
            return self.datasets[dataset_id]
        except KeyError:
            raise KeyError(f"unknown dataset {dataset_id!r}") from None

    def classification(self, dataset_id: str, year: int, k: int = 4) -> Classification:
        key = (dataset_id, year, k)
        cached = self._classifications.get(key)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._classifications.get(key)
            if cached is None:
                cached = classify_year(self.feature_set, self.dataset(dataset_id), year, k)
                self._classifications[key] = cached
        return cached

    def anchors(self, vp: Viewport, precision: float = DEFAULT_ANCHOR_PRECISION) -> dict[str, AnchorPoint]:
        """Pole of inaccessibility per feature, projected into the viewport.

        Computed on the largest part of multipolygons and cached per
        viewport, which keeps repeated renders byte-identical.
        """
        key = (vp.width_px, vp.height_px, vp.bounds, precision)
        cached = self._anchors.get(key)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._anchors.get(key)
            if cached is None:
                cached = {}
                for f in self.feature_set.features:
                    projected = [geom.project_rings(part, vp) for part in f.parts]
                    part = geom.largest_part(projected)
                    cached[f.id] = geom.pole_of_inaccessibility(part, precision)
                self._anchors[key] = cached
        return cached

    def geometry_bounds(self, pad_fraction: float = 0.02) -> tuple[float, float, float, float]:
        """Padded lon/lat bounding box of all features, Mercator-band safe."""
        lons = [pt[0] for f in self.feature_set.features for part in f.parts for ring in part for pt in ring]
        lats = [pt[1] for f in self.feature_set.features for part in f.parts for ring in part for pt in ring]
        if not lons:
            raise ValueError("workspace has no geometry")
        pad_lon = (max(lons) - min(lons)) * pad_fraction or 1.0
        pad_lat = (max(lats) - min(lats)) * pad_fraction or 1.0
        from .ingest import MAX_SAFE_LAT

        return (
            max(-180.0, min(lons) - pad_lon),
            max(-MAX_SAFE_LAT, min(lats) - pad_lat),
            min(180.0, max(lons) + pad_lon),
            min(MAX_SAFE_LAT, max(lats) + pad_lat),
        )

    def default_viewport(self, width_px: int = 800, height_px: int = 600) -> Viewport:
        return Viewport(width_px, height_px, self.geometry_bounds())
