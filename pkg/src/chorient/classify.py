"""Jenks natural-breaks classification of indicator values.

Breaks are recomputed per selected year; countries without a value for the
year are excluded from break computation and assigned ``None``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ingest import FeatureSet, IndicatorSeries


@dataclass(frozen=True)
class Breaks:
    """Contiguous class intervals over the classified values.

    ``bounds[i]`` is the (min, max) of the values in class i. A value on a
    boundary shared by two classes belongs to the lower class.
    """

    k: int
    bounds: tuple[tuple[float, float], ...]
    gvf: float
    sdcm: float

    def class_of(self, v: float) -> int:
        for i, (_, hi) in enumerate(self.bounds):
            if v <= hi:
                return i
        return self.k - 1

    def to_jsonable(self) -> dict:
        return {
            "k": self.k,
            "bounds": [[lo, hi] for lo, hi in self.bounds],
            "gvf": self.gvf,
        }


@dataclass(frozen=True)
class Classification:
    dataset_id: str
    year: int
    breaks: Breaks
    classes: dict[str, int | None]  # country id -> class index, None = missing

    @property
    def k(self) -> int:
        return self.breaks.k

    def to_jsonable(self) -> dict:
        return {
            "dataset": self.dataset_id,
            "year": self.year,
            "breaks": self.breaks.to_jsonable(),
            "classes": dict(self.classes),
        }


def _sse(vs: list[float]) -> float:
    mean = math.fsum(vs) / len(vs)
    return math.fsum((v - mean) ** 2 for v in vs)


def jenks_breaks(values: list[float], k: int) -> Breaks:
    """Optimal k-class partition of the values minimizing within-class SSE.

    Exact dynamic programming over the sorted values (Fisher's optimal
    partitioning), O(k n^2). Among partitions with equal cost the one with
    the lexicographically smallest break sequence is returned.
    """
    if k <= 0:
        raise ValueError(f"class count must be positive, got {k}")
    if not values:
        raise ValueError("cannot classify an empty value list")
    if any(not math.isfinite(v) for v in values):
        raise ValueError("values must be finite")
    vs = sorted(float(v) for v in values)
    n = len(vs)
    if k > len(set(vs)):
        raise ValueError(f"class count {k} exceeds {len(set(vs))} distinct values")

    # Prefix sums give O(1) within-class SSE for any [i, j] slice.
    pre = [0.0] * (n + 1)
    pre2 = [0.0] * (n + 1)
    for i, v in enumerate(vs):
        pre[i + 1] = pre[i] + v
        pre2[i + 1] = pre2[i] + v * v

    def cost(i: int, j: int) -> float:
        w = j - i + 1
        s = pre[j + 1] - pre[i]
        return max(0.0, (pre2[j + 1] - pre2[i]) - s * s / w)

    # suffix[m][i]: minimal cost of splitting vs[i:] into m classes.
    inf = math.inf
    suffix = [[inf] * (n + 1) for _ in range(k + 1)]
    suffix[0][n] = 0.0
    for m in range(1, k + 1):
        for i in range(n - 1, -1, -1):
            best = inf
            for e in range(i, n - m + 1):
                tail = suffix[m - 1][e + 1]
                if tail == inf:
                    continue
                c = cost(i, e) + tail
                if c < best:
                    best = c
            suffix[m][i] = best

    # Reconstruct left to right, preferring the earliest split on ties.
    cuts = []
    i = 0
    for m in range(k, 1, -1):
        for e in range(i, n - m + 1):
            if cost(i, e) + suffix[m - 1][e + 1] == suffix[m][i]:
                cuts.append(e + 1)
                i = e + 1
                break
    idx = [0, *cuts, n]
    classes = [vs[idx[t] : idx[t + 1]] for t in range(k)]
    bounds = tuple((c[0], c[-1]) for c in classes)
    sdcm = math.fsum(_sse(c) for c in classes)
    sdam = _sse(vs)
    gvf = 1.0 if sdam == 0.0 else 1.0 - sdcm / sdam
    return Breaks(k=k, bounds=bounds, gvf=gvf, sdcm=sdcm)


def classify_year(fs: FeatureSet, s: IndicatorSeries, year: int, k: int = 4) -> Classification:
    """Classify every joined country for one year.

    Breaks come from the values present for that year only. When fewer than
    ``k`` distinct values exist the effective class count drops to match.
    """
    present = {cid: v for cid, v in s.values_for_year(year).items()}
    if not present:
        raise ValueError(f"empty year: no country has a value for {year}")
    distinct = len(set(present.values()))
    breaks = jenks_breaks(list(present.values()), min(k, distinct))

    ids = [f.id for f in fs.features]
    all_ids = dict.fromkeys(ids)
    for cid in present:
        all_ids.setdefault(cid, None)
    classes: dict[str, int | None] = {}
    for cid in all_ids:
        v = present.get(cid)
        classes[cid] = None if v is None else breaks.class_of(v)
    return Classification(dataset_id=s.id, year=year, breaks=breaks, classes=classes)


def equal_interval_breaks(values: list[float], k: int) -> list[float]:
    """Reference classifier used only by tests: k equal-width upper bounds."""
    lo, hi = min(values), max(values)
    step = (hi - lo) / k
    return [lo + step * (i + 1) for i in range(k)]
