"""Comparison queries over classified indicator data.

Answers are given at class granularity: two countries compare as equal when
the map shows them in the same class, because that is what a reader of the
legend can actually tell apart. Raw-value comparison is available behind a
flag for the trend and distribution queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import Classification, classify_year
from .ingest import FeatureSet, IndicatorSeries

RELATIONS = ("same", "higher", "lower")
DIRECTIONS = ("increase", "decrease", "stable")


@dataclass(frozen=True)
class TrendResult:
    direction: str
    delta: float
    class_delta: int

    def to_jsonable(self) -> dict:
        return {"direction": self.direction, "delta": self.delta, "classDelta": self.class_delta}


@dataclass(frozen=True)
class DistributionResult:
    years: list[int]
    excluded_years: list[int] = field(default_factory=list)

    def to_jsonable(self) -> dict:
        return {"years": list(self.years), "excludedYears": list(self.excluded_years)}


def _ref_class(c: Classification, ref: str) -> int:
    if ref not in c.classes:
        raise KeyError(f"unknown country {ref!r}")
    cls = c.classes[ref]
    if cls is None:
        raise ValueError(f"reference has no data: {ref} in {c.year}")
    return cls


def clusters_query(c: Classification, ref: str, relation: str = "same") -> set[str]:
    """Countries whose class is equal to / above / below the reference's."""
    if relation not in RELATIONS:
        raise ValueError(f"relation must be one of {RELATIONS}, got {relation!r}")
    ref_cls = _ref_class(c, ref)
    out = set()
    for cid, cls in c.classes.items():
        if cid == ref or cls is None:
            continue
        if relation == "same" and cls == ref_cls:
            out.add(cid)
        elif relation == "higher" and cls > ref_cls:
            out.add(cid)
        elif relation == "lower" and cls < ref_cls:
            out.add(cid)
    return out


def frequency_query(c: Classification, ref: str, relation: str = "fewer") -> int:
    """How many countries fall below / at / above the reference's class."""
    mapped = {"fewer": "lower", "same": "same", "higher": "higher"}.get(relation)
    if mapped is None:
        raise ValueError(f"relation must be fewer, same or higher, got {relation!r}")
    return len(clusters_query(c, ref, mapped))


def trend_query(
    s: IndicatorSeries,
    country: str,
    y0: int,
    y1: int,
    fs: FeatureSet | None = None,
    k: int = 4,
    epsilon: float = 0.0,
) -> TrendResult:
    """Change of one country's value and class between two years."""
    if y0 >= y1:
        raise ValueError(f"year range must be ascending, got {y0}..{y1}")
    v0 = s.value(country, y0)
    v1 = s.value(country, y1)
    missing = [y for y, v in ((y0, v0), (y1, v1)) if v is None]
    if missing:
        raise ValueError(f"{country} has no value for {', '.join(str(y) for y in missing)}")
    delta = v1 - v0
    if delta > epsilon:
        direction = "increase"
    elif delta < -epsilon:
        direction = "decrease"
    else:
        direction = "stable"
    fs = fs or FeatureSet(features=())
    c0 = classify_year(fs, s, y0, k).classes[country]
    c1 = classify_year(fs, s, y1, k).classes[country]
    return TrendResult(direction=direction, delta=delta, class_delta=c1 - c0)


def distribution_query(
    s: IndicatorSeries,
    a: str,
    b: str,
    years: tuple[int, int],
    mode: str = "differ",
    fs: FeatureSet | None = None,
    k: int = 4,
    raw_values: bool = False,
) -> DistributionResult:
    """Years in the range where two countries agree or differ.

    Years where either country is missing are excluded and reported, so the
    same/differ/excluded sets always partition the range.
    """
    if mode not in ("same", "differ"):
        raise ValueError(f"mode must be same or differ, got {mode!r}")
    fs = fs or FeatureSet(features=())
    a_eq_b = a == b
    y0, y1 = years
    if y0 > y1:
        raise ValueError(f"invalid year range {years}")
    matched: list[int] = []
    excluded: list[int] = []
    for year in range(y0, y1 + 1):
        va = s.value(a, year)
        vb = s.value(b, year)
        if va is None or vb is None:
            excluded.append(year)
            continue
        if raw_values or a_eq_b:
            equal = va == vb
        else:
            classes = classify_year(fs, s, year, k).classes
            equal = classes[a] == classes[b]
        if equal == (mode == "same"):
            matched.append(year)
    return DistributionResult(years=matched, excluded_years=excluded)
