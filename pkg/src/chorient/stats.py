"""Rendering benchmark harness and bootstrap effect-size analysis."""

from __future__ import annotations

import platform
import time
from dataclasses import dataclass
from statistics import NormalDist

import numpy as np

from .geom import Viewport
from .render import MAP_TYPES, RenderOptions, RenderRequest, render_map
from .workspace import Workspace

DEFAULT_ITERATIONS = 10
DEFAULT_RESAMPLES = 2000
_NORMAL = NormalDist()


@dataclass(frozen=True)
class TypeBench:
    iterations: int
    millis: list[float]
    mean: float
    min: float
    max: float

    def to_jsonable(self) -> dict:
        return {
            "iterations": self.iterations,
            "millis": list(self.millis),
            "mean": self.mean,
            "min": self.min,
            "max": self.max,
        }


@dataclass(frozen=True)
class BenchReport:
    per_type: dict[str, TypeBench]
    environment: str

    def to_jsonable(self) -> dict:
        return {
            "perType": {t: b.to_jsonable() for t, b in self.per_type.items()},
            "environment": self.environment,
        }


def bench_render(
    workspace: Workspace,
    iterations: int = DEFAULT_ITERATIONS,
    viewport: Viewport | None = None,
    dataset_id: str | None = None,
    year: int | None = None,
    k: int = 4,
) -> BenchReport:
    """Time full renders of all four map types over the same request.

    One unrecorded warm-up render per type excludes cold-start work such as
    anchor computation from the recorded samples.
    """
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    if dataset_id is None:
        dataset_id = sorted(workspace.datasets)[0]
    series = workspace.dataset(dataset_id)
    if year is None:
        year = series.years()[-1]
    vp = viewport or workspace.default_viewport()

    per_type: dict[str, TypeBench] = {}
    for map_type in MAP_TYPES:
        req = RenderRequest(
            workspace=workspace,
            dataset_id=dataset_id,
            year=year,
            map_type=map_type,
            viewport=vp,
            options=RenderOptions(classes=k),
        )
        render_map(req)  # warm-up, not recorded
        samples = []
        for _ in range(iterations):
            t0 = time.perf_counter()
            render_map(req)
            samples.append((time.perf_counter() - t0) * 1000.0)
        per_type[map_type] = TypeBench(
            iterations=iterations,
            millis=samples,
            mean=sum(samples) / len(samples),
            min=min(samples),
            max=max(samples),
        )
    env = f"{platform.platform()} / Python {platform.python_version()}"
    return BenchReport(per_type=per_type, environment=env)


@dataclass(frozen=True)
class BootstrapResult:
    diff: float
    ci_low: float
    ci_high: float
    bias: float
    se: float
    n: int
    significant: bool
    method: str = "bca"

    def to_jsonable(self) -> dict:
        return {
            "diff": self.diff,
            "ciLow": self.ci_low,
            "ciHigh": self.ci_high,
            "bias": self.bias,
            "se": self.se,
            "n": self.n,
            "significant": self.significant,
            "method": self.method,
        }


def _percentile_ci(stats: np.ndarray, level: float) -> tuple[float, float]:
    alpha = (1.0 - level) / 2.0
    return (
        float(np.percentile(stats, 100.0 * alpha)),
        float(np.percentile(stats, 100.0 * (1.0 - alpha))),
    )


def _bca_ci(
    stats: np.ndarray, theta_hat: float, jackknife: np.ndarray, level: float
) -> tuple[tuple[float, float], str]:
    """Bias-corrected and accelerated bounds, falling back to percentile.

    Falls back when the bias correction or acceleration is undefined, which
    happens for degenerate (zero-variance) resample distributions.
    """
    n = len(stats)
    below = float(np.count_nonzero(stats < theta_hat))
    prop = below / n
    if prop <= 0.0 or prop >= 1.0:
        return _percentile_ci(stats, level), "percentile"
    z0 = _NORMAL.inv_cdf(prop)
    jack_mean = jackknife.mean()
    dev = jack_mean - jackknife
    denom = (dev**2).sum() ** 1.5
    if denom == 0.0:
        return _percentile_ci(stats, level), "percentile"
    a = (dev**3).sum() / (6.0 * denom)

    alpha = (1.0 - level) / 2.0
    bounds = []
    for z_alpha in (_NORMAL.inv_cdf(alpha), _NORMAL.inv_cdf(1.0 - alpha)):
        adj = z0 + (z0 + z_alpha) / (1.0 - a * (z0 + z_alpha))
        bounds.append(float(np.percentile(stats, 100.0 * _NORMAL.cdf(adj))))
    return (bounds[0], bounds[1]), "bca"


def bootstrap_diff(
    group_a,
    group_b,
    n: int = DEFAULT_RESAMPLES,
    seed: int = 0,
    level: float = 0.95,
) -> BootstrapResult:
    """Bootstrap the difference of group means with a 95% CI.

    Both groups are resampled independently with replacement from a seeded
    generator. The result is antisymmetric by construction: swapping the
    groups negates the difference and mirrors the interval exactly.
    """
    a = np.asarray(list(group_a), dtype=np.float64)
    b = np.asarray(list(group_b), dtype=np.float64)
    if a.size == 0 or b.size == 0:
        raise ValueError("both groups must be non-empty")
    if n < 1:
        raise ValueError("resample count must be at least 1")

    # Canonical ordering keeps the resample streams attached to the groups
    # themselves, so calling with swapped arguments mirrors the result.
    swapped = (a.size, *a.tolist()) > (b.size, *b.tolist())
    g1, g2 = (b, a) if swapped else (a, b)

    rng = np.random.default_rng(seed)
    idx1 = rng.integers(0, g1.size, size=(n, g1.size))
    idx2 = rng.integers(0, g2.size, size=(n, g2.size))
    stats = g1[idx1].mean(axis=1) - g2[idx2].mean(axis=1)
    theta_hat = float(g1.mean() - g2.mean())

    # Jackknife over every observation of both groups for the acceleration.
    jack = []
    for i in range(g1.size):
        jack.append(float(np.delete(g1, i).mean() - g2.mean()) if g1.size > 1 else theta_hat)
    for i in range(g2.size):
        jack.append(float(g1.mean() - np.delete(g2, i).mean()) if g2.size > 1 else theta_hat)
    jack = np.asarray(jack)

    (ci_low, ci_high), method = _bca_ci(stats, theta_hat, jack, level)
    bias = float(stats.mean() - theta_hat)
    se = float(stats.std(ddof=1)) if n > 1 else 0.0

    if swapped:
        theta_hat, bias = -theta_hat, -bias
        ci_low, ci_high = -ci_high, -ci_low
    significant = not (ci_low <= 0.0 <= ci_high)
    return BootstrapResult(
        diff=theta_hat,
        ci_low=ci_low,
        ci_high=ci_high,
        bias=bias,
        se=se,
        n=n,
        significant=significant,
        method=method,
    )
