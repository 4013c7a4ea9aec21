"""Thematic map engine: classed indicator time series rendered as choropleth,
graduated-symbol, choriented and choriented-mobile maps."""

from .classify import Breaks, Classification, classify_year, jenks_breaks
from .colorlab import LabColor, Palette, ciede2000, srgb_to_lab, study_palette, validate_palette
from .geom import AnchorPoint, Viewport, pole_of_inaccessibility, polygon_centroid, project
from .ingest import (
    Feature,
    FeatureSet,
    IndicatorSeries,
    JoinReport,
    join,
    parse_geojson,
    parse_indicator,
)
from .query import clusters_query, distribution_query, frequency_query, trend_query
from .render import RenderOptions, RenderRequest, SvgDocument, render_legend, render_map, render_popup
from .stats import BenchReport, BootstrapResult, bench_render, bootstrap_diff
from .symbolize import (
    ClassStyle,
    LegendSpec,
    css_stripes,
    gsm_radii,
    legend_spec,
    orientation_angles,
    raster_stripe_tile,
    svg_stripe_pattern,
)
from .workspace import Workspace

__version__ = "0.1.0"
