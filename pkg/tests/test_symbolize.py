import io
import math

import numpy as np
import pytest
from PIL import Image

from chorient.classify import Breaks, Classification
from chorient.colorlab import study_palette
from chorient.symbolize import (
    ClassStyle,
    SCHEME_HORIZONTAL_TO_VERTICAL,
    SCHEME_SPREAD,
    assemble_pattern_defs,
    class_styles,
    css_gradient,
    css_stripes,
    gsm_radii,
    legend_spec,
    orientation_angles,
    raster_stripe_tile,
    stripe_phase,
    svg_stripe_pattern,
)

LISTING_STYLE = ClassStyle(class_index=2, fill_hex="fee391", angle_deg=45.0)


def test_orientation_default_k4():
    assert orientation_angles(4) == [0.0, 45.0, 90.0, 135.0]


def test_orientation_horizontal_to_vertical_k4():
    assert orientation_angles(4, SCHEME_HORIZONTAL_TO_VERTICAL) == [0.0, 30.0, 60.0, 90.0]


def test_orientation_single_class():
    assert orientation_angles(1) == [0.0]
    assert orientation_angles(1, SCHEME_HORIZONTAL_TO_VERTICAL) == [0.0]


def test_orientation_rejects_bad_inputs():
    with pytest.raises(ValueError):
        orientation_angles(0)
    with pytest.raises(ValueError):
        orientation_angles(4, "diagonal")


@pytest.mark.parametrize("k", range(2, 10))
@pytest.mark.parametrize("scheme", [SCHEME_SPREAD, SCHEME_HORIZONTAL_TO_VERTICAL])
def test_orientation_angles_distinct_sorted_in_range(k, scheme):
    angles = orientation_angles(k, scheme)
    assert len(set(angles)) == k
    assert angles == sorted(angles)
    assert all(0.0 <= a < 180.0 for a in angles)


def test_css_gradient_reproduces_published_stops():
    got = css_gradient(LISTING_STYLE)
    assert got == "repeating-linear-gradient(45deg, #fee391, #fee391 20px, black 20px, black 40px)"


def test_css_stripes_angle_zero():
    style = ClassStyle(class_index=0, fill_hex="ffffe5", angle_deg=0.0)
    assert "repeating-linear-gradient(0deg, #ffffe5, #ffffe5 20px, black 20px, black 40px)" in css_stripes(style)


def test_css_stripes_marker_box():
    assert "width: 30px; height: 30px;" in css_stripes(LISTING_STYLE)


def test_css_stripes_custom_line_colour_uses_hex():
    style = ClassStyle(class_index=0, fill_hex="ffffe5", angle_deg=0.0, line_hex="333333")
    assert "#333333" in css_gradient(style)
    assert "black" not in css_gradient(style)


def test_css_stripes_byte_deterministic():
    a = css_stripes(ClassStyle(class_index=1, fill_hex="fff7bc", angle_deg=45.0))
    b = css_stripes(ClassStyle(class_index=1, fill_hex="fff7bc", angle_deg=45.0))
    assert a == b and a.encode() == b.encode()


def test_svg_pattern_angle_zero_has_no_transform():
    svg = svg_stripe_pattern(ClassStyle(class_index=0, fill_hex="ffffe5", angle_deg=0.0), "p0")
    assert "patternTransform" not in svg
    assert 'id="p0"' in svg


def test_svg_pattern_rotates_for_vertical():
    svg = svg_stripe_pattern(ClassStyle(class_index=2, fill_hex="fee391", angle_deg=90.0), "p2")
    assert 'patternTransform="rotate(90)"' in svg


def test_assemble_pattern_defs_distinct_ids():
    s0 = ClassStyle(class_index=0, fill_hex="ffffe5", angle_deg=0.0)
    s1 = ClassStyle(class_index=1, fill_hex="fff7bc", angle_deg=45.0)
    defs = assemble_pattern_defs([(s0, "pattern-class-0"), (s1, "pattern-class-1")])
    assert defs.count("<pattern") == 2


def test_assemble_pattern_defs_rejects_duplicates():
    s0 = ClassStyle(class_index=0, fill_hex="ffffe5", angle_deg=0.0)
    with pytest.raises(ValueError, match="duplicate"):
        assemble_pattern_defs([(s0, "p"), (s0, "p")])


def field_colour(x, y, style, supersample=4):
    """Independent wrap oracle: colour of the infinite stripe field at (x, y)."""
    period = style.period_px
    angle = style.angle_deg % 180.0
    if angle == 0.0:
        axis_period = float(int(round(period)))
    elif angle == 90.0:
        axis_period = float(int(round(period)))
    elif angle in (45.0, 135.0):
        axis_period = float(int(round(period * math.sqrt(2.0))))
    else:
        raise AssertionError("oracle only covers the exactly tileable angles")
    edge = style.stripe_on_px / period * axis_period
    fill = np.array([int(style.fill_hex[i : i + 2], 16) for i in (0, 2, 4)] + [255], dtype=float)
    line = np.array([int(style.line_hex[i : i + 2], 16) for i in (0, 2, 4)] + [255], dtype=float)
    covered = 0
    for sy in range(supersample):
        for sx in range(supersample):
            t = stripe_phase(x + (sx + 0.5) / supersample, y + (sy + 0.5) / supersample, angle, axis_period)
            if t < edge:
                covered += 1
    frac = covered / supersample**2
    return np.clip(np.rint(fill * frac + line * (1.0 - frac)), 0, 255).astype(np.uint8)


def test_raster_horizontal_tile_rows():
    tile = raster_stripe_tile(ClassStyle(class_index=0, fill_hex="ffffe5", angle_deg=0.0))
    assert (tile.width, tile.height) == (1, 40)
    fill = [int("ffffe5"[i : i + 2], 16) for i in (0, 2, 4)] + [255]
    line = [0, 0, 0, 255]
    for row in range(20):
        assert tile.pixels[row, 0].tolist() == fill
    for row in range(20, 40):
        assert tile.pixels[row, 0].tolist() == line


def test_raster_vertical_is_transpose_of_horizontal():
    h = raster_stripe_tile(ClassStyle(class_index=0, fill_hex="fec44f", angle_deg=0.0))
    v = raster_stripe_tile(ClassStyle(class_index=0, fill_hex="fec44f", angle_deg=90.0))
    assert (v.width, v.height) == (h.height, h.width)
    assert np.array_equal(v.pixels, np.transpose(h.pixels, (1, 0, 2)))


def test_raster_narrow_band():
    tile = raster_stripe_tile(ClassStyle(class_index=0, fill_hex="fee391", angle_deg=0.0, stripe_on_px=8, stripe_off_px=32))
    assert (tile.width, tile.height) == (1, 40)
    fill = [int("fee391"[i : i + 2], 16) for i in (0, 2, 4)] + [255]
    assert sum(1 for row in range(40) if tile.pixels[row, 0].tolist() == fill) == 8


@pytest.mark.parametrize("angle", [0.0, 45.0, 90.0, 135.0])
def test_raster_tiles_wrap_seamlessly(angle):
    style = ClassStyle(class_index=0, fill_hex="fee391", angle_deg=angle)
    tile = raster_stripe_tile(style)
    assert tile.seamless
    assert tile.width <= 64 and tile.height <= 64
    # Sample the infinite field over a 2x2 tile span and compare pixel-wise.
    for y in range(0, 2 * tile.height, 3):
        for x in range(0, 2 * tile.width, 3):
            expected = field_colour(x, y, style)
            assert np.array_equal(tile.pixels[y % tile.height, x % tile.width], expected), (x, y)


def test_raster_png_encoding():
    tile = raster_stripe_tile(LISTING_STYLE)
    img = Image.open(io.BytesIO(tile.to_png()))
    assert img.mode == "RGBA"
    assert img.size == (tile.width, tile.height)
    assert np.array_equal(np.asarray(img), tile.pixels)


def test_raster_rejects_bad_band_widths():
    with pytest.raises(ValueError):
        ClassStyle(class_index=0, fill_hex="fee391", angle_deg=0.0, stripe_on_px=0)


def test_gsm_radii_defaults():
    assert gsm_radii(4, 6, 24) == [6.0, 12.0, 18.0, 24.0]


def test_gsm_radii_degenerate_and_endpoints():
    assert gsm_radii(1, 6, 24) == [6.0]
    assert gsm_radii(2, 10, 20) == [10.0, 20.0]


def test_gsm_radii_rejects_inverted_range():
    with pytest.raises(ValueError):
        gsm_radii(3, 24, 6)


def _classification(bounds, classes, k=None):
    b = Breaks(k=len(bounds), bounds=tuple(bounds), gvf=1.0, sdcm=0.0)
    return Classification(dataset_id="d", year=2004, breaks=b, classes=classes)


def test_legend_spec_row_count_and_labels():
    c = _classification([(1.0, 3.0), (10.0, 12.0)], {"DEU": 0, "FIN": 1})
    spec = legend_spec(c, study_palette(2), indicator="Life expectancy", unit="years")
    assert [r.label for r in spec.rows] == ["1.0 – 3.0", "10.0 – 12.0"]
    assert spec.missing_label == "no data"
    assert spec.title == "Life expectancy (years)"


def test_legend_spec_four_classes():
    bounds = [(70.0, 72.0), (72.5, 75.0), (75.1, 78.0), (78.2, 81.0)]
    c = _classification(bounds, {"DEU": 0})
    spec = legend_spec(c, study_palette(4))
    assert len(spec.rows) == 4


def test_legend_fill_hexes_are_exact_palette_values():
    p = study_palette(4)
    bounds = [(0.0, 1.0), (2.0, 3.0), (4.0, 5.0), (6.0, 7.0)]
    spec = legend_spec(_classification(bounds, {}), p)
    assert [r.style.fill_hex for r in spec.rows] == [e.hex for e in p.entries]


def test_legend_spec_k_mismatch_rejected():
    c = _classification([(1.0, 2.0), (3.0, 4.0)], {})
    with pytest.raises(ValueError, match="classes"):
        legend_spec(c, study_palette(4))


def test_class_styles_combines_angles_and_radii():
    styles = class_styles(study_palette(4))
    assert [s.angle_deg for s in styles] == [0.0, 45.0, 90.0, 135.0]
    assert [s.radius_px for s in styles] == [6.0, 12.0, 18.0, 24.0]
    assert [s.fill_hex for s in styles] == ["ffffe5", "fff7bc", "fee391", "fec44f"]
    assert all(s.marker_px == 30 for s in styles)
