import math
import random

import pytest

from colorlab.core import (
    D65,
    ColorCoord,
    ColorModelId,
    GammaCurve,
    PixelBuffer,
    Rgb8,
    UnitRgb,
    WhitePoint,
    rgb8_from_unit,
    unit_from_rgb8,
)


class TestRgb8:
    def test_valid_channels(self):
        c = Rgb8(0, 128, 255)
        assert (c.r, c.g, c.b) == (0, 128, 255)

    @pytest.mark.parametrize("bad", [(-1, 0, 0), (0, 256, 0), (0, 0, 999)])
    def test_out_of_range_raises(self, bad):
        with pytest.raises(ValueError):
            Rgb8(*bad)

    def test_non_integer_raises(self):
        with pytest.raises(ValueError):
            Rgb8(0.5, 0, 0)

    def test_hex_round_trip(self):
        assert Rgb8(255, 0, 0).hex() == "#FF0000"
        assert Rgb8.from_hex("#FF0000") == Rgb8(255, 0, 0)
        assert Rgb8.from_hex("00ff7f") == Rgb8(0, 255, 127)
        with pytest.raises(ValueError):
            Rgb8.from_hex("#F00")


class TestColorModelId:
    def test_exactly_eleven_members(self):
        assert len(ColorModelId) == 11

    def test_parse_render_identity(self):
        for m in ColorModelId:
            assert ColorModelId.parse(str(m)) is m
            assert ColorModelId.parse(m.value.upper()) is m

    def test_parse_error_lists_valid_models(self):
        with pytest.raises(ValueError) as exc:
            ColorModelId.parse("foo")
        for m in ColorModelId:
            assert m.value in str(exc.value)


class TestColorCoord:
    def test_c4_only_for_cmyk(self):
        ColorCoord(ColorModelId.CMYK, 0, 0, 0, 1.0)
        with pytest.raises(ValueError):
            ColorCoord(ColorModelId.CMYK, 0, 0, 0)
        with pytest.raises(ValueError):
            ColorCoord(ColorModelId.HSL, 0, 0, 0, 0.5)

    def test_components(self):
        assert ColorCoord(ColorModelId.HSV, 1, 2, 3).components == (1, 2, 3)
        assert ColorCoord(ColorModelId.CMYK, 1, 2, 3, 4).components == (1, 2, 3, 4)


class TestWhitePoint:
    def test_d65_values(self):
        assert (D65.xn, D65.yn, D65.zn) == (95.047, 100.000, 108.883)

    def test_derived_chromaticities_satisfy_defining_ratios(self):
        den = D65.xn + 15.0 * D65.yn + 3.0 * D65.zn
        assert abs(D65.un_prime - 4.0 * D65.xn / den) < 1e-12
        assert abs(D65.vn_prime - 9.0 * D65.yn / den) < 1e-12

    def test_custom_white_point(self):
        wp = WhitePoint(96.422, 100.0, 82.521)  # D50-style values
        assert wp.un_prime > 0 and wp.vn_prime > 0


class TestUnitConversion:
    def test_white(self):
        assert unit_from_rgb8(Rgb8(255, 255, 255)) == UnitRgb(1, 1, 1)

    def test_black(self):
        assert unit_from_rgb8(Rgb8(0, 0, 0)) == UnitRgb(0, 0, 0)

    def test_exact_division(self):
        u = unit_from_rgb8(Rgb8(51, 102, 204))
        assert (u.r, u.g, u.b) == (0.2, 0.4, 0.8)

    def test_unit_white(self):
        assert rgb8_from_unit(UnitRgb(1, 1, 1)) == Rgb8(255, 255, 255)

    def test_half_rounds_away_from_zero(self):
        assert rgb8_from_unit(UnitRgb(0.5, 0.5, 0.5)) == Rgb8(128, 128, 128)

    def test_clamping(self):
        assert rgb8_from_unit(UnitRgb(1.2, -0.1, 0.5)) == Rgb8(255, 0, 128)

    def test_round_trip_census(self):
        rng = random.Random(101)
        for _ in range(100_000):
            c = Rgb8(rng.randrange(256), rng.randrange(256), rng.randrange(256))
            assert rgb8_from_unit(unit_from_rgb8(c)) == c

    def test_clamped(self):
        u = UnitRgb(-0.2, 0.5, 1.7).clamped()
        assert (u.r, u.g, u.b) == (0.0, 0.5, 1.0)


GRID = [k / 1000 for k in range(1001)]


class TestGammaCurve:
    @pytest.mark.parametrize(
        "curve",
        [
            GammaCurve.srgb(),
            GammaCurve.camera_rec709(),
            GammaCurve.camera_rec709(strict=True),
            GammaCurve.camera_rec709(2.0),
        ],
        ids=["srgb", "camera-paper", "camera-strict", "camera-2.0"],
    )
    def test_encode_decode_identity_on_grid(self, curve):
        # the printed camera curve keeps this composition invertible for
        # gamma_c below ~2.275; larger exponents open a gap at the knee
        for v in GRID:
            assert abs(curve.encode(curve.decode(v)) - v) < 1e-9

    @pytest.mark.parametrize(
        "curve",
        [GammaCurve.srgb(), GammaCurve.camera_rec709(strict=True)],
        ids=["srgb", "camera-strict"],
    )
    def test_encode_strictly_increasing(self, curve):
        values = [curve.encode(v) for v in GRID]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize(
        "curve",
        [
            GammaCurve.srgb(),
            GammaCurve.camera_rec709(),
            GammaCurve.camera_rec709(strict=True),
        ],
        ids=["srgb", "camera-paper", "camera-strict"],
    )
    def test_decode_strictly_increasing(self, curve):
        values = [curve.decode(v) for v in GRID]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_paper_encode_increasing_per_branch(self):
        # the printed power segment divides by 1.099, which drops it below the
        # linear segment at the knee; each branch is still strictly monotonic
        curve = GammaCurve.camera_rec709()
        linear = [curve.encode(v) for v in GRID if v <= 0.018]
        power = [curve.encode(v) for v in GRID if v > 0.018]
        assert all(a < b for a, b in zip(linear, linear[1:]))
        assert all(a < b for a, b in zip(power, power[1:]))

    def test_gamma_must_be_positive(self):
        with pytest.raises(ValueError):
            GammaCurve.camera_rec709(0.0)

    def test_srgb_anchor_values(self):
        c = GammaCurve.srgb()
        assert c.decode(0.04045) == pytest.approx(0.04045 / 12.92, abs=1e-12)
        assert c.encode(0.0031308) == pytest.approx(12.92 * 0.0031308, abs=1e-9)

    def test_strict_mode_matches_standard_oetf(self):
        c = GammaCurve.camera_rec709(strict=True)
        assert c.encode(0.5) == pytest.approx(1.099 * 0.5**0.45 - 0.099, abs=1e-12)


class TestPixelBuffer:
    def test_length_must_match(self):
        px = (Rgb8(0, 0, 0),) * 4
        PixelBuffer(2, 2, px)
        with pytest.raises(ValueError):
            PixelBuffer(2, 3, px)

    def test_dimensions_positive(self):
        with pytest.raises(ValueError):
            PixelBuffer(0, 1, ())
