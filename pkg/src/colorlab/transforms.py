"""Bidirectional conversions between RGB and the eleven color models.

Scalar kernels operate on normalized ``UnitRgb``; ``Rgb8`` facades are provided
for the models conventionally written against 8-bit input (CMYK, Lab, Luv,
YCbCr). Inverse conversions clamp out-of-gamut results instead of raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

from .core import (
    D65,
    ColorCoord,
    ColorModelId,
    GammaCurve,
    PixelBuffer,
    Rgb8,
    UnitRgb,
    WhitePoint,
    _clamp01,
    rgb8_from_unit,
    unit_from_rgb8,
)

# ---------------------------------------------------------------------------
# gamma pipelines

_SRGB_CURVE = GammaCurve.srgb()


def srgb_decode(c: UnitRgb) -> UnitRgb:
    """Coded sRGB -> linear light (threshold 0.04045, divisor 12.92, exponent 2.4)."""
    d = _SRGB_CURVE.decode
    return UnitRgb(d(c.r), d(c.g), d(c.b))


def srgb_encode(c: UnitRgb) -> UnitRgb:
    """Linear light -> coded sRGB (threshold 0.0031308, factor 1.055, exponent 1/2.4)."""
    e = _SRGB_CURVE.encode
    return UnitRgb(e(c.r), e(c.g), e(c.b))


def gamma_encode_rec709(c: UnitRgb, gamma_c: float = 2.2, strict: bool = False) -> UnitRgb:
    """Camera transfer curve: linear segment 4.5v below 0.018, power segment above."""
    curve = GammaCurve.camera_rec709(gamma_c, strict=strict)
    return UnitRgb(curve.encode(c.r), curve.encode(c.g), curve.encode(c.b))


def gamma_decode_rec709(c: UnitRgb, gamma_c: float = 2.2, strict: bool = False) -> UnitRgb:
    """Analytic inverse of :func:`gamma_encode_rec709`; breakpoint at 4.5*0.018."""
    curve = GammaCurve.camera_rec709(gamma_c, strict=strict)
    return UnitRgb(curve.decode(c.r), curve.decode(c.g), curve.decode(c.b))


# ---------------------------------------------------------------------------
# CMY / CMYK


def rgb_to_cmy(c: UnitRgb) -> ColorCoord:
    return ColorCoord(ColorModelId.CMY, 1.0 - c.r, 1.0 - c.g, 1.0 - c.b)


def cmy_to_rgb(coord: ColorCoord) -> UnitRgb:
    _expect(coord, ColorModelId.CMY)
    return UnitRgb(1.0 - coord.c1, 1.0 - coord.c2, 1.0 - coord.c3).clamped()


def _cmyk_from_rgb255(r: float, g: float, b: float) -> ColorCoord:
    # the printed formulas normalize by 255 inside each equation, and each
    # channel carries its own (1 - K) != 0 guard
    k = 1.0 - max(r / 255.0, g / 255.0, b / 255.0)
    cy = (1.0 - r / 255.0 - k) / (1.0 - k) if 1.0 - k != 0.0 else 0.0
    mg = (1.0 - g / 255.0 - k) / (1.0 - k) if 1.0 - k != 0.0 else 0.0
    ye = (1.0 - b / 255.0 - k) / (1.0 - k) if 1.0 - k != 0.0 else 0.0
    return ColorCoord(ColorModelId.CMYK, cy, mg, ye, k)


def _cmyk_to_rgb255(coord: ColorCoord) -> tuple[float, float, float]:
    _expect(coord, ColorModelId.CMYK)
    cy, mg, ye, k = coord.c1, coord.c2, coord.c3, coord.c4
    return (
        255.0 * (1.0 - cy) * (1.0 - k),
        255.0 * (1.0 - mg) * (1.0 - k),
        255.0 * (1.0 - ye) * (1.0 - k),
    )


def rgb_to_cmyk(c: Rgb8) -> ColorCoord:
    """K = 1 - max(R,G,B)/255; C,M,Y relative to the remaining ink budget."""
    return _cmyk_from_rgb255(c.r, c.g, c.b)


def cmyk_to_rgb(coord: ColorCoord) -> Rgb8:
    r, g, b = _cmyk_to_rgb255(coord)
    return Rgb8(_clamp_byte(r), _clamp_byte(g), _clamp_byte(b))


# ---------------------------------------------------------------------------
# HS* family


def rgb_to_hsi(c: UnitRgb) -> ColorCoord:
    r, g, b = c.r, c.g, c.b
    i = (r + g + b) / 3.0
    if i <= 0.0:
        return ColorCoord(ColorModelId.HSI, 0.0, 0.0, 0.0)
    s = _clamp01(1.0 - min(r, g, b) / i)
    num = (r - g) + (r - b)
    den = 2.0 * math.sqrt((r - g) ** 2 + (r - b) * (g - b))
    if den == 0.0:
        h = 0.0
    else:
        theta = math.degrees(math.acos(_clamp(num / den, -1.0, 1.0)))
        h = 360.0 - theta if b > g else theta
    return ColorCoord(ColorModelId.HSI, h % 360.0, s, i)


def hsi_to_rgb(coord: ColorCoord) -> UnitRgb:
    """Sector-wise inverse: the printed 0-120 degree formulas rotated twice."""
    _expect(coord, ColorModelId.HSI)
    h, s, i = coord.c1 % 360.0, coord.c2, coord.c3
    if not 0.0 <= i <= 1.0:
        raise ValueError(f"intensity {i} outside [0, 1]")
    if h < 120.0:
        b = i * (1.0 - s)
        r = i * (1.0 + s * _hsi_ratio(h))
        g = 3.0 * i - (r + b)
    elif h < 240.0:
        r = i * (1.0 - s)
        g = i * (1.0 + s * _hsi_ratio(h - 120.0))
        b = 3.0 * i - (r + g)
    else:
        g = i * (1.0 - s)
        b = i * (1.0 + s * _hsi_ratio(h - 240.0))
        r = 3.0 * i - (g + b)
    return UnitRgb(r, g, b).clamped()


def _hsi_ratio(h: float) -> float:
    # cos(60 - h) > 0 for h in [0, 120), so the ratio is always defined
    return math.cos(math.radians(h)) / math.cos(math.radians(60.0 - h))


def rgb_to_hsl(c: UnitRgb) -> ColorCoord:
    r, g, b = c.r, c.g, c.b
    mx, mn = max(r, g, b), min(r, g, b)
    lt = (mx + mn) / 2.0
    if mx == mn:
        return ColorCoord(ColorModelId.HSL, 0.0, 0.0, lt)
    s = _clamp01((mx - mn) / (1.0 - abs(2.0 * lt - 1.0)))
    return ColorCoord(ColorModelId.HSL, _hue_sectors(r, g, b, mx, mn), s, lt)


def hsl_to_rgb(coord: ColorCoord) -> UnitRgb:
    _expect(coord, ColorModelId.HSL)
    h, s, lt = coord.c1 % 360.0, coord.c2, coord.c3
    chroma = (1.0 - abs(2.0 * lt - 1.0)) * s
    x = chroma * (1.0 - abs((h / 60.0) % 2.0 - 1.0))
    m = lt - chroma / 2.0
    r, g, b = _sector_rgb(h, chroma, x)
    return UnitRgb(r + m, g + m, b + m).clamped()


def rgb_to_hsv(c: UnitRgb) -> ColorCoord:
    r, g, b = c.r, c.g, c.b
    v = max(r, g, b)
    mn = min(r, g, b)
    s = 0.0 if v == 0.0 else _clamp01((v - mn) / v)
    if v == mn:
        return ColorCoord(ColorModelId.HSV, 0.0, s, v)
    return ColorCoord(ColorModelId.HSV, _hue_sectors(r, g, b, v, mn), s, v)


def hsv_to_rgb(coord: ColorCoord) -> UnitRgb:
    _expect(coord, ColorModelId.HSV)
    h, s, v = coord.c1 % 360.0, coord.c2, coord.c3
    chroma = v * s
    x = chroma * (1.0 - abs((h / 60.0) % 2.0 - 1.0))
    m = v - chroma
    r, g, b = _sector_rgb(h, chroma, x)
    return UnitRgb(r + m, g + m, b + m).clamped()


def _hue_sectors(r: float, g: float, b: float, mx: float, mn: float) -> float:
    d = mx - mn
    if mx == r:
        h = 60.0 * (((g - b) / d) % 6.0)
    elif mx == g:
        h = 60.0 * ((b - r) / d + 2.0)
    else:
        h = 60.0 * ((r - g) / d + 4.0)
    return h % 360.0


def _sector_rgb(h: float, c: float, x: float) -> tuple[float, float, float]:
    if h < 60.0:
        return (c, x, 0.0)
    if h < 120.0:
        return (x, c, 0.0)
    if h < 180.0:
        return (0.0, c, x)
    if h < 240.0:
        return (0.0, x, c)
    if h < 300.0:
        return (x, 0.0, c)
    return (c, 0.0, x)


# ---------------------------------------------------------------------------
# CIE XYZ / L*a*b* / L*u*v*
#
# The matrix constants below are the reference form of the linear maps; the
# kernels inline the same coefficients as straight-line arithmetic.

RGB_TO_XYZ_MATRIX = (
    (0.4124564, 0.3575761, 0.1804375),
    (0.2126729, 0.7151522, 0.0721750),
    (0.0193339, 0.1191920, 0.9503041),
)

XYZ_TO_RGB_MATRIX = (
    (3.2404542, -1.5371385, -0.4985314),
    (-0.9692660, 1.8760108, 0.0415560),
    (0.0556434, -0.2040259, 1.0572252),
)


def rgb_to_xyz(c: UnitRgb) -> ColorCoord:
    r, g, b = c.r, c.g, c.b
    return ColorCoord(
        ColorModelId.XYZ,
        0.4124564 * r + 0.3575761 * g + 0.1804375 * b,
        0.2126729 * r + 0.7151522 * g + 0.0721750 * b,
        0.0193339 * r + 0.1191920 * g + 0.9503041 * b,
    )


def xyz_to_rgb(coord: ColorCoord) -> UnitRgb:
    _expect(coord, ColorModelId.XYZ)
    x, y, z = coord.c1, coord.c2, coord.c3
    return UnitRgb(
        3.2404542 * x - 1.5371385 * y - 0.4985314 * z,
        -0.9692660 * x + 1.8760108 * y + 0.0415560 * z,
        0.0556434 * x - 0.2040259 * y + 1.0572252 * z,
    ).clamped()


_LAB_EPS = 0.008856
_LAB_INV_EPS = 0.206893
_LAB_SLOPE = 7.787
_LAB_OFFSET = 16.0 / 116.0
_LUV_KAPPA = 903.3


def _lab_f(t: float) -> float:
    if t > _LAB_EPS:
        return t ** (1.0 / 3.0)
    return _LAB_SLOPE * t + _LAB_OFFSET


def _lab_f_inv(t: float) -> float:
    if t > _LAB_INV_EPS:
        return t**3
    return (t - _LAB_OFFSET) / _LAB_SLOPE


def _linear_xyz100(r255: float, g255: float, b255: float) -> tuple[float, float, float]:
    # printed pipeline: normalize by 255, gamma-correct, then the XYZ matrix;
    # the matrix yields Y in [0, 1] while the white point uses Yn = 100
    d = _SRGB_CURVE.decode
    r = d(r255 / 255.0)
    g = d(g255 / 255.0)
    b = d(b255 / 255.0)
    return (
        100.0 * (0.4124564 * r + 0.3575761 * g + 0.1804375 * b),
        100.0 * (0.2126729 * r + 0.7151522 * g + 0.0721750 * b),
        100.0 * (0.0193339 * r + 0.1191920 * g + 0.9503041 * b),
    )


def _rgb255_from_xyz100(x: float, y: float, z: float) -> tuple[float, float, float]:
    x, y, z = x / 100.0, y / 100.0, z / 100.0
    r = 3.2404542 * x - 1.5371385 * y - 0.4985314 * z
    g = -0.9692660 * x + 1.8760108 * y + 0.0415560 * z
    b = 0.0556434 * x - 0.2040259 * y + 1.0572252 * z
    e = _SRGB_CURVE.encode
    return (255.0 * e(_clamp01(r)), 255.0 * e(_clamp01(g)), 255.0 * e(_clamp01(b)))


def _lab_from_rgb255(r: float, g: float, b: float, wp: WhitePoint) -> ColorCoord:
    x, y, z = _linear_xyz100(r, g, b)
    fx = _lab_f(x / wp.xn)
    fy = _lab_f(y / wp.yn)
    fz = _lab_f(z / wp.zn)
    return ColorCoord(ColorModelId.LAB, 116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz))


def _lab_to_rgb255(coord: ColorCoord, wp: WhitePoint) -> tuple[float, float, float]:
    _expect(coord, ColorModelId.LAB)
    lstar, astar, bstar = coord.c1, coord.c2, coord.c3
    fy = (lstar + 16.0) / 116.0
    fx = astar / 500.0 + fy
    fz = fy - bstar / 200.0
    return _rgb255_from_xyz100(wp.xn * _lab_f_inv(fx), wp.yn * _lab_f_inv(fy), wp.zn * _lab_f_inv(fz))


def rgb_to_lab(c: Rgb8, wp: WhitePoint = D65) -> ColorCoord:
    return _lab_from_rgb255(c.r, c.g, c.b, wp)


def lab_to_rgb(coord: ColorCoord, wp: WhitePoint = D65) -> Rgb8:
    r, g, b = _lab_to_rgb255(coord, wp)
    return Rgb8(_clamp_byte(r), _clamp_byte(g), _clamp_byte(b))


def _luv_from_rgb255(r: float, g: float, b: float, wp: WhitePoint) -> ColorCoord:
    x, y, z = _linear_xyz100(r, g, b)
    den = x + 15.0 * y + 3.0 * z
    if den <= 0.0:
        # pure black: pin chromaticity to the white point's so u = v = 0
        up, vp = wp.un_prime, wp.vn_prime
    else:
        up = 4.0 * x / den
        vp = 9.0 * y / den
    yr = y / wp.yn
    if yr > _LAB_EPS:
        lstar = 116.0 * yr ** (1.0 / 3.0) - 16.0
    else:
        lstar = _LUV_KAPPA * yr
    return ColorCoord(ColorModelId.LUV, lstar, 13.0 * lstar * (up - wp.un_prime), 13.0 * lstar * (vp - wp.vn_prime))


def _luv_to_rgb255(coord: ColorCoord, wp: WhitePoint) -> tuple[float, float, float]:
    _expect(coord, ColorModelId.LUV)
    lstar, u, v = coord.c1, coord.c2, coord.c3
    if lstar <= 0.0:
        return (0.0, 0.0, 0.0)
    up = u / (13.0 * lstar) + wp.un_prime
    vp = v / (13.0 * lstar) + wp.vn_prime
    if lstar > 8.0:
        y = ((lstar + 16.0) / 116.0) ** 3 * wp.yn
    else:
        y = lstar / _LUV_KAPPA * wp.yn
    if vp <= 0.0:
        return (0.0, 0.0, 0.0)
    x = 9.0 * y * up / (4.0 * vp)
    z = y * (12.0 - 3.0 * up - 20.0 * vp) / (4.0 * vp)
    return _rgb255_from_xyz100(x, y, z)


def rgb_to_luv(c: Rgb8, wp: WhitePoint = D65) -> ColorCoord:
    return _luv_from_rgb255(c.r, c.g, c.b, wp)


def luv_to_rgb(coord: ColorCoord, wp: WhitePoint = D65) -> Rgb8:
    r, g, b = _luv_to_rgb255(coord, wp)
    return Rgb8(_clamp_byte(r), _clamp_byte(g), _clamp_byte(b))


# ---------------------------------------------------------------------------
# luma-chroma: YIQ, YUV, YCbCr

YIQ_FROM_RGB_MATRIX = (
    (0.299, 0.587, 0.114),
    (0.596, -0.274, -0.322),
    (0.211, -0.523, 0.312),
)

RGB_FROM_YIQ_MATRIX = (
    (1.000, 0.956, 0.621),
    (1.000, -0.272, -0.647),
    (1.000, -1.106, 1.703),
)

YUV_FROM_RGB_MATRIX = (
    (0.299, 0.587, 0.114),
    (-0.147, -0.289, 0.436),
    (0.615, -0.515, -0.100),
)

RGB_FROM_YUV_MATRIX = (
    (1.000, 0.000, 1.140),
    (1.000, -0.396, -0.581),
    (1.000, 2.029, 0.000),
)

YCBCR_FROM_RGB_MATRIX = (
    (0.299, 0.587, 0.114),
    (-0.1687, -0.3313, 0.5000),
    (0.5000, -0.4187, -0.0813),
)

RGB_FROM_YCBCR_MATRIX = (
    (1.000, 0.000, 1.402),
    (1.000, -0.344, -0.714),
    (1.000, 1.772, 0.000),
)

# BT.601 studio swing: luma occupies 16-235 (219 steps), chroma 16-240 (224 steps)
_STUDIO_LUMA_SCALE = 219.0 / 255.0
_STUDIO_CHROMA_SCALE = 224.0 / 255.0
STUDIO_LUMA_OFFSET = 16.0


def rgb_to_yiq(c: UnitRgb) -> ColorCoord:
    r, g, b = c.r, c.g, c.b
    return ColorCoord(
        ColorModelId.YIQ,
        0.299 * r + 0.587 * g + 0.114 * b,
        0.596 * r - 0.274 * g - 0.322 * b,
        0.211 * r - 0.523 * g + 0.312 * b,
    )


def yiq_to_rgb(coord: ColorCoord) -> UnitRgb:
    _expect(coord, ColorModelId.YIQ)
    y, i, q = coord.c1, coord.c2, coord.c3
    return UnitRgb(
        y + 0.956 * i + 0.621 * q,
        y - 0.272 * i - 0.647 * q,
        y - 1.106 * i + 1.703 * q,
    ).clamped()


def rgb_to_yuv(c: UnitRgb) -> ColorCoord:
    r, g, b = c.r, c.g, c.b
    return ColorCoord(
        ColorModelId.YUV,
        0.299 * r + 0.587 * g + 0.114 * b,
        -0.147 * r - 0.289 * g + 0.436 * b,
        0.615 * r - 0.515 * g - 0.100 * b,
    )


def yuv_to_rgb(coord: ColorCoord) -> UnitRgb:
    _expect(coord, ColorModelId.YUV)
    y, u, v = coord.c1, coord.c2, coord.c3
    return UnitRgb(
        y + 1.140 * v,
        y - 0.396 * u - 0.581 * v,
        y + 2.029 * u,
    ).clamped()


def _ycbcr_from_rgb255(r: float, g: float, b: float, studio: bool) -> ColorCoord:
    yl = 0.299 * r + 0.587 * g + 0.114 * b
    cb = -0.1687 * r - 0.3313 * g + 0.5000 * b
    cr = 0.5000 * r - 0.4187 * g - 0.0813 * b
    if studio:
        yl = STUDIO_LUMA_OFFSET + _STUDIO_LUMA_SCALE * yl
        cb = 128.0 + _STUDIO_CHROMA_SCALE * cb
        cr = 128.0 + _STUDIO_CHROMA_SCALE * cr
    else:
        cb += 128.0
        cr += 128.0
    # the chroma rows peak at +-127.5, overshooting the declared 8-bit range
    # by 0.5 at gamut corners; coordinates are pinned into [0, 255]
    return ColorCoord(
        ColorModelId.YCBCR,
        _clamp(yl, 0.0, 255.0),
        _clamp(cb, 0.0, 255.0),
        _clamp(cr, 0.0, 255.0),
    )


def _ycbcr_to_rgb255(coord: ColorCoord, luma_offset: float, studio: bool) -> tuple[float, float, float]:
    _expect(coord, ColorModelId.YCBCR)
    if studio:
        yl = (coord.c1 - STUDIO_LUMA_OFFSET) / _STUDIO_LUMA_SCALE
        cb = (coord.c2 - 128.0) / _STUDIO_CHROMA_SCALE
        cr = (coord.c3 - 128.0) / _STUDIO_CHROMA_SCALE
    else:
        yl = coord.c1 - luma_offset
        cb = coord.c2 - 128.0
        cr = coord.c3 - 128.0
    return (yl + 1.402 * cr, yl - 0.344 * cb - 0.714 * cr, yl + 1.772 * cb)


def rgb_to_ycbcr(c: Rgb8, studio: bool = False) -> ColorCoord:
    return _ycbcr_from_rgb255(float(c.r), float(c.g), float(c.b), studio)


def ycbcr_to_rgb(coord: ColorCoord, luma_offset: float = 0.0, studio: bool = False) -> Rgb8:
    """Inverse with configurable luma offset; the printed pair's offsets disagree,
    so the default 0 keeps the round trip self-consistent."""
    r, g, b = _ycbcr_to_rgb255(coord, luma_offset, studio)
    return Rgb8(_clamp_byte(r), _clamp_byte(g), _clamp_byte(b))


def _clamp_byte(v: float) -> int:
    if v <= 0.0:
        return 0
    if v >= 255.0:
        return 255
    return int(v + 0.5)


# ---------------------------------------------------------------------------
# kernel registry and bulk conversion


@dataclass(frozen=True)
class ConversionKernel:
    """Forward/inverse pair between UnitRgb and one model's coordinates."""

    model: ColorModelId
    forward: Callable[[UnitRgb], ColorCoord]
    inverse: Callable[[ColorCoord], UnitRgb]


def build_kernels(
    white_point: WhitePoint = D65, bt601_studio: bool = False
) -> dict[ColorModelId, ConversionKernel]:
    """One kernel per model, normalized to the UnitRgb hub.

    Models whose printed formulas are written against 8-bit channels (CMYK,
    Lab, Luv, YCbCr) reconstruct the 0-255 values from the hub and evaluate
    the equations on that domain; byte inputs survive the 255-scale round
    trip bit-exactly.
    """
    wp = white_point

    def cmyk_fwd(c: UnitRgb) -> ColorCoord:
        return _cmyk_from_rgb255(c.r * 255.0, c.g * 255.0, c.b * 255.0)

    def cmyk_inv(coord: ColorCoord) -> UnitRgb:
        r, g, b = _cmyk_to_rgb255(coord)
        return UnitRgb(r / 255.0, g / 255.0, b / 255.0).clamped()

    def lab_fwd(c: UnitRgb) -> ColorCoord:
        return _lab_from_rgb255(c.r * 255.0, c.g * 255.0, c.b * 255.0, wp)

    def lab_inv(coord: ColorCoord) -> UnitRgb:
        r, g, b = _lab_to_rgb255(coord, wp)
        return UnitRgb(r / 255.0, g / 255.0, b / 255.0).clamped()

    def luv_fwd(c: UnitRgb) -> ColorCoord:
        return _luv_from_rgb255(c.r * 255.0, c.g * 255.0, c.b * 255.0, wp)

    def luv_inv(coord: ColorCoord) -> UnitRgb:
        r, g, b = _luv_to_rgb255(coord, wp)
        return UnitRgb(r / 255.0, g / 255.0, b / 255.0).clamped()

    def ycbcr_fwd(c: UnitRgb) -> ColorCoord:
        return _ycbcr_from_rgb255(c.r * 255.0, c.g * 255.0, c.b * 255.0, bt601_studio)

    def ycbcr_inv(coord: ColorCoord) -> UnitRgb:
        luma_offset = STUDIO_LUMA_OFFSET if bt601_studio else 0.0
        r, g, b = _ycbcr_to_rgb255(coord, luma_offset, bt601_studio)
        return UnitRgb(r / 255.0, g / 255.0, b / 255.0).clamped()

    kernels = {
        ColorModelId.CMY: ConversionKernel(ColorModelId.CMY, rgb_to_cmy, cmy_to_rgb),
        ColorModelId.CMYK: ConversionKernel(ColorModelId.CMYK, cmyk_fwd, cmyk_inv),
        ColorModelId.HSI: ConversionKernel(ColorModelId.HSI, rgb_to_hsi, hsi_to_rgb),
        ColorModelId.HSL: ConversionKernel(ColorModelId.HSL, rgb_to_hsl, hsl_to_rgb),
        ColorModelId.HSV: ConversionKernel(ColorModelId.HSV, rgb_to_hsv, hsv_to_rgb),
        ColorModelId.XYZ: ConversionKernel(ColorModelId.XYZ, rgb_to_xyz, xyz_to_rgb),
        ColorModelId.LAB: ConversionKernel(ColorModelId.LAB, lab_fwd, lab_inv),
        ColorModelId.LUV: ConversionKernel(ColorModelId.LUV, luv_fwd, luv_inv),
        ColorModelId.YIQ: ConversionKernel(ColorModelId.YIQ, rgb_to_yiq, yiq_to_rgb),
        ColorModelId.YUV: ConversionKernel(ColorModelId.YUV, rgb_to_yuv, yuv_to_rgb),
        ColorModelId.YCBCR: ConversionKernel(ColorModelId.YCBCR, ycbcr_fwd, ycbcr_inv),
    }
    return kernels


KERNELS = build_kernels()


def kernel_for(model: ColorModelId) -> ConversionKernel:
    return KERNELS[model]


def roundtrip_rgb8(kernel: ConversionKernel, c: Rgb8) -> Rgb8:
    """Forward then inverse, quantized back to 8 bits."""
    return rgb8_from_unit(kernel.inverse(kernel.forward(unit_from_rgb8(c))))


def convert_image(
    buf: PixelBuffer,
    model: ColorModelId,
    kernels: Mapping[ColorModelId, ConversionKernel] | None = None,
) -> PixelBuffer:
    """Per-pixel forward conversion; output order matches input order."""
    fwd = (kernels or KERNELS)[model].forward
    return PixelBuffer(buf.width, buf.height, tuple(fwd(unit_from_rgb8(p)) for p in buf.pixels))


# ---------------------------------------------------------------------------
# per-model component metadata (names, ranges, slider step hints)


@dataclass(frozen=True, slots=True)
class Component:
    name: str
    lo: float
    hi: float
    step: float
    wraps: bool = False


_UNIT_STEP = 0.01

COMPONENTS: dict[ColorModelId, tuple[Component, ...]] = {
    ColorModelId.CMY: (
        Component("C", 0.0, 1.0, _UNIT_STEP),
        Component("M", 0.0, 1.0, _UNIT_STEP),
        Component("Y", 0.0, 1.0, _UNIT_STEP),
    ),
    ColorModelId.CMYK: (
        Component("C", 0.0, 1.0, _UNIT_STEP),
        Component("M", 0.0, 1.0, _UNIT_STEP),
        Component("Y", 0.0, 1.0, _UNIT_STEP),
        Component("K", 0.0, 1.0, _UNIT_STEP),
    ),
    ColorModelId.HSI: (
        Component("H", 0.0, 360.0, 1.0, wraps=True),
        Component("S", 0.0, 1.0, _UNIT_STEP),
        Component("I", 0.0, 1.0, _UNIT_STEP),
    ),
    ColorModelId.HSL: (
        Component("H", 0.0, 360.0, 1.0, wraps=True),
        Component("S", 0.0, 1.0, _UNIT_STEP),
        Component("L", 0.0, 1.0, _UNIT_STEP),
    ),
    ColorModelId.HSV: (
        Component("H", 0.0, 360.0, 1.0, wraps=True),
        Component("S", 0.0, 1.0, _UNIT_STEP),
        Component("V", 0.0, 1.0, _UNIT_STEP),
    ),
    ColorModelId.XYZ: (
        Component("X", 0.0, 0.9505, 0.005),
        Component("Y", 0.0, 1.0001, 0.005),
        Component("Z", 0.0, 1.0889, 0.005),
    ),
    ColorModelId.LAB: (
        Component("L", 0.0, 100.0001, 0.5),
        Component("a", -128.0, 128.0, 1.0),
        Component("b", -128.0, 128.0, 1.0),
    ),
    ColorModelId.LUV: (
        Component("L", 0.0, 100.0001, 0.5),
        Component("u", -134.0, 220.0, 1.0),
        Component("v", -140.0, 122.0, 1.0),
    ),
    ColorModelId.YIQ: (
        Component("Y", 0.0, 1.0, _UNIT_STEP),
        Component("I", -0.5961, 0.5961, 0.005),
        Component("Q", -0.5231, 0.5231, 0.005),
    ),
    ColorModelId.YUV: (
        Component("Y", 0.0, 1.0, _UNIT_STEP),
        Component("U", -0.4361, 0.4361, 0.005),
        Component("V", -0.6151, 0.6151, 0.005),
    ),
    ColorModelId.YCBCR: (
        Component("Y", 0.0, 255.0, 1.0),
        Component("Cb", 0.0, 255.0, 1.0),
        Component("Cr", 0.0, 255.0, 1.0),
    ),
}


def coord_from_components(model: ColorModelId, values: list[float] | tuple[float, ...]) -> ColorCoord:
    """Build a ColorCoord from a flat component list, checking arity."""
    expected = len(COMPONENTS[model])
    if len(values) != expected:
        raise ValueError(f"{model} takes {expected} components, got {len(values)}")
    vals = [float(v) for v in values]
    if model is ColorModelId.CMYK:
        return ColorCoord(model, vals[0], vals[1], vals[2], vals[3])
    return ColorCoord(model, vals[0], vals[1], vals[2])


# ---------------------------------------------------------------------------
# small shared helpers


def _expect(coord: ColorCoord, model: ColorModelId) -> None:
    if coord.model is not model:
        raise ValueError(f"expected {model} coordinates, got {coord.model}")


def _clamp(v: float, lo: float, hi: float) -> float:
    return lo if v < lo else hi if v > hi else v
