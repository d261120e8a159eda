"""Foundation value types: channel triples, model ids, white point, gamma curves."""

from __future__ import annotations

import enum
from dataclasses import dataclass

CHANNEL_MAX = 255


class ColorModelId(enum.Enum):
    """The eleven target models; RGB is the hub and deliberately not a member."""

    CMY = "cmy"
    CMYK = "cmyk"
    HSI = "hsi"
    HSL = "hsl"
    HSV = "hsv"
    XYZ = "xyz"
    LAB = "lab"
    LUV = "luv"
    YIQ = "yiq"
    YUV = "yuv"
    YCBCR = "ycbcr"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "ColorModelId":
        try:
            return cls(text.strip().lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown color model {text!r}; valid models: {valid}") from None


@dataclass(frozen=True, slots=True)
class Rgb8:
    """8-bit RGB triple, each channel an integer in [0, 255]."""

    r: int
    g: int
    b: int

    def __post_init__(self) -> None:
        for name, v in (("r", self.r), ("g", self.g), ("b", self.b)):
            if not isinstance(v, int) or not 0 <= v <= CHANNEL_MAX:
                raise ValueError(f"channel {name}={v!r} outside [0, {CHANNEL_MAX}]")

    def hex(self) -> str:
        return f"#{self.r:02X}{self.g:02X}{self.b:02X}"

    @classmethod
    def from_hex(cls, text: str) -> "Rgb8":
        s = text.strip().lstrip("#")
        if len(s) != 6:
            raise ValueError(f"expected #RRGGBB, got {text!r}")
        return cls(int(s[0:2], 16), int(s[2:4], 16), int(s[4:6], 16))


@dataclass(frozen=True, slots=True)
class UnitRgb:
    """Normalized RGB triple on [0, 1].

    Construction does not reject out-of-range values: inverse conversions may
    land slightly outside the cube and are clamped at the policy boundary
    (``clamped`` / ``rgb8_from_unit``), never errored.
    """

    r: float
    g: float
    b: float

    def clamped(self) -> "UnitRgb":
        return UnitRgb(_clamp01(self.r), _clamp01(self.g), _clamp01(self.b))


@dataclass(frozen=True, slots=True)
class ColorCoord:
    """A tagged coordinate triple (quadruple for CMYK) in a named model."""

    model: ColorModelId
    c1: float
    c2: float
    c3: float
    c4: float | None = None

    def __post_init__(self) -> None:
        if (self.c4 is not None) != (self.model is ColorModelId.CMYK):
            raise ValueError("c4 is present iff model is CMYK")

    @property
    def components(self) -> tuple[float, ...]:
        if self.c4 is None:
            return (self.c1, self.c2, self.c3)
        return (self.c1, self.c2, self.c3, self.c4)


@dataclass(frozen=True, slots=True)
class WhitePoint:
    """Reference white tristimulus values on the 0-100 scale."""

    xn: float
    yn: float
    zn: float

    @property
    def un_prime(self) -> float:
        return 4.0 * self.xn / (self.xn + 15.0 * self.yn + 3.0 * self.zn)

    @property
    def vn_prime(self) -> float:
        return 9.0 * self.yn / (self.xn + 15.0 * self.yn + 3.0 * self.zn)


D65 = WhitePoint(xn=95.047, yn=100.000, zn=108.883)


class GammaCurveKind(enum.Enum):
    CAMERA_REC709 = "camera_rec709"
    SRGB = "srgb"


# Exponent reproducing the standard Rec.709 OETF power segment (0.45).
REC709_STRICT_GAMMA = 1.0 / 0.45

# Camera-curve breakpoints: encode switches at linear 0.018, decode at coded
# 4.5 * 0.018 = 0.081. The encode knee is written as 0.081 / 4.5 so the two
# branch decisions stay complementary to the last float ulp.
_CAMERA_DECODE_KNEE = 0.081
_CAMERA_ENCODE_KNEE = _CAMERA_DECODE_KNEE / 4.5


@dataclass(frozen=True, slots=True)
class GammaCurve:
    """A transfer curve: camera Rec.709 style (parametric gamma) or sRGB.

    The camera curve defaults to the printed form whose power segment carries
    an outer division by 1.099; ``rec709_strict=True`` drops that division and
    defaults the exponent to 1/0.45, recovering the standard OETF.
    """

    kind: GammaCurveKind
    gamma_c: float = 2.2
    rec709_strict: bool = False

    def __post_init__(self) -> None:
        if self.gamma_c <= 0:
            raise ValueError("gamma_c must be positive")

    @classmethod
    def srgb(cls) -> "GammaCurve":
        return cls(kind=GammaCurveKind.SRGB, gamma_c=2.4)

    @classmethod
    def camera_rec709(cls, gamma_c: float | None = None, strict: bool = False) -> "GammaCurve":
        if gamma_c is None:
            gamma_c = REC709_STRICT_GAMMA if strict else 2.2
        return cls(kind=GammaCurveKind.CAMERA_REC709, gamma_c=gamma_c, rec709_strict=strict)

    def encode(self, v: float) -> float:
        """Linear light -> coded value."""
        if self.kind is GammaCurveKind.SRGB:
            if v <= 0.0031308:
                return 12.92 * v
            return 1.055 * v ** (1.0 / 2.4) - 0.055
        if v <= _CAMERA_ENCODE_KNEE:
            return 4.5 * v
        coded = 1.099 * v ** (1.0 / self.gamma_c) - 0.099
        if self.rec709_strict:
            return coded
        return coded / 1.099

    def decode(self, v: float) -> float:
        """Coded value -> linear light."""
        if self.kind is GammaCurveKind.SRGB:
            if v <= 0.04045:
                return v / 12.92
            return ((v + 0.055) / 1.055) ** 2.4
        if v <= _CAMERA_DECODE_KNEE:
            return v / 4.5
        coded = v * 1.099 if not self.rec709_strict else v
        return ((coded + 0.099) / 1.099) ** self.gamma_c


@dataclass(frozen=True, slots=True)
class PixelBuffer:
    """Row-major image carrier; pixels are Rgb8 before conversion, ColorCoord after."""

    width: int
    height: int
    pixels: tuple

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("width and height must be positive")
        if len(self.pixels) != self.width * self.height:
            raise ValueError(
                f"pixel count {len(self.pixels)} != width*height {self.width * self.height}"
            )


def _clamp01(v: float) -> float:
    if v < 0.0:
        return 0.0
    if v > 1.0:
        return 1.0
    return v


def unit_from_rgb8(c: Rgb8) -> UnitRgb:
    """Divide each channel by 255."""
    return UnitRgb(c.r / 255.0, c.g / 255.0, c.b / 255.0)


def rgb8_from_unit(c: UnitRgb) -> Rgb8:
    """Scale by 255, clamp, and round half-away-from-zero."""
    return Rgb8(_quantize(c.r), _quantize(c.g), _quantize(c.b))


def _quantize(v: float) -> int:
    scaled = v * 255.0
    if scaled <= 0.0:
        return 0
    if scaled >= 255.0:
        return 255
    # positive by now, so int() truncation == floor: half-away-from-zero
    return int(scaled + 0.5)
