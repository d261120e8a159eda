"""CIE color-difference formulas (1976, 1994, 2000) over L*a*b* coordinates."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import ColorCoord, ColorModelId


@dataclass(frozen=True, slots=True)
class LabPair:
    """The two colors a difference formula compares."""

    first: ColorCoord
    second: ColorCoord

    def __post_init__(self) -> None:
        for coord in (self.first, self.second):
            if coord.model is not ColorModelId.LAB:
                raise ValueError(f"LabPair requires LAB coordinates, got {coord.model}")


@dataclass(frozen=True, slots=True)
class DeltaEParams:
    """Parametric weighting factors; 1 everywhere under standard conditions."""

    k_l: float = 1.0
    k_c: float = 1.0
    k_h: float = 1.0

    def __post_init__(self) -> None:
        if min(self.k_l, self.k_c, self.k_h) <= 0:
            raise ValueError("weighting factors must be strictly positive")


DEFAULT_PARAMS = DeltaEParams()

# CIE94 application constants (K1, K2)
CIE94_GRAPHIC_ARTS = (0.045, 0.015)
CIE94_TEXTILES = (0.048, 0.014)


def delta_e_76(pair: LabPair) -> float:
    """Euclidean distance in CIELAB."""
    p, q = pair.first, pair.second
    return math.sqrt((q.c1 - p.c1) ** 2 + (q.c2 - p.c2) ** 2 + (q.c3 - p.c3) ** 2)


def delta_e_94(pair: LabPair, params: DeltaEParams = DEFAULT_PARAMS, textiles: bool = False) -> float:
    """CIE94; weighting functions are referenced to the first color's chroma,
    which makes the formula order-dependent (as printed)."""
    l1, a1, b1 = pair.first.components
    l2, a2, b2 = pair.second.components
    k1, k2 = CIE94_TEXTILES if textiles else CIE94_GRAPHIC_ARTS

    chroma1 = math.hypot(a1, b1)
    chroma2 = math.hypot(a2, b2)
    d_l = l2 - l1
    d_c = chroma2 - chroma1
    # hue difference by the Euclidean remainder; tiny negative radicands are
    # float noise and clamp to zero
    radicand = (a2 - a1) ** 2 + (b2 - b1) ** 2 - d_c * d_c
    d_h = math.sqrt(radicand) if radicand > 0.0 else 0.0

    return math.sqrt(
        (d_l / params.k_l) ** 2
        + (d_c / (params.k_c * (1.0 + k1 * chroma1))) ** 2
        + (d_h / (params.k_h * (1.0 + k2 * chroma1))) ** 2
    )


def delta_e_2000(pair: LabPair, params: DeltaEParams = DEFAULT_PARAMS) -> float:
    """CIEDE2000 with chroma rescaling, mean-hue weighting, and the rotation term."""
    l1, a1, b1 = pair.first.components
    l2, a2, b2 = pair.second.components

    c_mean = (math.hypot(a1, b1) + math.hypot(a2, b2)) / 2.0
    g = 0.5 * (1.0 - math.sqrt(_pow7_ratio(c_mean)))
    a1p, a2p = a1 * (1.0 + g), a2 * (1.0 + g)
    c1p, c2p = math.hypot(a1p, b1), math.hypot(a2p, b2)
    h1p, h2p = _hue_deg(a1p, b1), _hue_deg(a2p, b2)

    d_l = l2 - l1
    d_c = c2p - c1p
    chroma_product = c1p * c2p
    if chroma_product == 0.0:
        dh = 0.0
        h_mean = h1p + h2p
    else:
        dh = h2p - h1p
        if dh > 180.0:
            dh -= 360.0
        elif dh < -180.0:
            dh += 360.0
        h_mean = _mean_hue(h1p, h2p)
    d_h = 2.0 * math.sqrt(chroma_product) * math.sin(math.radians(dh) / 2.0)

    l_mean = (l1 + l2) / 2.0
    c_mean_p = (c1p + c2p) / 2.0
    t = (
        1.0
        - 0.17 * _cosd(h_mean - 30.0)
        + 0.24 * _cosd(2.0 * h_mean)
        + 0.32 * _cosd(3.0 * h_mean + 6.0)
        - 0.20 * _cosd(4.0 * h_mean - 63.0)
    )
    l_shift = (l_mean - 50.0) ** 2
    s_l = 1.0 + 0.015 * l_shift / math.sqrt(20.0 + l_shift)
    s_c = 1.0 + 0.045 * c_mean_p
    s_h = 1.0 + 0.015 * c_mean_p * t
    rotation = -2.0 * math.sqrt(_pow7_ratio(c_mean_p)) * _sind(
        60.0 * math.exp(-(((h_mean - 275.0) / 25.0) ** 2))
    )

    term_l = d_l / (params.k_l * s_l)
    term_c = d_c / (params.k_c * s_c)
    term_h = d_h / (params.k_h * s_h)
    return math.sqrt(term_l**2 + term_c**2 + term_h**2 + rotation * term_c * term_h)


def _pow7_ratio(c: float) -> float:
    c7 = c**7
    return c7 / (c7 + 25.0**7)


def _hue_deg(a: float, b: float) -> float:
    if a == 0.0 and b == 0.0:
        return 0.0
    return math.degrees(math.atan2(b, a)) % 360.0


def _mean_hue(h1: float, h2: float) -> float:
    if abs(h1 - h2) <= 180.0:
        return (h1 + h2) / 2.0
    if h1 + h2 < 360.0:
        return (h1 + h2 + 360.0) / 2.0
    return (h1 + h2 - 360.0) / 2.0


def _cosd(deg: float) -> float:
    return math.cos(math.radians(deg))


def _sind(deg: float) -> float:
    return math.sin(math.radians(deg))
