"""Fuzzy sets over color components, fuzzy colors, and fuzzy color spaces.

A fuzzy color ties one membership function to each HS*-space axis; a fuzzy
color space is a labeled family of fuzzy colors, optionally forming a Ruspini
partition (memberships sum to one everywhere) on the hue axis.
"""

from __future__ import annotations

import configparser
import enum
import math
from dataclasses import dataclass
from importlib import resources

from .core import ColorCoord, ColorModelId

HUE_SPAN = 360.0
_QUADRATURE_POINTS = 10_001


class MfKind(enum.Enum):
    TRIANGULAR = "triangular"
    TRAPEZOIDAL = "trapezoidal"
    GAUSSIAN = "gaussian"


class MfDomain(enum.Enum):
    HUE_CIRCULAR = "hue_circular"
    UNIT_INTERVAL = "unit_interval"


class Combiner(enum.Enum):
    MIN = "min"
    PRODUCT = "product"


class PartitionMode(enum.Enum):
    RUSPINI = "ruspini"
    NONE = "none"


@dataclass(frozen=True, slots=True)
class MembershipFunction:
    """Normalized membership function; triangles on the hue circle may wrap 0."""

    kind: MfKind
    params: tuple[float, ...]
    domain: MfDomain = MfDomain.UNIT_INTERVAL

    def __post_init__(self) -> None:
        n_expected = {MfKind.TRIANGULAR: 3, MfKind.TRAPEZOIDAL: 4, MfKind.GAUSSIAN: 2}[self.kind]
        if len(self.params) != n_expected:
            raise ValueError(f"{self.kind.value} takes {n_expected} parameters, got {len(self.params)}")
        if self.kind is MfKind.GAUSSIAN:
            mean, sigma = self.params
            if sigma <= 0:
                raise ValueError("sigma must be positive")
            if self.domain is MfDomain.UNIT_INTERVAL and not 0.0 <= mean <= 1.0:
                raise ValueError("gaussian mean outside the unit interval")
            return
        knots = _unwrap(self.params, self.domain)
        if self.domain is MfDomain.UNIT_INTERVAL:
            if knots[0] < 0.0 or knots[-1] > 1.0:
                raise ValueError(f"knots {self.params} outside the unit interval")
        elif knots[-1] - knots[0] > HUE_SPAN:
            raise ValueError(f"support of {self.params} wider than the full hue circle")

    @classmethod
    def triangular(cls, a: float, b: float, c: float, domain: MfDomain = MfDomain.UNIT_INTERVAL):
        return cls(MfKind.TRIANGULAR, (a, b, c), domain)

    @classmethod
    def trapezoidal(cls, a: float, b: float, c: float, d: float, domain: MfDomain = MfDomain.UNIT_INTERVAL):
        return cls(MfKind.TRAPEZOIDAL, (a, b, c, d), domain)

    @classmethod
    def gaussian(cls, mean: float, sigma: float, domain: MfDomain = MfDomain.UNIT_INTERVAL):
        return cls(MfKind.GAUSSIAN, (mean, sigma), domain)


def _unwrap(params: tuple[float, ...], domain: MfDomain) -> tuple[float, ...]:
    """Knots as a non-decreasing sequence; hue knots may cross 0 and gain 360."""
    out = [float(params[0])]
    for v in params[1:]:
        v = float(v)
        if domain is MfDomain.HUE_CIRCULAR:
            while v < out[-1]:
                v += HUE_SPAN
        elif v < out[-1]:
            raise ValueError(f"knots {params} not ordered")
        out.append(v)
    return tuple(out)


def membership(f: MembershipFunction, x: float) -> float:
    """Membership degree of x, in [0, 1]."""
    if f.domain is MfDomain.HUE_CIRCULAR:
        x = x % HUE_SPAN
        if f.kind is MfKind.GAUSSIAN:
            mean, sigma = f.params
            d = abs(x - mean % HUE_SPAN)
            d = min(d, HUE_SPAN - d)
            return math.exp(-(d * d) / (2.0 * sigma * sigma))
        knots = _unwrap(f.params, f.domain)
        return max(_piecewise(knots, x), _piecewise(knots, x + HUE_SPAN))
    if f.kind is MfKind.GAUSSIAN:
        mean, sigma = f.params
        return math.exp(-((x - mean) ** 2) / (2.0 * sigma * sigma))
    return _piecewise(_unwrap(f.params, f.domain), x)


def _piecewise(knots: tuple[float, ...], x: float) -> float:
    if len(knots) == 3:
        a, b, c = knots
        b2, c2 = b, c
    else:
        a, b, c2, c = knots[0], knots[1], knots[2], knots[3]
        b2 = c2
    if x < a or x > c:
        return 0.0
    if x < b:
        return (x - a) / (b - a)
    if x <= b2:
        return 1.0
    return (c - x) / (c - b2)


def defuzzify_centroid(f: MembershipFunction) -> float:
    """Center of gravity of the area under the membership curve."""
    if f.kind is MfKind.GAUSSIAN:
        return _centroid_quadrature(f)
    knots = _unwrap(f.params, f.domain)
    if knots[-1] - knots[0] == 0.0:
        raise ValueError("membership function has zero area")
    if len(knots) == 3:
        centroid = sum(knots) / 3.0
    else:
        a, b, c, d = knots
        pieces = (
            ((b - a) / 2.0, (a + 2.0 * b) / 3.0),  # rising ramp
            (c - b, (b + c) / 2.0),  # plateau
            ((d - c) / 2.0, (2.0 * c + d) / 3.0),  # falling ramp
        )
        area = sum(w for w, _ in pieces)
        if area == 0.0:
            raise ValueError("membership function has zero area")
        centroid = sum(w * x for w, x in pieces) / area
    if f.domain is MfDomain.HUE_CIRCULAR:
        return centroid % HUE_SPAN
    return centroid


def _centroid_quadrature(f: MembershipFunction) -> float:
    if f.domain is MfDomain.HUE_CIRCULAR:
        # support-weighted circular mean
        sin_acc = cos_acc = area = 0.0
        for k in range(_QUADRATURE_POINTS):
            theta = HUE_SPAN * k / _QUADRATURE_POINTS
            mu = membership(f, theta)
            rad = math.radians(theta)
            sin_acc += mu * math.sin(rad)
            cos_acc += mu * math.cos(rad)
            area += mu
        if area == 0.0:
            raise ValueError("membership function has zero area")
        return math.degrees(math.atan2(sin_acc, cos_acc)) % HUE_SPAN
    num = den = 0.0
    for k in range(_QUADRATURE_POINTS):
        x = k / (_QUADRATURE_POINTS - 1)
        mu = membership(f, x)
        w = 0.5 if k in (0, _QUADRATURE_POINTS - 1) else 1.0
        num += w * x * mu
        den += w * mu
    if den == 0.0:
        raise ValueError("membership function has zero area")
    return num / den


_FULL_UNIT = MembershipFunction.trapezoidal(0.0, 0.0, 1.0, 1.0)


@dataclass(frozen=True, slots=True)
class FuzzyColor:
    """A linguistic label with membership functions over H, S, and the third axis."""

    label: str
    mu_h: MembershipFunction
    mu_s: MembershipFunction = _FULL_UNIT
    mu_i: MembershipFunction = _FULL_UNIT
    combiner: Combiner = Combiner.MIN

    def __post_init__(self) -> None:
        if self.mu_h.domain is not MfDomain.HUE_CIRCULAR:
            raise ValueError(f"{self.label}: hue membership must be on the circular domain")
        for axis, f in (("saturation", self.mu_s), ("third component", self.mu_i)):
            if f.domain is not MfDomain.UNIT_INTERVAL:
                raise ValueError(f"{self.label}: {axis} membership must be on the unit interval")

    def membership(self, h: float, s: float, i: float) -> float:
        mh = membership(self.mu_h, h)
        ms = membership(self.mu_s, s)
        mi = membership(self.mu_i, i)
        if self.combiner is Combiner.MIN:
            return min(mh, ms, mi)
        return mh * ms * mi


_HS_MODELS = (ColorModelId.HSI, ColorModelId.HSL, ColorModelId.HSV)


@dataclass(frozen=True, slots=True)
class FuzzyColorSpace:
    """Named set of fuzzy colors over one HS* model."""

    name: str
    colors: tuple[FuzzyColor, ...]
    partition_mode: PartitionMode = PartitionMode.NONE
    model: ColorModelId = ColorModelId.HSV

    def __post_init__(self) -> None:
        if self.model not in _HS_MODELS:
            raise ValueError(f"fuzzy color spaces are defined over HS* models, not {self.model}")
        if not self.colors:
            raise ValueError("a fuzzy color space needs at least one color")
        labels = [c.label for c in self.colors]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in {self.name}")


def classify(space: FuzzyColorSpace, coord: ColorCoord) -> list[tuple[str, float]]:
    """All labels with positive membership, strongest first."""
    if coord.model is not space.model:
        raise ValueError(f"coordinate is {coord.model}, space {space.name} expects {space.model}")
    h, s, i = coord.c1 % HUE_SPAN, coord.c2, coord.c3
    scored = [(c.label, c.membership(h, s, i)) for c in space.colors]
    hits = [(label, mu) for label, mu in scored if mu > 0.0]
    hits.sort(key=lambda t: (-t[1], t[0]))
    return hits


@dataclass(frozen=True, slots=True)
class PartitionReport:
    samples: int
    max_deviation: float
    worst_point: float


def validate_partition(space: FuzzyColorSpace, samples: int) -> PartitionReport:
    """Max |sum of hue memberships - 1| over an even hue grid."""
    if space.partition_mode is not PartitionMode.RUSPINI:
        raise ValueError(f"{space.name} is not declared as a Ruspini partition")
    if samples <= 0:
        raise ValueError("samples must be positive")
    worst = -1.0
    worst_at = 0.0
    for k in range(samples):
        h = HUE_SPAN * k / samples
        total = sum(membership(c.mu_h, h) for c in space.colors)
        dev = abs(total - 1.0)
        if dev > worst:
            worst, worst_at = dev, h
    return PartitionReport(samples=samples, max_deviation=worst, worst_point=worst_at)


# ---------------------------------------------------------------------------
# config format
#
# INI-style text: one [space] section, one [color:<label>] section per color.
# Membership specs are "<kind> <param> <param> ..."; the kind tag `sigmoid`
# is reserved but not implemented.

_RESERVED_KINDS = ("sigmoid",)
_AXIS_KEYS = ("hue", "saturation", "value")


def parse_space(text: str) -> FuzzyColorSpace:
    cp = configparser.ConfigParser()
    cp.read_string(text)
    if "space" not in cp:
        raise ValueError("missing [space] section")
    meta = cp["space"]
    name = meta.get("name", "unnamed")
    model = ColorModelId.parse(meta.get("model", "hsv"))
    partition = PartitionMode(meta.get("partition", "none").strip().lower())
    combiner = Combiner(meta.get("combiner", "min").strip().lower())

    colors = []
    for section in cp.sections():
        if not section.startswith("color:"):
            continue
        label = section.split(":", 1)[1].strip()
        funcs = {}
        for axis in _AXIS_KEYS:
            if axis not in cp[section]:
                raise ValueError(f"[{section}] is missing the {axis} membership")
            domain = MfDomain.HUE_CIRCULAR if axis == "hue" else MfDomain.UNIT_INTERVAL
            funcs[axis] = _parse_mf(cp[section][axis], domain)
        colors.append(
            FuzzyColor(
                label=label,
                mu_h=funcs["hue"],
                mu_s=funcs["saturation"],
                mu_i=funcs["value"],
                combiner=combiner,
            )
        )
    return FuzzyColorSpace(name=name, colors=tuple(colors), partition_mode=partition, model=model)


def _parse_mf(spec: str, domain: MfDomain) -> MembershipFunction:
    parts = spec.split()
    if not parts:
        raise ValueError("empty membership spec")
    kind_name = parts[0].lower()
    if kind_name in _RESERVED_KINDS:
        raise ValueError(f"membership kind {kind_name!r} is reserved and not implemented")
    try:
        kind = MfKind(kind_name)
    except ValueError:
        raise ValueError(f"unknown membership kind {kind_name!r}") from None
    params = tuple(float(p) for p in parts[1:])
    return MembershipFunction(kind, params, domain)


def load_space(path: str) -> FuzzyColorSpace:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_space(fh.read())


BUNDLED_SPACE_RESOURCE = "hue_wheel_10.colors"


def bundled_space_text() -> str:
    return resources.files("colorlab").joinpath("data", BUNDLED_SPACE_RESOURCE).read_text("utf-8")


def bundled_space() -> FuzzyColorSpace:
    return parse_space(bundled_space_text())
