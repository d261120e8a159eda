"""Conversion timing harness: warmup, repeated runs, overhead normalization,
and speed-class assignment.

All timing uses the monotonic high-resolution wall clock; inputs are generated
from a seed before the timed region and reused across models so every model
sees the same sequence.
"""

from __future__ import annotations

import enum
import json
import random
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import ColorModelId, PixelBuffer, Rgb8, rgb8_from_unit, unit_from_rgb8
from .transforms import KERNELS, convert_image

NULL_MODEL = "null"


class SpeedClass(enum.Enum):
    VERY_FAST = "Very Fast"
    FAST = "Fast"
    MODERATE = "Moderate"
    SLOW = "Slow"
    VERY_SLOW = "Very Slow"


# Relative-overhead cutoffs (percent); below the bound -> that class.
SPEED_THRESHOLDS = (
    (5.0, SpeedClass.VERY_FAST),
    (7.0, SpeedClass.FAST),
    (15.0, SpeedClass.MODERATE),
    (50.0, SpeedClass.SLOW),
)


def classify_speed(relative_overhead_percent: float) -> SpeedClass:
    """Map an overhead percentage (relative to the slowest model) to a tier."""
    if not 0.0 < relative_overhead_percent <= 100.0:
        raise ValueError(f"overhead {relative_overhead_percent} outside (0, 100]")
    for bound, klass in SPEED_THRESHOLDS:
        if relative_overhead_percent < bound:
            return klass
    return SpeedClass.VERY_SLOW


@dataclass(frozen=True, slots=True)
class BenchConfig:
    runs: int = 7
    iterations_per_run: int = 100_000
    image_width: int = 200
    image_height: int = 200
    warmup_iterations: int = 10_000
    seed: int = 0x5EED_C0DE

    def __post_init__(self) -> None:
        if self.runs < 2:
            raise ValueError("runs must be >= 2 (standard deviation needs two samples)")
        if self.iterations_per_run < 1:
            raise ValueError("iterations_per_run must be positive")
        if self.warmup_iterations < 0:
            raise ValueError("warmup_iterations must be non-negative")
        if self.image_width < 1 or self.image_height < 1:
            raise ValueError("image dimensions must be positive")

    @classmethod
    def scalar_default(cls, **overrides) -> "BenchConfig":
        return cls(**overrides)

    @classmethod
    def image_default(cls, **overrides) -> "BenchConfig":
        # a whole-image conversion is one iteration, so far fewer loops
        overrides.setdefault("iterations_per_run", 10)
        overrides.setdefault("warmup_iterations", 2)
        return cls(**overrides)


@dataclass(frozen=True, slots=True)
class BenchEntry:
    model: str
    mean_s: float
    std_s: float
    overhead_pct: float
    speed_class: SpeedClass


@dataclass(frozen=True, slots=True)
class BenchReport:
    mode: str
    direction: str
    config: BenchConfig
    entries: tuple[BenchEntry, ...]

    def entry(self, model: str) -> BenchEntry:
        for e in self.entries:
            if e.model == model:
                return e
        raise KeyError(model)


def mean_and_std(values: Sequence[float]) -> tuple[float, float]:
    """Arithmetic mean and sample standard deviation."""
    return statistics.mean(values), statistics.stdev(values)


def random_rgb8_sequence(seed: int, count: int) -> list[Rgb8]:
    rng = random.Random(seed)
    return [Rgb8(rng.randrange(256), rng.randrange(256), rng.randrange(256)) for _ in range(count)]


def seeded_image(seed: int, width: int, height: int) -> PixelBuffer:
    return PixelBuffer(width, height, tuple(random_rgb8_sequence(seed, width * height)))


def _parse_model(model) -> str:
    if isinstance(model, ColorModelId):
        return model.value
    name = str(model).strip().lower()
    if name == NULL_MODEL:
        return NULL_MODEL
    return ColorModelId.parse(name).value


def bench_scalar(cfg: BenchConfig, models: Sequence, direction: str = "roundtrip") -> BenchReport:
    """Time per-color conversions; the default mode times forward+inverse jointly."""
    if direction not in ("roundtrip", "forward", "inverse"):
        raise ValueError(f"unknown direction {direction!r}")
    names = _validated_models(models)
    inputs = random_rgb8_sequence(cfg.seed, cfg.iterations_per_run)

    timings: dict[str, list[float]] = {}
    for name in names:
        work, items = _scalar_work(name, direction, inputs)
        _consume(work, items, cfg.warmup_iterations)
        per_run = []
        for _ in range(cfg.runs):
            t0 = time.perf_counter()
            for item in items:
                work(item)
            per_run.append((time.perf_counter() - t0) / len(items))
        timings[name] = per_run
    return _build_report("scalar", direction, cfg, names, timings)


def bench_image(cfg: BenchConfig, models: Sequence) -> BenchReport:
    """Time whole-image forward conversions of one seeded image per iteration."""
    names = _validated_models(models)
    image = seeded_image(cfg.seed, cfg.image_width, cfg.image_height)

    timings = {}
    for name in names:
        work = _image_work(name, image)
        for _ in range(cfg.warmup_iterations):
            work()
        per_run = []
        for _ in range(cfg.runs):
            t0 = time.perf_counter()
            for _ in range(cfg.iterations_per_run):
                work()
            per_run.append((time.perf_counter() - t0) / cfg.iterations_per_run)
        timings[name] = per_run
    return _build_report("image", "forward", cfg, names, timings)


def _validated_models(models: Sequence) -> list[str]:
    names = [_parse_model(m) for m in models]
    if not names:
        raise ValueError("at least one model is required")
    if len(set(names)) != len(names):
        raise ValueError("duplicate models in benchmark request")
    return names


def _scalar_work(name: str, direction: str, inputs: list[Rgb8]):
    if name == NULL_MODEL:
        if direction == "inverse":
            return (lambda c: c), list(inputs)
        return (lambda c: c), inputs
    kernel = KERNELS[ColorModelId(name)]
    fwd, inv = kernel.forward, kernel.inverse
    if direction == "roundtrip":
        def work(c, _f=fwd, _i=inv):
            return rgb8_from_unit(_i(_f(unit_from_rgb8(c))))
        return work, inputs
    if direction == "forward":
        def work(c, _f=fwd):
            return _f(unit_from_rgb8(c))
        return work, inputs
    coords = [fwd(unit_from_rgb8(c)) for c in inputs]

    def work(k, _i=inv):
        return rgb8_from_unit(_i(k))

    return work, coords


def _image_work(name: str, image: PixelBuffer):
    if name == NULL_MODEL:
        def work(_img=image):
            return PixelBuffer(_img.width, _img.height, tuple(_img.pixels))
        return work
    model = ColorModelId(name)

    def work(_img=image, _m=model):
        return convert_image(_img, _m)

    return work


def _consume(work, items: Iterable, count: int) -> None:
    done = 0
    while done < count:
        for item in items:
            if done >= count:
                return
            work(item)
            done += 1


def _build_report(mode, direction, cfg, names, timings) -> BenchReport:
    stats = {name: mean_and_std(times) for name, times in timings.items()}
    slowest = max(m for m, _ in stats.values())
    entries = []
    for name in names:
        mean_s, std_s = stats[name]
        # divide first so the slowest model reads exactly 100.0
        overhead = 100.0 * (mean_s / slowest)
        entries.append(
            BenchEntry(
                model=name,
                mean_s=mean_s,
                std_s=std_s,
                overhead_pct=overhead,
                speed_class=classify_speed(overhead),
            )
        )
    return BenchReport(mode=mode, direction=direction, config=cfg, entries=tuple(entries))


# ---------------------------------------------------------------------------
# serialization

CSV_HEADER = "model,mean_s,std_s,overhead_pct,class"


def report_to_csv(report: BenchReport) -> str:
    lines = [CSV_HEADER]
    for e in report.entries:
        lines.append(
            f"{e.model},{e.mean_s:.9e},{e.std_s:.9e},{e.overhead_pct:.4f},{e.speed_class.value}"
        )
    return "\n".join(lines) + "\n"


def report_to_json(report: BenchReport) -> str:
    payload = {
        "mode": report.mode,
        "direction": report.direction,
        "runs": report.config.runs,
        "iterations_per_run": report.config.iterations_per_run,
        "warmup_iterations": report.config.warmup_iterations,
        "seed": report.config.seed,
        "entries": [
            {
                "model": e.model,
                "mean_s": e.mean_s,
                "std_s": e.std_s,
                "overhead_pct": e.overhead_pct,
                "class": e.speed_class.value,
            }
            for e in report.entries
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def format_si_seconds(v: float) -> str:
    for scale, suffix in ((1.0, "s"), (1e-3, "ms"), (1e-6, "us"), (1e-9, "ns")):
        if v >= scale:
            return f"{v / scale:.3g} {suffix}"
    return f"{v / 1e-9:.3g} ns"


def render_table(report: BenchReport) -> str:
    cfg = report.config
    per = "image conversions" if report.mode == "image" else "iterations"
    lines = [
        f"{report.mode} benchmark ({report.direction}): {cfg.runs} runs, "
        f"{cfg.iterations_per_run} {per} per run, seed {cfg.seed}",
        f"{'model':<8} {'mean':>12} {'std':>12} {'overhead':>9}  class",
    ]
    for e in report.entries:
        lines.append(
            f"{e.model:<8} {format_si_seconds(e.mean_s):>12} {format_si_seconds(e.std_s):>12} "
            f"{e.overhead_pct:>8.2f}%  {e.speed_class.value}"
        )
    return "\n".join(lines) + "\n"
