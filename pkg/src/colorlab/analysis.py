"""Completion-time analytics for the slider experiment: session ingest,
per-model means, and deterministic 1-D k-means categorization."""

from __future__ import annotations

import csv
import enum
import json
import math
import os
import statistics
from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import ColorModelId, Rgb8

# RGB is excluded from conversion benchmarks but takes part in the experiment
ANALYSIS_MODELS = ("rgb",) + tuple(m.value for m in ColorModelId)

SESSION_FIELDS = ("participant_id", "model", "target_hex", "components", "elapsed_s", "timestamp")
COMPONENT_SEP = ";"

_COMPONENT_ARITY = {"rgb": 3, "cmyk": 4}


class Intuitiveness(enum.Enum):
    HIGH = "high"
    MEDIUM = "medium"
    LOW = "low"


@dataclass(frozen=True, slots=True)
class SessionRecord:
    participant_id: str
    model: str
    target: Rgb8
    components: tuple[float, ...]
    elapsed_seconds: float
    timestamp: str

    def __post_init__(self) -> None:
        if self.model not in ANALYSIS_MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if not self.elapsed_seconds > 0:
            raise ValueError(f"elapsed_seconds must be positive, got {self.elapsed_seconds}")
        expected = _COMPONENT_ARITY.get(self.model, 3)
        if len(self.components) != expected:
            raise ValueError(f"{self.model} takes {expected} components, got {len(self.components)}")


@dataclass(frozen=True, slots=True)
class RejectedRow:
    line: int
    reason: str


@dataclass(frozen=True, slots=True)
class IngestResult:
    records: tuple[SessionRecord, ...]
    rejected: tuple[RejectedRow, ...]


def session_row(record: SessionRecord) -> list[str]:
    return [
        record.participant_id,
        record.model,
        record.target.hex(),
        COMPONENT_SEP.join(_format_component(v) for v in record.components),
        _format_component(record.elapsed_seconds),
        record.timestamp,
    ]


def _format_component(v: float) -> str:
    # stable short decimal: integers render bare, others keep full precision
    if float(v).is_integer():
        return str(int(v))
    return repr(float(v))


def ingest_sessions(source) -> IngestResult:
    """Parse a session CSV; malformed rows are reported with line numbers."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return _ingest(fh)
    return _ingest(source)


def _ingest(fh) -> IngestResult:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("session file is empty") from None
    if tuple(h.strip() for h in header) != SESSION_FIELDS:
        raise ValueError(f"expected header {','.join(SESSION_FIELDS)}, got {','.join(header)}")

    records: list[SessionRecord] = []
    rejected: list[RejectedRow] = []
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        try:
            records.append(_parse_row(row))
        except (ValueError, IndexError) as exc:
            rejected.append(RejectedRow(line=line, reason=str(exc)))
    if not records:
        raise ValueError("no valid session rows")
    return IngestResult(records=tuple(records), rejected=tuple(rejected))


def _parse_row(row: Sequence[str]) -> SessionRecord:
    if len(row) != len(SESSION_FIELDS):
        raise ValueError(f"expected {len(SESSION_FIELDS)} fields, got {len(row)}")
    participant, model, target_hex, components, elapsed, timestamp = (c.strip() for c in row)
    comps = tuple(float(p) for p in components.split(COMPONENT_SEP)) if components else ()
    return SessionRecord(
        participant_id=participant,
        model=model.lower(),
        target=Rgb8.from_hex(target_hex),
        components=comps,
        elapsed_seconds=float(elapsed),
        timestamp=timestamp,
    )


def mean_times(records: Sequence[SessionRecord]) -> dict[str, float]:
    """Arithmetic mean completion time per model, in seconds."""
    buckets: dict[str, list[float]] = {}
    for r in records:
        buckets.setdefault(r.model, []).append(r.elapsed_seconds)
    return {model: statistics.mean(times) for model, times in buckets.items()}


# ---------------------------------------------------------------------------
# deterministic 1-D k-means


def lloyd_1d(values: Sequence[float], k: int) -> tuple[list[int], list[float]]:
    """Lloyd iterations seeded at (min, median, ..., max) order statistics.

    Returns (assignment per input value, centroids ascending). Ties go to the
    lower-centroid cluster; results are independent of input order.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if len(set(values)) < k:
        raise ValueError(f"need at least {k} distinct values, got {len(set(values))}")
    data = sorted(values)
    if k == 1:
        centroids = [statistics.mean(data)]
    else:
        quantiles = [i / (k - 1) for i in range(k)]
        centroids = [_quantile(data, q) for q in quantiles]

    assignment = [-1] * len(values)
    while True:
        new_assignment = [_nearest(centroids, v) for v in values]
        sums = [0.0] * k
        counts = [0] * k
        for v, c in zip(values, new_assignment):
            sums[c] += v
            counts[c] += 1
        centroids = [
            sums[i] / counts[i] if counts[i] else centroids[i] for i in range(k)
        ]
        order = sorted(range(k), key=lambda i: centroids[i])
        centroids = [centroids[i] for i in order]
        relabel = {old: new for new, old in enumerate(order)}
        new_assignment = [relabel[c] for c in new_assignment]
        if new_assignment == assignment:
            return assignment, centroids
        assignment = new_assignment


def _quantile(sorted_data: Sequence[float], q: float) -> float:
    pos = q * (len(sorted_data) - 1)
    lo, hi = math.floor(pos), math.ceil(pos)
    if lo == hi:
        return sorted_data[lo]
    frac = pos - lo
    return sorted_data[lo] * (1.0 - frac) + sorted_data[hi] * frac


def _nearest(centroids: Sequence[float], v: float) -> int:
    best, best_d = 0, abs(v - centroids[0])
    for i in range(1, len(centroids)):
        d = abs(v - centroids[i])
        if d < best_d:  # strict: ties keep the lower-centroid cluster
            best, best_d = i, d
    return best


@dataclass(frozen=True, slots=True)
class IntuitivenessEntry:
    model: str
    mean_time_seconds: float
    cluster_index: int
    category: Intuitiveness


@dataclass(frozen=True, slots=True)
class IntuitivenessTable:
    entries: tuple[IntuitivenessEntry, ...]

    def category_of(self, model: str) -> Intuitiveness:
        for e in self.entries:
            if e.model == model:
                return e.category
        raise KeyError(model)

    def models_in(self, category: Intuitiveness) -> tuple[str, ...]:
        return tuple(e.model for e in self.entries if e.category is category)


_CATEGORY_BY_CLUSTER = (Intuitiveness.HIGH, Intuitiveness.MEDIUM, Intuitiveness.LOW)


def kmeans_1d(values: Mapping[str, float], k: int = 3) -> IntuitivenessTable:
    """Cluster mean times into k=3 tiers; lowest-time cluster reads HIGH."""
    if k != 3:
        raise ValueError("intuitiveness categories are defined for k=3")
    models = sorted(values)
    assignment, _ = lloyd_1d([values[m] for m in models], k)
    entries = tuple(
        IntuitivenessEntry(
            model=m,
            mean_time_seconds=values[m],
            cluster_index=c,
            category=_CATEGORY_BY_CLUSTER[c],
        )
        for m, c in zip(models, assignment)
    )
    return IntuitivenessTable(entries=entries)


# mean completion times (seconds) reported for the twelve tested models
PAPER_MEANS = {
    "cmy": 50.58,
    "cmyk": 46.69,
    "hsi": 48.80,
    "hsl": 63.88,
    "hsv": 34.25,
    "lab": 58.74,
    "luv": 34.37,
    "rgb": 54.69,
    "xyz": 122.71,
    "ycbcr": 57.29,
    "yiq": 58.54,
    "yuv": 38.63,
}


def replay_paper() -> IntuitivenessTable:
    return kmeans_1d(PAPER_MEANS)


# ---------------------------------------------------------------------------
# serialization

TABLE_CSV_HEADER = "model,mean_s,cluster,category"


def table_to_csv(table: IntuitivenessTable) -> str:
    lines = [TABLE_CSV_HEADER]
    for e in table.entries:
        lines.append(f"{e.model},{e.mean_time_seconds:.4f},{e.cluster_index},{e.category.value}")
    return "\n".join(lines) + "\n"


def table_to_json(table: IntuitivenessTable) -> str:
    payload = {
        "entries": [
            {
                "model": e.model,
                "mean_s": e.mean_time_seconds,
                "cluster": e.cluster_index,
                "category": e.category.value,
            }
            for e in table.entries
        ]
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_intuitiveness(table: IntuitivenessTable) -> str:
    lines = [f"{'model':<8} {'mean time (s)':>14} {'cluster':>8}  category"]
    for e in table.entries:
        lines.append(
            f"{e.model:<8} {e.mean_time_seconds:>14.2f} {e.cluster_index:>8}  {e.category.value}"
        )
    return "\n".join(lines) + "\n"
