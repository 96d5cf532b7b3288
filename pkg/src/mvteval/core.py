"""Domain model, dataset I/O and identity plumbing.

A dataset is an immutable collection of 2-D points indexed by camera view
and frame. Ground-truth points carry identities that are shared across
views and time; predicted points may arrive with identities (multi-view
tracker output) or without (per-frame detector output, to be linked later
by temporal matching).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Any, Iterable


class Role(enum.Enum):
    """Which side of the evaluation a dataset belongs to."""

    GROUND_TRUTH = "ground_truth"
    PREDICTION = "prediction"


class DatasetError(ValueError):
    """Raised for malformed or inconsistent dataset input.

    ``position`` locates the offending element, e.g. ``points[3].x``.
    """

    def __init__(self, message: str, position: str | None = None):
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


@dataclass(frozen=True)
class Point:
    """One labelled or predicted 2-D point observation."""

    view: int
    frame: int
    x: float
    y: float
    id: str | None = None
    class_label: str | None = None


@dataclass(frozen=True)
class Dataset:
    """Immutable point collection with its image geometry.

    Points are kept in input order; all per-(view, frame) accessors
    preserve that order, which makes downstream matching deterministic.
    """

    n_views: int
    n_frames: int
    image_width: int
    image_height: int
    points: tuple[Point, ...]
    role: Role
    _by_frame: dict[tuple[int, int], tuple[Point, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.n_views < 1:
            raise DatasetError("n_views must be >= 1", "n_views")
        if self.n_frames < 1:
            raise DatasetError("n_frames must be >= 1", "n_frames")
        if self.image_width <= 0 or self.image_height <= 0:
            raise DatasetError("image dimensions must be positive", "image_width")
        by_frame: dict[tuple[int, int], list[Point]] = {}
        seen_ids: set[tuple[str, int, int]] = set()
        for i, p in enumerate(self.points):
            pos = f"points[{i}]"
            if not 0 <= p.view < self.n_views:
                raise DatasetError(f"view {p.view} out of range", f"{pos}.view")
            if not 0 <= p.frame < self.n_frames:
                raise DatasetError(f"frame {p.frame} out of range", f"{pos}.frame")
            if not 0 <= p.x <= self.image_width:
                raise DatasetError(f"x={p.x} outside image", f"{pos}.x")
            if not 0 <= p.y <= self.image_height:
                raise DatasetError(f"y={p.y} outside image", f"{pos}.y")
            if self.role is Role.GROUND_TRUTH and p.id is None:
                raise DatasetError("ground-truth point without id", f"{pos}.id")
            if p.id is not None:
                key = (p.id, p.view, p.frame)
                if key in seen_ids:
                    raise DatasetError(
                        f"duplicate id {p.id!r} in view {p.view}, frame {p.frame}",
                        f"{pos}.id",
                    )
                seen_ids.add(key)
            by_frame.setdefault((p.view, p.frame), []).append(p)
        object.__setattr__(
            self, "_by_frame", {k: tuple(v) for k, v in by_frame.items()}
        )

    @property
    def diagonal(self) -> float:
        return math.hypot(self.image_width, self.image_height)

    def at(self, view: int, frame: int) -> tuple[Point, ...]:
        """Points of one (view, frame), in input order."""
        return self._by_frame.get((view, frame), ())

    def with_points(self, points: Iterable[Point]) -> Dataset:
        """Same geometry and role, different point set."""
        return Dataset(
            n_views=self.n_views,
            n_frames=self.n_frames,
            image_width=self.image_width,
            image_height=self.image_height,
            points=tuple(points),
            role=self.role,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "n_views": self.n_views,
            "n_frames": self.n_frames,
            "image_width": self.image_width,
            "image_height": self.image_height,
            "points": [
                {
                    "view": p.view,
                    "frame": p.frame,
                    "x": p.x,
                    "y": p.y,
                    "id": p.id,
                    "class": p.class_label,
                }
                for p in self.points
            ],
        }


@dataclass(frozen=True)
class EvalConfig:
    """Knobs shared by the whole evaluation pipeline.

    ``alpha`` is the detection radius in pixels; a prediction counts as a
    true positive only when its distance to the ground truth is strictly
    below it. ``zero_tp_policy`` is the score assigned to the association
    and correspondence accuracies when no true positive exists at all.
    """

    alpha: float = 6.0
    per_class: bool = False
    zero_tp_policy: float = 0.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError("alpha must be positive")


@dataclass(frozen=True)
class IdMap:
    """Per-view relabelling of global ids to contiguous 0-based indices."""

    to_local: dict[int, dict[str, int]]
    to_global: dict[int, dict[int, str]]

    def local(self, view: int, global_id: str) -> int:
        return self.to_local[view][global_id]

    def global_id(self, view: int, local_id: int) -> str:
        return self.to_global[view][local_id]

    def has_global(self, view: int, global_id: str) -> bool:
        return global_id in self.to_local.get(view, {})


@dataclass(frozen=True)
class ValidationIssue:
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of comparing a ground-truth / prediction pair.

    Geometry mismatches make scores incomparable and block evaluation by
    default; missing views or frames are ordinary data (they turn into
    false negatives or positives downstream) and are reported as
    information only.
    """

    geometry: tuple[ValidationIssue, ...]
    coverage: tuple[ValidationIssue, ...]

    @property
    def has_geometry_mismatch(self) -> bool:
        return bool(self.geometry)

    @property
    def issues(self) -> tuple[ValidationIssue, ...]:
        return self.geometry + self.coverage

    def to_dict(self) -> dict[str, Any]:
        return {
            "geometry": [{"kind": i.kind, "detail": i.detail} for i in self.geometry],
            "coverage": [{"kind": i.kind, "detail": i.detail} for i in self.coverage],
        }


def _require(obj: dict, key: str, position: str) -> Any:
    if key not in obj:
        raise DatasetError(f"missing required field {key!r}", position)
    return obj[key]


def _as_int(value: Any, position: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DatasetError(f"expected integer, got {value!r}", position)
    return value


def _as_number(value: Any, position: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DatasetError(f"expected number, got {value!r}", position)
    return float(value)


def _as_opt_str(value: Any, position: str) -> str | None:
    if value is None or isinstance(value, str):
        return value
    raise DatasetError(f"expected string or null, got {value!r}", position)


def dataset_from_dict(data: Any, role: Role) -> Dataset:
    """Build a validated dataset from already-decoded JSON."""
    if not isinstance(data, dict):
        raise DatasetError("top-level value must be an object", "$")
    raw_points = _require(data, "points", "$")
    if not isinstance(raw_points, list):
        raise DatasetError("points must be an array", "points")
    points = []
    for i, entry in enumerate(raw_points):
        pos = f"points[{i}]"
        if not isinstance(entry, dict):
            raise DatasetError("point must be an object", pos)
        points.append(
            Point(
                view=_as_int(_require(entry, "view", pos), f"{pos}.view"),
                frame=_as_int(_require(entry, "frame", pos), f"{pos}.frame"),
                x=_as_number(_require(entry, "x", pos), f"{pos}.x"),
                y=_as_number(_require(entry, "y", pos), f"{pos}.y"),
                id=_as_opt_str(entry.get("id"), f"{pos}.id"),
                class_label=_as_opt_str(entry.get("class"), f"{pos}.class"),
            )
        )
    return Dataset(
        n_views=_as_int(_require(data, "n_views", "$"), "n_views"),
        n_frames=_as_int(_require(data, "n_frames", "$"), "n_frames"),
        image_width=_as_int(_require(data, "image_width", "$"), "image_width"),
        image_height=_as_int(_require(data, "image_height", "$"), "image_height"),
        points=tuple(points),
        role=role,
    )


def parse_dataset(source: str | Path | IO[str], role: Role) -> Dataset:
    """Parse a dataset file (or open stream) and validate every invariant."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError(
            f"malformed JSON: {exc.msg}", f"line {exc.lineno}, column {exc.colno}"
        ) from exc
    return dataset_from_dict(data, role)


def serialize_dataset(dataset: Dataset, target: str | Path | IO[str] | None = None) -> str:
    """Render a dataset to its JSON document; optionally write it out."""
    text = json.dumps(dataset.to_dict(), indent=2)
    if target is not None:
        if isinstance(target, (str, Path)):
            Path(target).write_text(text + "\n", encoding="utf-8")
        else:
            target.write(text + "\n")
    return text


def remap_gt_ids(gt: Dataset) -> tuple[Dataset, IdMap]:
    """Relabel ground-truth ids to per-view contiguous indices.

    Global ids are sorted lexicographically within each view, so the map
    does not depend on point order. The original grouping of one physical
    point across views stays recoverable through the returned map.
    """
    if gt.role is not Role.GROUND_TRUTH:
        raise ValueError("remap_gt_ids expects a ground-truth dataset")
    per_view: dict[int, list[str]] = {}
    for p in gt.points:
        if p.id is None:
            raise DatasetError("ground-truth point without id", "points")
        per_view.setdefault(p.view, [])
        if p.id not in per_view[p.view]:
            per_view[p.view].append(p.id)
    to_local = {
        view: {gid: i for i, gid in enumerate(sorted(ids))}
        for view, ids in per_view.items()
    }
    to_global = {
        view: {i: gid for gid, i in mapping.items()}
        for view, mapping in to_local.items()
    }
    remapped = gt.with_points(
        Point(
            view=p.view,
            frame=p.frame,
            x=p.x,
            y=p.y,
            id=str(to_local[p.view][p.id]),
            class_label=p.class_label,
        )
        for p in gt.points
    )
    return remapped, IdMap(to_local=to_local, to_global=to_global)


def validate_pair(gt: Dataset, pred: Dataset) -> ValidationReport:
    """Compare the shape of a ground-truth / prediction pair.

    Pure report: neither input is modified and nothing raises.
    """
    geometry: list[ValidationIssue] = []
    for attr in ("n_views", "n_frames", "image_width", "image_height"):
        a, b = getattr(gt, attr), getattr(pred, attr)
        if a != b:
            geometry.append(
                ValidationIssue("geometry-mismatch", f"{attr}: gt={a} pred={b}")
            )

    coverage: list[ValidationIssue] = []
    gt_views = {p.view for p in gt.points}
    pred_views = {p.view for p in pred.points}
    for v in sorted(gt_views - pred_views):
        coverage.append(ValidationIssue("missing-view", f"view {v} has no predictions"))
    for v in sorted(pred_views - gt_views):
        coverage.append(ValidationIssue("extra-view", f"view {v} has no ground truth"))
    gt_frames = {p.frame for p in gt.points}
    pred_frames = {p.frame for p in pred.points}
    for f in sorted(gt_frames - pred_frames):
        coverage.append(ValidationIssue("missing-frame", f"frame {f} has no predictions"))
    for f in sorted(pred_frames - gt_frames):
        coverage.append(ValidationIssue("extra-frame", f"frame {f} has no ground truth"))
    return ValidationReport(geometry=tuple(geometry), coverage=tuple(coverage))
