"""Scores for multi-view multi-point tracking.

The headline metric is the geometric mean of three Jaccard-style
accuracies: detection (one global pool of matches), temporal association
(per true positive, within its own view) and cross-view correspondence
(per true positive, against every other view of the same frame).
Baseline scores (MOTA, IDF1, F1, HOTA) are computed per view and
averaged, which keeps them comparable with single-view tooling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import fsum
from typing import Any, Iterable, Sequence

from .core import Dataset, EvalConfig, IdMap, Role, remap_gt_ids
from .matching import (
    Assignment,
    FrameMatch,
    assign_temporal_ids,
    match_frame,
    minimize_cost,
)

# One matched true positive: (view, frame, gt id, pred id, distance).
TpInstance = tuple[int, int, str, str, float]


@dataclass(frozen=True)
class DetTally:
    """Detection counts pooled over all frames and views."""

    tp: int
    fp: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn


@dataclass(frozen=True)
class DetectionScores:
    det_acc: float
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class AssTally:
    """Per-view identity co-occurrence counts behind temporal association.

    For a true positive c = (view, gt, pred), the frames where the same
    pair recurs are its TPA; the other frames where the ground-truth id
    appears are FNA; the other frames where the prediction id appears are
    FPA.
    """

    pair_frames: dict[tuple[int, str, str], int]
    gt_frames: dict[tuple[int, str], int]
    pred_frames: dict[tuple[int, str], int]

    def tpa(self, view: int, gt_id: str, pred_id: str) -> int:
        return self.pair_frames[(view, gt_id, pred_id)]

    def fna(self, view: int, gt_id: str, pred_id: str) -> int:
        return self.gt_frames[(view, gt_id)] - self.tpa(view, gt_id, pred_id)

    def fpa(self, view: int, gt_id: str, pred_id: str) -> int:
        return self.pred_frames[(view, pred_id)] - self.tpa(view, gt_id, pred_id)

    def score(self, view: int, gt_id: str, pred_id: str) -> float:
        tpa = self.tpa(view, gt_id, pred_id)
        return tpa / (
            tpa + self.fna(view, gt_id, pred_id) + self.fpa(view, gt_id, pred_id)
        )


@dataclass(frozen=True)
class CorresTally:
    """Cross-view correspondence classification for every true positive.

    ``per_tp`` holds one (TPC, FPC, FNC) triple per matched point, in the
    order of the true-positive list it was built from. Exactly one of the
    three counters increments per corresponding view, so the triple sums
    to the number of other views.
    """

    per_tp: tuple[tuple[int, int, int], ...]

    @property
    def tpc(self) -> int:
        return sum(t for t, _, _ in self.per_tp)

    @property
    def fpc(self) -> int:
        return sum(f for _, f, _ in self.per_tp)

    @property
    def fnc(self) -> int:
        return sum(f for _, _, f in self.per_tp)

    def scores(self) -> list[float]:
        out = []
        for tpc, fpc, fnc in self.per_tp:
            denom = tpc + fpc + fnc
            out.append(tpc / denom if denom else 1.0)
        return out


@dataclass(frozen=True)
class OcclusionReport:
    """Occlusion indices of a ground-truth dataset (model independent).

    ``simple`` is the share of point observations lacking full cross-view
    presence, counted per (identity, frame). The weighted per-view form
    averages, over identities, one minus the mean per-frame product of
    view presence and cross-view presence fraction; fixing either factor
    to one gives the temporal-only and view-only variants.
    """

    simple: float | None
    weighted_per_view: tuple[float, ...] | None
    weighted_mean: float | None
    temporal_per_view: tuple[float, ...] | None
    temporal_mean: float | None
    multiview: float | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "simple": self.simple,
            "weighted_per_view": list(self.weighted_per_view)
            if self.weighted_per_view is not None
            else None,
            "weighted_mean": self.weighted_mean,
            "temporal_per_view": list(self.temporal_per_view)
            if self.temporal_per_view is not None
            else None,
            "temporal_mean": self.temporal_mean,
            "multiview": self.multiview,
        }


@dataclass(frozen=True)
class PerViewScores:
    view: int
    tp: int
    fp: int
    fn: int
    idsw: int
    det_acc: float
    ass_acc: float
    f1: float
    hota: float
    mota: float | None
    idf1: float | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "view": self.view,
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "idsw": self.idsw,
            "det_acc": self.det_acc,
            "ass_acc": self.ass_acc,
            "f1": self.f1,
            "hota": self.hota,
            "mota": self.mota,
            "idf1": self.idf1,
        }


@dataclass(frozen=True)
class MetricReport:
    """Every score plus the raw tallies needed to explain them."""

    alpha: float
    n_views: int
    n_frames: int
    det_acc: float
    precision: float
    recall: float
    f1: float | None
    mota: float | None
    idf1: float | None
    hota: float | None
    ass_acc: float
    corres_acc: float
    mv_hota: float
    loc_acc: float
    occlusion: OcclusionReport
    tallies: dict[str, int]
    per_view: tuple[PerViewScores, ...]
    per_class: dict[str, "MetricReport"] | None = None

    _COLUMNS = ("mota", "idf1", "f1", "det_acc", "ass_acc", "hota", "corres_acc", "mv_hota")

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "alpha": self.alpha,
            "n_views": self.n_views,
            "n_frames": self.n_frames,
            "scores": {
                "mota": self.mota,
                "idf1": self.idf1,
                "f1": self.f1,
                "det_acc": self.det_acc,
                "ass_acc": self.ass_acc,
                "hota": self.hota,
                "corres_acc": self.corres_acc,
                "mv_hota": self.mv_hota,
                "precision": self.precision,
                "recall": self.recall,
                "loc_acc": self.loc_acc,
            },
            "occlusion": self.occlusion.to_dict(),
            "tallies": dict(self.tallies),
            "per_view": [v.to_dict() for v in self.per_view],
        }
        if self.per_class is not None:
            out["per_class"] = {
                label: report.to_dict() for label, report in sorted(self.per_class.items())
            }
        return out

    def to_table(self) -> str:
        header = ("MOTA", "IDF1", "F1", "DetAcc", "AssAcc", "HOTA", "CorresAcc", "mvHOTA")
        values = [_fmt(getattr(self, col)) for col in self._COLUMNS]
        widths = [max(len(h), len(v)) for h, v in zip(header, values)]
        lines = [
            "  ".join(h.ljust(w) for h, w in zip(header, widths)),
            "  ".join(v.ljust(w) for v, w in zip(values, widths)),
            "",
            f"precision={_fmt(self.precision)}  recall={_fmt(self.recall)}  "
            f"loc_acc={_fmt(self.loc_acc)}px",
            f"occlusion_index={_fmt(self.occlusion.simple)}  "
            f"weighted={_fmt(self.occlusion.weighted_mean)}",
        ]
        if self.per_class:
            for label in sorted(self.per_class):
                sub = self.per_class[label]
                row = "  ".join(
                    _fmt(getattr(sub, col)).ljust(w)
                    for col, w in zip(self._COLUMNS, widths)
                )
                lines.append(f"[{label}] {row}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        cols = self._COLUMNS + ("precision", "recall", "loc_acc", "occlusion_index")
        values = [getattr(self, c) for c in self._COLUMNS] + [
            self.precision,
            self.recall,
            self.loc_acc,
            self.occlusion.simple,
        ]
        return (
            ",".join(cols)
            + "\n"
            + ",".join("" if v is None else repr(v) for v in values)
            + "\n"
        )


def _fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.4f}"


@dataclass(frozen=True)
class EvaluationResult:
    """Report plus the intermediates the pipeline produced on the way."""

    report: MetricReport
    matches: tuple[FrameMatch, ...]
    id_map: IdMap
    pred_with_ids: Dataset


# ---------------------------------------------------------------------------
# tallies and scores


def tally_detections(matches: Iterable[FrameMatch]) -> DetTally:
    tp = fp = fn = 0
    for m in matches:
        tp += len(m.tp_pairs)
        fp += len(m.fp_ids)
        fn += len(m.fn_ids)
    return DetTally(tp=tp, fp=fp, fn=fn)


def detection_scores(tally: DetTally) -> DetectionScores:
    """Jaccard detection accuracy plus the frame-level companions."""
    tp, fp, fn = tally.tp, tally.fp, tally.fn
    return DetectionScores(
        det_acc=tp / tally.total if tally.total else 0.0,
        precision=tp / (tp + fp) if tp + fp else 0.0,
        recall=tp / (tp + fn) if tp + fn else 0.0,
        f1=2 * tp / (2 * tp + fp + fn) if tally.total else 0.0,
    )


def build_association_tally(
    gt: Dataset, pred: Dataset, matches: Iterable[FrameMatch]
) -> AssTally:
    """Count identity occurrences per view for the association scores.

    ``gt`` and ``pred`` must be the datasets the matches were produced
    from (ground truth already relabelled, predictions already carrying
    ids).
    """
    pair_frames: dict[tuple[int, str, str], int] = {}
    gt_frames: dict[tuple[int, str], int] = {}
    pred_frames: dict[tuple[int, str], int] = {}
    for p in gt.points:
        key = (p.view, p.id)
        gt_frames[key] = gt_frames.get(key, 0) + 1
    for p in pred.points:
        key = (p.view, p.id)
        pred_frames[key] = pred_frames.get(key, 0) + 1
    for m in matches:
        for g, p, _ in m.tp_pairs:
            key = (m.view, g, p)
            pair_frames[key] = pair_frames.get(key, 0) + 1
    return AssTally(pair_frames=pair_frames, gt_frames=gt_frames, pred_frames=pred_frames)


def association_accuracy(
    tp_instances: Sequence[TpInstance], tally: AssTally, zero_tp_policy: float = 0.0
) -> float:
    """Mean per-true-positive association Jaccard over the pooled TP set."""
    if not tp_instances:
        return zero_tp_policy
    return fsum(tally.score(v, g, p) for v, _, g, p, _ in tp_instances) / len(
        tp_instances
    )


def classify_correspondence(
    tp_instances: Sequence[TpInstance],
    gt: Dataset,
    matches: Iterable[FrameMatch],
    pred: Dataset,
    id_map: IdMap | None = None,
    n_views: int | None = None,
) -> CorresTally:
    """Classify each true positive against every other view of its frame.

    Where the same physical point is annotated in the other view, a
    matched detection there is a true correspondence and a missing one a
    false negative correspondence. Where it is not annotated, the
    prediction identity showing up anyway is a false positive
    correspondence; its absence is (vacuously) correct. Single-view data
    therefore yields empty triples, scored as fully corresponded.
    """
    n_views = n_views if n_views is not None else gt.n_views

    def to_global(view: int, local: str) -> str:
        return id_map.global_id(view, int(local)) if id_map is not None else local

    gt_present = {(p.view, p.frame, p.id) for p in gt.points}
    pred_present = {(p.view, p.frame, p.id) for p in pred.points}
    tp_gt = set()
    for m in matches:
        for g, _, _ in m.tp_pairs:
            tp_gt.add((m.view, m.frame, to_global(m.view, g)))

    per_tp = []
    for v, f, g, p, _ in tp_instances:
        gid = to_global(v, g)
        tpc = fpc = fnc = 0
        for w in range(n_views):
            if w == v:
                continue
            if (w, f, gid) in gt_present:
                if (w, f, gid) in tp_gt:
                    tpc += 1
                else:
                    fnc += 1
            elif (w, f, p) in pred_present:
                fpc += 1
            else:
                tpc += 1
        per_tp.append((tpc, fpc, fnc))
    return CorresTally(per_tp=tuple(per_tp))


def correspondence_accuracy(tally: CorresTally, zero_tp_policy: float = 0.0) -> float:
    """Mean per-true-positive correspondence Jaccard."""
    scores = tally.scores()
    if not scores:
        return zero_tp_policy
    return fsum(scores) / len(scores)


def mv_hota(det_acc: float, ass_acc: float, corres_acc: float) -> float:
    """Cube root of the product: equal weight to all three accuracies."""
    return (det_acc * ass_acc * corres_acc) ** (1.0 / 3.0)


def hota(det_acc: float, ass_acc: float) -> float:
    """Square root of detection times association accuracy."""
    return math.sqrt(det_acc * ass_acc)


def mota(gt_total: int, fn: int, fp: int, idsw: int) -> float | None:
    """CLEAR-style tracking accuracy; undefined without ground truth."""
    if gt_total == 0:
        return None
    return 1.0 - (fn + fp + idsw) / gt_total


def count_id_switches(matches: Iterable[FrameMatch]) -> dict[int, int]:
    """Identity switches per view.

    A switch is a ground-truth id whose matched prediction id differs
    from its most recent previous match in the same view.
    """
    last: dict[tuple[int, str], str] = {}
    switches: dict[int, int] = {}
    for m in sorted(matches, key=lambda m: (m.view, m.frame)):
        switches.setdefault(m.view, 0)
        for g, p, _ in m.tp_pairs:
            key = (m.view, g)
            if key in last and last[key] != p:
                switches[m.view] += 1
            last[key] = p
    return switches


def idf1(gt: Dataset, pred: Dataset, view: int, alpha: float) -> float | None:
    """Trajectory-level identity F1 for one view.

    Ground-truth and prediction identities are paired one-to-one to
    maximise the number of frames where both lie within the detection
    radius; that count is IDTP and the remaining observations are identity
    errors.
    """
    pos_gt: dict[tuple[str, int], tuple[float, float]] = {}
    pos_pred: dict[tuple[str, int], tuple[float, float]] = {}
    for p in gt.points:
        if p.view == view:
            pos_gt[(p.id, p.frame)] = (p.x, p.y)
    for p in pred.points:
        if p.view == view:
            pos_pred[(p.id, p.frame)] = (p.x, p.y)
    if not pos_gt and not pos_pred:
        return None
    gt_ids = sorted({g for g, _ in pos_gt})
    pred_ids = sorted({p for p, _ in pos_pred})
    frames_gt: dict[str, list[int]] = {}
    frames_pred: dict[str, list[int]] = {}
    for g, f in pos_gt:
        frames_gt.setdefault(g, []).append(f)
    for p, f in pos_pred:
        frames_pred.setdefault(p, []).append(f)

    overlap = [
        [
            sum(
                1
                for f in set(frames_gt[g]) & set(frames_pred[p])
                if math.hypot(
                    pos_gt[(g, f)][0] - pos_pred[(p, f)][0],
                    pos_gt[(g, f)][1] - pos_pred[(p, f)][1],
                )
                < alpha
            )
            for p in pred_ids
        ]
        for g in gt_ids
    ]
    idtp = 0
    if gt_ids and pred_ids:
        ceiling = float(max(max(row) for row in overlap))
        costs = tuple(tuple(ceiling - o for o in row) for row in overlap)
        assignment: Assignment = minimize_cost(costs)
        idtp = sum(overlap[r][c] for r, c in assignment.pairs)
    return 2 * idtp / (len(pos_gt) + len(pos_pred))


def occlusion_index(gt: Dataset) -> OcclusionReport:
    """Occlusion indices of a ground-truth dataset."""
    if gt.role is not Role.GROUND_TRUTH:
        raise ValueError("occlusion_index expects a ground-truth dataset")
    if not gt.points:
        return OcclusionReport(None, None, None, None, None, None)

    views_at: dict[tuple[str, int], set[int]] = {}
    for p in gt.points:
        views_at.setdefault((p.id, p.frame), set()).add(p.view)
    full = sum(1 for views in views_at.values() if len(views) == gt.n_views)
    simple = 1.0 - full / len(views_at)

    ids = sorted({p.id for p in gt.points})
    n, m = gt.n_frames, gt.n_views
    presence = {(p.id, p.frame, p.view) for p in gt.points}

    weighted = []
    temporal = []
    for v in range(m):
        w_values = []
        t_values = []
        for gid in ids:
            acc = 0.0
            seen = 0
            for f in range(n):
                c_f = len(views_at.get((gid, f), ())) / m
                if (gid, f, v) in presence:
                    acc += c_f
                    seen += 1
            w_values.append(1.0 - acc / n)
            t_values.append(1.0 - seen / n)
        weighted.append(fsum(w_values) / len(w_values))
        temporal.append(fsum(t_values) / len(t_values))

    mv_values = [
        1.0 - fsum(len(views_at.get((gid, f), ())) / m for f in range(n)) / n
        for gid in ids
    ]
    return OcclusionReport(
        simple=simple,
        weighted_per_view=tuple(weighted),
        weighted_mean=fsum(weighted) / m,
        temporal_per_view=tuple(temporal),
        temporal_mean=fsum(temporal) / m,
        multiview=fsum(mv_values) / len(mv_values),
    )


# ---------------------------------------------------------------------------
# pipeline


def evaluate(gt: Dataset, pred: Dataset, config: EvalConfig | None = None) -> MetricReport:
    """Run the full pipeline and return the metric report."""
    return evaluate_detailed(gt, pred, config).report


def evaluate_detailed(
    gt: Dataset, pred: Dataset, config: EvalConfig | None = None
) -> EvaluationResult:
    """Like ``evaluate`` but keeps the intermediate artifacts.

    Pipeline: relabel ground-truth ids per view, assign prediction ids by
    temporal matching where missing, match every (view, frame), then
    tally. Deterministic for a given input pair and config.
    """
    config = config or EvalConfig()
    if gt.role is not Role.GROUND_TRUTH or pred.role is not Role.PREDICTION:
        raise ValueError("evaluate expects (ground truth, prediction) in that order")
    if (gt.image_width, gt.image_height) != (pred.image_width, pred.image_height):
        raise ValueError("image dimensions differ; scores would not be comparable")

    if config.per_class:
        return _evaluate_per_class(gt, pred, config)

    dims = (gt.image_width, gt.image_height)
    n_views = max(gt.n_views, pred.n_views)
    n_frames = max(gt.n_frames, pred.n_frames)

    remapped, id_map = remap_gt_ids(gt)
    pred_ids = assign_temporal_ids(pred, config)

    matches: list[FrameMatch] = []
    for v in range(n_views):
        for f in range(n_frames):
            matches.append(
                match_frame(remapped.at(v, f), pred_ids.at(v, f), config, dims, v, f)
            )

    tp_instances: list[TpInstance] = [
        (m.view, m.frame, g, p, d) for m in matches for g, p, d in m.tp_pairs
    ]

    det = tally_detections(matches)
    det_scores = detection_scores(det)
    ass_tally = build_association_tally(remapped, pred_ids, matches)
    ass = association_accuracy(tp_instances, ass_tally, config.zero_tp_policy)
    corres_tally = classify_correspondence(
        tp_instances, gt, matches, pred_ids, id_map=id_map, n_views=n_views
    )
    corres = correspondence_accuracy(corres_tally, config.zero_tp_policy)
    loc_acc = (
        fsum(d for _, _, _, _, d in tp_instances) / len(tp_instances)
        if tp_instances
        else 0.0
    )
    switches = count_id_switches(matches)

    per_view: list[PerViewScores] = []
    for v in range(n_views):
        v_matches = [m for m in matches if m.view == v]
        v_det = tally_detections(v_matches)
        v_gt_total = sum(1 for p in remapped.points if p.view == v)
        v_pred_total = sum(1 for p in pred_ids.points if p.view == v)
        if v_gt_total + v_pred_total == 0:
            continue
        v_tp = [t for t in tp_instances if t[0] == v]
        v_ass = association_accuracy(v_tp, ass_tally, config.zero_tp_policy)
        v_scores = detection_scores(v_det)
        per_view.append(
            PerViewScores(
                view=v,
                tp=v_det.tp,
                fp=v_det.fp,
                fn=v_det.fn,
                idsw=switches.get(v, 0),
                det_acc=v_scores.det_acc,
                ass_acc=v_ass,
                f1=v_scores.f1,
                hota=hota(v_scores.det_acc, v_ass),
                mota=mota(v_gt_total, v_det.fn, v_det.fp, switches.get(v, 0)),
                idf1=idf1(remapped, pred_ids, v, config.alpha),
            )
        )

    def view_mean(values: list[float | None]) -> float | None:
        defined = [x for x in values if x is not None]
        return fsum(defined) / len(defined) if defined else None

    report = MetricReport(
        alpha=config.alpha,
        n_views=n_views,
        n_frames=n_frames,
        det_acc=det_scores.det_acc,
        precision=det_scores.precision,
        recall=det_scores.recall,
        f1=view_mean([v.f1 for v in per_view]),
        mota=view_mean([v.mota for v in per_view]),
        idf1=view_mean([v.idf1 for v in per_view]),
        hota=view_mean([v.hota for v in per_view]),
        ass_acc=ass,
        corres_acc=corres,
        mv_hota=mv_hota(det_scores.det_acc, ass, corres),
        loc_acc=loc_acc,
        occlusion=occlusion_index(gt),
        tallies={
            "tp": det.tp,
            "fp": det.fp,
            "fn": det.fn,
            "idsw": sum(switches.values()),
            "gt_observations": len(gt.points),
            "pred_observations": len(pred_ids.points),
            "tpa": sum(
                ass_tally.tpa(v, g, p) for v, _, g, p, _ in tp_instances
            ),
            "fna": sum(
                ass_tally.fna(v, g, p) for v, _, g, p, _ in tp_instances
            ),
            "fpa": sum(
                ass_tally.fpa(v, g, p) for v, _, g, p, _ in tp_instances
            ),
            "tpc": corres_tally.tpc,
            "fpc": corres_tally.fpc,
            "fnc": corres_tally.fnc,
        },
        per_view=tuple(per_view),
    )
    return EvaluationResult(
        report=report,
        matches=tuple(matches),
        id_map=id_map,
        pred_with_ids=pred_ids,
    )


def _evaluate_per_class(gt: Dataset, pred: Dataset, config: EvalConfig) -> EvaluationResult:
    """Run the whole pipeline once per class label and macro-average."""
    sub_config = EvalConfig(
        alpha=config.alpha, per_class=False, zero_tp_policy=config.zero_tp_policy
    )
    labels = sorted(
        {p.class_label for p in gt.points} | {p.class_label for p in pred.points},
        key=lambda x: (x is None, x),
    )
    if not labels:
        labels = [None]
    sub_reports: dict[str, MetricReport] = {}
    all_matches: list[FrameMatch] = []
    for label in labels:
        key = label if label is not None else "(none)"
        sub_gt = gt.with_points(p for p in gt.points if p.class_label == label)
        sub_pred = pred.with_points(p for p in pred.points if p.class_label == label)
        result = evaluate_detailed(sub_gt, sub_pred, sub_config)
        sub_reports[key] = result.report
        all_matches.extend(result.matches)

    reports = [sub_reports[k] for k in sorted(sub_reports)]

    def macro(attr: str) -> float | None:
        defined = [getattr(r, attr) for r in reports if getattr(r, attr) is not None]
        return fsum(defined) / len(defined) if defined else None

    def macro_occ(attr: str) -> float | None:
        defined = [
            getattr(r.occlusion, attr)
            for r in reports
            if getattr(r.occlusion, attr) is not None
        ]
        return fsum(defined) / len(defined) if defined else None

    occ = OcclusionReport(
        simple=macro_occ("simple"),
        weighted_per_view=None,
        weighted_mean=macro_occ("weighted_mean"),
        temporal_per_view=None,
        temporal_mean=macro_occ("temporal_mean"),
        multiview=macro_occ("multiview"),
    )
    tallies: dict[str, int] = {}
    for r in reports:
        for k, v in r.tallies.items():
            tallies[k] = tallies.get(k, 0) + v

    report = MetricReport(
        alpha=config.alpha,
        n_views=max(r.n_views for r in reports),
        n_frames=max(r.n_frames for r in reports),
        det_acc=macro("det_acc"),
        precision=macro("precision"),
        recall=macro("recall"),
        f1=macro("f1"),
        mota=macro("mota"),
        idf1=macro("idf1"),
        hota=macro("hota"),
        ass_acc=macro("ass_acc"),
        corres_acc=macro("corres_acc"),
        mv_hota=macro("mv_hota"),
        loc_acc=macro("loc_acc"),
        occlusion=occ,
        tallies=tallies,
        per_view=(),
        per_class=sub_reports,
    )
    _, id_map = remap_gt_ids(gt)
    return EvaluationResult(
        report=report,
        matches=tuple(all_matches),
        id_map=id_map,
        pred_with_ids=pred,
    )
