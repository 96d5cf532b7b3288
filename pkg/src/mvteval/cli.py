"""Command-line interface: evaluate, synth and validate subcommands.

Exit codes: 0 success, 1 validation failure (geometry mismatch without
--force, invalid generator settings), 2 unreadable or malformed input.
Machine-readable output is a pure function of inputs and flags; --meta
opts into provenance fields.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .core import (
    DatasetError,
    EvalConfig,
    Point,
    Role,
    parse_dataset,
    serialize_dataset,
    validate_pair,
)
from .metrics import evaluate_detailed, occlusion_index
from .synth import SynthConfig, generate

_SWEEP_KEYS = ("mota", "idf1", "f1", "det_acc", "ass_acc", "hota", "corres_acc", "mv_hota", "loc_acc")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvteval",
        description="Evaluate multi-point detection and tracking across views.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("evaluate", help="score a prediction file against ground truth")
    ev.add_argument("--gt", required=True, help="ground-truth dataset (JSON)")
    ev.add_argument("--pred", required=True, help="prediction dataset (JSON)")
    ev.add_argument("--alpha", type=float, default=6.0, help="detection radius in pixels")
    ev.add_argument(
        "--assign-ids",
        action="store_true",
        help="discard prediction ids and re-assign them by temporal matching",
    )
    ev.add_argument("--per-class", action="store_true", help="evaluate per class and macro-average")
    ev.add_argument("--force", action="store_true", help="evaluate despite geometry mismatches")
    ev.add_argument("--output", help="write the report here instead of stdout")
    ev.add_argument("--format", choices=("json", "table", "csv"), default="table")
    ev.add_argument("--dump-matches", metavar="PATH", help="write per-frame matches as JSON")
    ev.add_argument("--alpha-sweep", metavar="LO:HI:STEP", help="also score a range of radii")
    ev.add_argument("--meta", action="store_true", help="include provenance in JSON output")

    sy = sub.add_parser("synth", help="generate a synthetic ground-truth/prediction pair")
    sy.add_argument("--seed", type=int, default=0)
    sy.add_argument("--views", type=int, default=2)
    sy.add_argument("--frames", type=int, default=30)
    sy.add_argument("--points", type=int, default=8)
    sy.add_argument("--width", type=int, default=640)
    sy.add_argument("--height", type=int, default=480)
    sy.add_argument("--motion-amplitude", type=float, default=40.0)
    sy.add_argument("--disparity", type=float, default=12.0)
    sy.add_argument("--view-drop-prob", type=float, default=0.0)
    sy.add_argument("--temporal-drop-prob", type=float, default=0.0)
    sy.add_argument("--noise-sigma", type=float, default=0.0)
    sy.add_argument("--fp-rate", type=float, default=0.0)
    sy.add_argument("--miss-rate", type=float, default=0.0)
    sy.add_argument("--id-switch-prob", type=float, default=0.0)
    sy.add_argument("--ghost-rate", type=float, default=0.0)
    sy.add_argument("--out-gt", default="gt.json")
    sy.add_argument("--out-pred", default="pred.json")

    va = sub.add_parser("validate", help="check a ground-truth/prediction pair for mismatches")
    va.add_argument("--gt", required=True)
    va.add_argument("--pred", required=True)
    return parser


def _load(path: str, role: Role):
    if not Path(path).exists():
        raise FileNotFoundError(f"no such file: {path}")
    return parse_dataset(path, role)


def _parse_sweep(spec: str) -> list[float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError("--alpha-sweep expects LO:HI:STEP")
    lo, hi, step = (float(p) for p in parts)
    if step <= 0 or lo <= 0 or hi < lo:
        raise ValueError("--alpha-sweep needs 0 < LO <= HI and STEP > 0")
    values = []
    current = lo
    while current <= hi + 1e-9:
        values.append(round(current, 9))
        current += step
    return values


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_evaluate(args: argparse.Namespace) -> int:
    try:
        gt = _load(args.gt, Role.GROUND_TRUTH)
        pred = _load(args.pred, Role.PREDICTION)
    except (OSError, DatasetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    validation = validate_pair(gt, pred)
    if validation.has_geometry_mismatch and not args.force:
        for issue in validation.geometry:
            print(f"geometry mismatch: {issue.detail}", file=sys.stderr)
        print("use --force to evaluate anyway", file=sys.stderr)
        return 1

    sweep_alphas: list[float] = []
    if args.alpha_sweep:
        try:
            sweep_alphas = _parse_sweep(args.alpha_sweep)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    if args.dump_matches and args.per_class:
        print("error: --dump-matches is not supported with --per-class", file=sys.stderr)
        return 1

    if args.assign_ids:
        pred = pred.with_points(
            Point(view=p.view, frame=p.frame, x=p.x, y=p.y, id=None, class_label=p.class_label)
            for p in pred.points
        )

    try:
        config = EvalConfig(alpha=args.alpha, per_class=args.per_class)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    result = evaluate_detailed(gt, pred, config)
    report = result.report

    if args.dump_matches:
        dump = []
        for m in result.matches:
            dump.append(
                {
                    "view": m.view,
                    "frame": m.frame,
                    "tp": [
                        {
                            "gt": result.id_map.global_id(m.view, int(g)),
                            "pred": p,
                            "distance": d,
                        }
                        for g, p, d in m.tp_pairs
                    ],
                    "fp": list(m.fp_ids),
                    "fn": [result.id_map.global_id(m.view, int(g)) for g in m.fn_ids],
                }
            )
        Path(args.dump_matches).write_text(
            json.dumps(dump, indent=2) + "\n", encoding="utf-8"
        )

    sweep_rows: list[dict[str, Any]] = []
    for alpha in sweep_alphas:
        sweep_config = EvalConfig(alpha=alpha, per_class=args.per_class)
        sweep_report = evaluate_detailed(gt, pred, sweep_config).report
        row: dict[str, Any] = {"alpha": alpha}
        row.update({key: getattr(sweep_report, key) for key in _SWEEP_KEYS})
        sweep_rows.append(row)

    if args.format == "json":
        payload = report.to_dict()
        payload["validation"] = validation.to_dict()
        if sweep_rows:
            payload["alpha_sweep"] = sweep_rows
        if args.meta:
            payload["meta"] = {
                "tool": "mvteval",
                "version": __version__,
                "gt": args.gt,
                "pred": args.pred,
                "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
            }
        _write(json.dumps(payload, indent=2) + "\n", args.output)
    elif args.format == "csv":
        _write(report.to_csv(), args.output)
    else:
        text = report.to_table()
        if sweep_rows:
            lines = ["", "alpha sweep:"]
            for row in sweep_rows:
                lines.append(
                    "  alpha={alpha:g}  det_acc={det_acc:.4f}  ass_acc={ass_acc:.4f}  "
                    "corres_acc={corres_acc:.4f}  mv_hota={mv_hota:.4f}".format(**row)
                )
            text += "\n".join(lines) + "\n"
        _write(text, args.output)
    return 0


def _cmd_synth(args: argparse.Namespace) -> int:
    try:
        config = SynthConfig(
            n_views=args.views,
            n_frames=args.frames,
            n_points=args.points,
            image_width=args.width,
            image_height=args.height,
            motion_amplitude=args.motion_amplitude,
            disparity=args.disparity,
            view_drop_prob=args.view_drop_prob,
            temporal_drop_prob=args.temporal_drop_prob,
            pred_noise_sigma=args.noise_sigma,
            pred_fp_rate=args.fp_rate,
            pred_miss_rate=args.miss_rate,
            id_switch_prob=args.id_switch_prob,
            ghost_rate=args.ghost_rate,
            seed=args.seed,
        )
        gt, pred = generate(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    serialize_dataset(gt, args.out_gt)
    serialize_dataset(pred, args.out_pred)
    occlusion = occlusion_index(gt)
    print(f"wrote {args.out_gt} ({len(gt.points)} points)")
    print(f"wrote {args.out_pred} ({len(pred.points)} points)")
    simple = 0.0 if occlusion.simple is None else occlusion.simple
    weighted = 0.0 if occlusion.weighted_mean is None else occlusion.weighted_mean
    print(f"occlusion index: simple={simple:.4f} weighted_mean={weighted:.4f}")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    try:
        gt = _load(args.gt, Role.GROUND_TRUTH)
        pred = _load(args.pred, Role.PREDICTION)
    except (OSError, DatasetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = validate_pair(gt, pred)
    if not report.issues:
        print("ok: datasets are aligned")
        return 0
    for issue in report.issues:
        print(f"{issue.kind}: {issue.detail}")
    return 1 if report.has_geometry_mismatch else 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "evaluate":
        return _cmd_evaluate(args)
    if args.command == "synth":
        return _cmd_synth(args)
    return _cmd_validate(args)


if __name__ == "__main__":
    sys.exit(main())
