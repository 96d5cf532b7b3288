"""Thresholded minimum-cost bipartite matching and its two uses.

Distances below the detection radius enter the cost matrix as-is; every
other pair is priced at the image diagonal, an upper bound on any true
distance, so the solver can always return a complete assignment. Pairs
assigned at the bound are not matches; they fall apart into one miss and
one spurious detection afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import fsum
from typing import Sequence

from .core import Dataset, EvalConfig, Point, Role


@dataclass(frozen=True)
class CostMatrix:
    """Rectangular cost matrix with its threshold bookkeeping."""

    entries: tuple[tuple[float, ...], ...]
    alpha: float
    diagonal_bound: float

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


@dataclass(frozen=True)
class Assignment:
    """A maximal pairing of rows to columns of minimum total cost.

    Among equal-cost optima the lexicographically smallest (row, col)
    pair sequence is returned, so repeated runs and platform changes
    cannot reshuffle tied matches.
    """

    pairs: tuple[tuple[int, int], ...]
    total_cost: float


@dataclass(frozen=True)
class FrameMatch:
    """Matching outcome for one (view, frame)."""

    view: int
    frame: int
    tp_pairs: tuple[tuple[str, str, float], ...]  # (gt id, pred id, distance)
    fp_ids: tuple[str, ...]
    fn_ids: tuple[str, ...]

    @property
    def tp(self) -> int:
        return len(self.tp_pairs)


def build_cost_matrix(
    points_a: Sequence[Point],
    points_b: Sequence[Point],
    alpha: float,
    image_dims: tuple[int, int],
) -> CostMatrix:
    """Pairwise Euclidean distances, thresholded then bounded.

    Empty inputs give a degenerate 0xN or Nx0 matrix, which solves to an
    empty assignment.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    bound = math.hypot(image_dims[0], image_dims[1])
    rows = []
    for a in points_a:
        row = []
        for b in points_b:
            d = math.hypot(a.x - b.x, a.y - b.y)
            row.append(d if d < alpha else bound)
        rows.append(tuple(row))
    return CostMatrix(entries=tuple(rows), alpha=alpha, diagonal_bound=bound)


def _hungarian(
    cost: Sequence[Sequence[float]], rows: Sequence[int], cols: Sequence[int]
) -> list[tuple[int, int]]:
    """Minimum-cost complete assignment on a submatrix.

    Shortest augmenting path formulation with row/column potentials.
    ``rows`` and ``cols`` select the active submatrix; returned pairs use
    the original indices and are sorted by row.
    """
    n, m = len(rows), len(cols)
    if n == 0 or m == 0:
        return []
    transposed = n > m
    if transposed:
        a = [[cost[r][c] for r in rows] for c in cols]
        n, m = m, n
    else:
        a = [[cost[r][c] for c in cols] for r in rows]

    inf = math.inf
    u = [0.0] * (n + 1)
    v = [0.0] * (m + 1)
    match = [0] * (m + 1)  # 1-based row matched to each column, 0 = free
    way = [0] * (m + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [inf] * (m + 1)
        used = [False] * (m + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = inf
            j1 = 0
            for j in range(1, m + 1):
                if used[j]:
                    continue
                cur = a[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(m + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1

    pairs = []
    for j in range(1, m + 1):
        if match[j]:
            if transposed:
                pairs.append((rows[j - 1], cols[match[j] - 1]))
            else:
                pairs.append((rows[match[j] - 1], cols[j - 1]))
    pairs.sort()
    return pairs


def solve_assignment(matrix: CostMatrix) -> Assignment:
    """Solve a cost matrix to the canonical minimum-cost assignment."""
    return minimize_cost(matrix.entries)


def minimize_cost(entries: Sequence[Sequence[float]]) -> Assignment:
    """Canonical minimum-cost maximal assignment of any finite matrix.

    A first solve pins the optimal total and one optimal completion. Rows
    are then fixed in order: columns smaller than the completion's choice
    are probed with a reduced solve, and the first one that still reaches
    the total wins. Totals are compared as exact correctly-rounded sums,
    so equal multisets of entries always compare equal.
    """
    n = len(entries)
    m = len(entries[0]) if n else 0
    if n == 0 or m == 0:
        return Assignment(pairs=(), total_cost=0.0)

    base = _hungarian(entries, range(n), range(m))
    target = fsum(entries[r][c] for r, c in base)
    k = min(n, m)

    # invariant: fixed + current reaches the target; current covers rows > r
    current = dict(base)
    fixed: list[tuple[int, int]] = []
    used: set[int] = set()
    for r in range(n):
        if len(fixed) == k:
            break
        free_cols = [c for c in range(m) if c not in used]
        fallback = current.get(r)
        chosen = fallback
        for c in free_cols:
            if fallback is not None and c >= fallback:
                break
            rest = _hungarian(entries, range(r + 1, n), [x for x in free_cols if x != c])
            total = fsum(
                [entries[rr][cc] for rr, cc in fixed]
                + [entries[r][c]]
                + [entries[rr][cc] for rr, cc in rest]
            )
            if total == target:
                chosen = c
                current = dict(rest)
                break
        if chosen is None:
            continue  # no optimal completion assigns this row
        fixed.append((r, chosen))
        used.add(chosen)

    return Assignment(
        pairs=tuple(fixed), total_cost=fsum(entries[r][c] for r, c in fixed)
    )


def match_frame(
    gt_points: Sequence[Point],
    pred_points: Sequence[Point],
    config: EvalConfig,
    image_dims: tuple[int, int],
    view: int = 0,
    frame: int = 0,
) -> FrameMatch:
    """Match one frame's ground truth against its predictions.

    Assigned pairs within the radius become true positives; pairs forced
    to the diagonal bound split into one miss and one false detection.
    """
    matrix = build_cost_matrix(gt_points, pred_points, config.alpha, image_dims)
    assignment = solve_assignment(matrix)
    tp_rows: set[int] = set()
    tp_cols: set[int] = set()
    tp_pairs: list[tuple[str, str, float]] = []
    for r, c in assignment.pairs:
        g, p = gt_points[r], pred_points[c]
        d = math.hypot(g.x - p.x, g.y - p.y)
        if d < config.alpha:
            tp_pairs.append((g.id, p.id, d))
            tp_rows.add(r)
            tp_cols.add(c)
    fn_ids = tuple(g.id for i, g in enumerate(gt_points) if i not in tp_rows)
    fp_ids = tuple(p.id for j, p in enumerate(pred_points) if j not in tp_cols)
    return FrameMatch(
        view=view,
        frame=frame,
        tp_pairs=tuple(tp_pairs),
        fp_ids=fp_ids,
        fn_ids=fn_ids,
    )


class TrackRegistry:
    """Last known position of every identity seen so far in one view.

    Memory is unbounded on purpose: a point that leaves the scene and
    reappears near its old location must get its old identity back, and
    no aging horizon is part of the matching contract.
    """

    def __init__(self, view: int):
        self.view = view
        self.positions: dict[str, tuple[float, float]] = {}
        self.last_frame: dict[str, int] = {}
        self._counter = 0

    def observe(self, track_id: str, x: float, y: float, frame: int) -> None:
        self.positions[track_id] = (x, y)
        self.last_frame[track_id] = frame

    def fresh_id(self, reserved: set[str]) -> str:
        while True:
            candidate = f"v{self.view}t{self._counter}"
            self._counter += 1
            if candidate not in reserved and candidate not in self.positions:
                return candidate


def assign_temporal_ids(pred: Dataset, config: EvalConfig) -> Dataset:
    """Give every prediction an identity by temporal matching, per view.

    Predictions that already carry an id pass through unchanged and still
    update the registry. Id-less points in each frame are matched against
    the last known positions of all identities seen so far (not just the
    previous frame), so tracks survive gaps; leftovers get fresh ids drawn
    from a per-view counter that never collides with pass-through ids.
    """
    if pred.role is not Role.PREDICTION:
        raise ValueError("assign_temporal_ids expects a prediction dataset")
    if all(p.id is not None for p in pred.points):
        return pred

    dims = (pred.image_width, pred.image_height)
    new_ids: dict[int, str] = {}  # index in pred.points -> assigned id
    indices: dict[tuple[int, int], list[int]] = {}
    for i, p in enumerate(pred.points):
        indices.setdefault((p.view, p.frame), []).append(i)

    for view in range(pred.n_views):
        registry = TrackRegistry(view)
        reserved = {p.id for p in pred.points if p.view == view and p.id is not None}
        for frame in range(pred.n_frames):
            idx = indices.get((view, frame), [])
            carrying = [i for i in idx if pred.points[i].id is not None]
            nameless = [i for i in idx if pred.points[i].id is None]

            claimed = {pred.points[i].id for i in carrying}
            candidates = [t for t in registry.positions if t not in claimed]
            anchor_points = [
                Point(view=view, frame=frame, x=registry.positions[t][0], y=registry.positions[t][1])
                for t in candidates
            ]
            targets = [pred.points[i] for i in nameless]
            matrix = build_cost_matrix(targets, anchor_points, config.alpha, dims)
            assignment = solve_assignment(matrix)

            taken: set[int] = set()
            for r, c in assignment.pairs:
                if matrix.entries[r][c] < config.alpha:
                    new_ids[nameless[r]] = candidates[c]
                    taken.add(r)
            for r, i in enumerate(nameless):
                if r not in taken:
                    new_ids[i] = registry.fresh_id(reserved)

            for i in idx:
                p = pred.points[i]
                track_id = p.id if p.id is not None else new_ids[i]
                registry.observe(track_id, p.x, p.y, frame)

    return pred.with_points(
        p if p.id is not None else Point(
            view=p.view,
            frame=p.frame,
            x=p.x,
            y=p.y,
            id=new_ids[i],
            class_label=p.class_label,
        )
        for i, p in enumerate(pred.points)
    )
