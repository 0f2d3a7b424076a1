"""Grey multi-objective programs and their two solution pipelines.

The model holds linear grey objectives (each tagged maximize/minimize and
benefit/cost) over shared linear grey constraints.  Two solvers are
provided:

* ``weighted_sum_solve`` — samples the whitened admissible region, scores
  each objective's discriminating power by the entropy of its normalized
  interval deviations, collapses the objectives into one grey program with
  the entropy weights and solves its theta-positioned model.

* ``max_min_solve`` — solves each objective's own theta-whitened program,
  brackets every objective between its worst and best cross values, builds
  piecewise-linear satisfaction memberships whose cutoffs shift with the
  centered weights, and maximizes the smallest membership as a single LP.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from decimal import ROUND_HALF_EVEN, Decimal
from itertools import combinations
from typing import Literal, Sequence

import numpy as np

from .errors import (
    AllZeroPreferences,
    DegenerateObjective,
    DimensionMismatch,
    EmptyRegion,
    InfeasibleMaxMin,
    InfeasibleModel,
    InfeasibleSample,
    InvariantViolation,
    PositionOutOfRange,
    UnboundedObjective,
    ZeroWidth,
)
from .grey import (
    GreyIntervalMatrix,
    GreyNumber,
    Orientation,
    Real,
    grey_distance,
    lin_comb,
    normalize_intervals,
    whiten,
)
from .lp import LpProblem, Relation, Sense, solve_lp
from .positioned import GreyLinearProgram, theta_solve

FEAS_TOL = 1e-9
WIDTH_TOL = 1e-12
SAMPLE_SEED = 947_1031  # fixed seed for the convex-combination top-up


@dataclass(frozen=True)
class GreyObjective:
    sense: Sense
    orientation: Orientation
    coefficients: tuple[GreyNumber, ...]


@dataclass(frozen=True)
class GreyConstraint:
    coefficients: tuple[GreyNumber, ...]
    relation: Relation
    rhs: GreyNumber


@dataclass(frozen=True)
class GmopModel:
    """Linear grey multi-objective program over nonnegative variables."""

    objectives: tuple[GreyObjective, ...]
    constraints: tuple[GreyConstraint, ...]
    variable_count: int

    def __post_init__(self) -> None:
        if not self.objectives:
            raise InvariantViolation("a model needs at least one objective")
        for k, obj in enumerate(self.objectives):
            if len(obj.coefficients) != self.variable_count:
                raise InvariantViolation(f"objective {k} has wrong arity")
        for k, con in enumerate(self.constraints):
            if len(con.coefficients) != self.variable_count:
                raise InvariantViolation(f"constraint {k} has wrong arity")

    @classmethod
    def build(cls, objectives, constraints, variable_count: int) -> "GmopModel":
        as_grey = lambda g: g if isinstance(g, GreyNumber) else GreyNumber.parse(g)
        objs = tuple(
            GreyObjective(sense, orientation, tuple(as_grey(c) for c in coeffs))
            for sense, orientation, coeffs in objectives
        )
        cons = tuple(
            GreyConstraint(tuple(as_grey(c) for c in coeffs), rel, as_grey(rhs))
            for coeffs, rel, rhs in constraints
        )
        return cls(objs, cons, variable_count)

    def whitened_constraints(self, theta: float) -> list[tuple[list[float], Relation, float]]:
        return [
            (
                [float(whiten(c, theta)) for c in con.coefficients],
                con.relation,
                float(whiten(con.rhs, theta)),
            )
            for con in self.constraints
        ]


def objective_value(coefficients: Sequence[GreyNumber], point: Sequence[Real], theta: float) -> float:
    return float(sum(whiten(c, theta) * x for c, x in zip(coefficients, point)))


# ---------------------------------------------------------------------------
# Sampling the admissible region
# ---------------------------------------------------------------------------


def _feasible(rows, point, tol=FEAS_TOL) -> bool:
    if any(x < -tol for x in point):
        return False
    for coeffs, rel, rhs in rows:
        lhs = float(np.dot(coeffs, point))
        if rel == "<=" and lhs > rhs + tol:
            return False
        if rel == ">=" and lhs < rhs - tol:
            return False
        if rel == "=" and abs(lhs - rhs) > tol:
            return False
    return True


def _region_vertices(rows, n: int) -> list[tuple[float, ...]]:
    """Feasible intersections of n active planes (rows and coordinate planes)."""
    planes = [np.asarray(coeffs, dtype=float) for coeffs, _, _ in rows]
    offsets = [rhs for _, _, rhs in rows]
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        planes.append(e)
        offsets.append(0.0)
    seen: dict[tuple[float, ...], tuple[float, ...]] = {}
    for combo in combinations(range(len(planes)), n):
        mat = np.stack([planes[i] for i in combo])
        vec = np.array([offsets[i] for i in combo])
        if abs(np.linalg.det(mat)) < 1e-10:
            continue
        x = np.linalg.solve(mat, vec)
        point = tuple(float(v) for v in x)
        if _feasible(rows, point, tol=1e-7):
            key = tuple(round(v, 9) for v in point)
            seen.setdefault(key, point)
    return sorted(seen.values())


def sample_admissible(
    model: GmopModel,
    theta: float,
    l: int | None = None,
    supplied: Sequence[Sequence[Real]] | None = None,
) -> list[tuple[float, ...]]:
    """Deterministic admissible points of the theta-whitened region.

    Supplied points are validated and returned verbatim.  Otherwise the
    region's vertices (found by intersecting constraint planes pairwise with
    the coordinate planes) are listed in lexicographic order and topped up
    with seeded convex combinations until l points exist.  The default l is
    twice the number of objectives.
    """
    if not (0 <= theta <= 1):
        raise PositionOutOfRange(f"theta {theta} outside [0, 1]")
    rows = model.whitened_constraints(theta)
    n = model.variable_count
    if supplied is not None:
        points = [tuple(float(v) for v in p) for p in supplied]
        for p in points:
            if len(p) != n:
                raise DimensionMismatch(f"sample point {p} has {len(p)} coordinates, expected {n}")
            if not _feasible(rows, p):
                raise InfeasibleSample(f"supplied point {p} violates the whitened constraints")
        return points

    if l is None:
        l = 2 * len(model.objectives)
    vertices = _region_vertices(rows, n)
    if not vertices:
        raise EmptyRegion("whitened admissible region has no feasible vertex")
    points = list(vertices[:l])
    rng = random.Random(SAMPLE_SEED)
    while len(points) < l:
        if len(vertices) == 1:
            points.append(vertices[0])
            continue
        a, b = rng.sample(range(len(vertices)), 2)
        t = rng.uniform(0.25, 0.75)
        blend = tuple(
            t * va + (1 - t) * vb for va, vb in zip(vertices[a], vertices[b])
        )
        points.append(blend)
    return points


# ---------------------------------------------------------------------------
# Entropy weighting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightingWorkspace:
    """Everything the entropy-weight pipeline computes, frozen as a snapshot."""

    sample_points: tuple[tuple[float, ...], ...]
    objective_matrix: GreyIntervalMatrix
    normalized_matrix: GreyIntervalMatrix
    deviations: tuple[tuple[float, ...], ...]
    deviation_totals: tuple[float, ...]
    entropies: tuple[float, ...]
    weights: tuple[float, ...]
    preferences: tuple[float, ...] | None = None
    modified_weights: tuple[float, ...] | None = None

    @property
    def final_weights(self) -> tuple[float, ...]:
        return self.modified_weights if self.modified_weights is not None else self.weights


def objective_matrix(model: GmopModel, points: Sequence[Sequence[Real]]) -> GreyIntervalMatrix:
    """Interval value of every objective at every sample point."""
    rows = []
    for obj in model.objectives:
        row = []
        for p in points:
            if len(p) != model.variable_count:
                raise DimensionMismatch(f"point {p} does not match {model.variable_count} variables")
            row.append(lin_comb(list(p), list(obj.coefficients)))
        rows.append(row)
    return GreyIntervalMatrix.from_rows(rows)


def _normalize_rows(matrix: GreyIntervalMatrix, orientations: Sequence[Orientation]) -> GreyIntervalMatrix:
    rows = []
    for i, orientation in enumerate(orientations):
        try:
            rows.append(normalize_intervals(list(matrix.row(i)), orientation))
        except Exception as exc:
            raise DegenerateObjective(f"objective {i} cannot be normalized: {exc}") from exc
    return GreyIntervalMatrix.from_rows(rows)


def _entropy_pipeline(normalized: GreyIntervalMatrix):
    """Deviations, entropies and weights from a normalized interval matrix.

    Zero deviation shares contribute nothing to the entropy sum (the
    0 * ln 0 limit).  When no objective discriminates at all (every entropy
    exactly 1) the weights fall back to uniform.
    """
    l = normalized.cols
    deviations = []
    totals = []
    for i in range(normalized.rows):
        row = normalized.row(i)
        per_point = tuple(
            float(sum(grey_distance(row[t], row[s]) for s in range(l))) for t in range(l)
        )
        total = float(sum(per_point))
        if total <= 0:
            raise DegenerateObjective(f"objective {i} has identical values at every sample point")
        deviations.append(per_point)
        totals.append(total)
    log_l = float(np.log(l))
    entropies = []
    for per_point, total in zip(deviations, totals):
        acc = 0.0
        for dt in per_point:
            share = dt / total
            if share > 0:
                acc += share * float(np.log(share))
        entropies.append(-acc / log_l)
    discrimination = [1 - e for e in entropies]
    denom = float(sum(discrimination))
    if denom <= 1e-12:
        weights = tuple(1.0 / len(entropies) for _ in entropies)
    else:
        weights = tuple(d / denom for d in discrimination)
    return tuple(deviations), tuple(totals), tuple(entropies), weights


def entropy_weights(ws: WeightingWorkspace) -> list[float]:
    """Entropy weights recomputed from the workspace's normalized matrix."""
    _, _, _, weights = _entropy_pipeline(ws.normalized_matrix)
    return list(weights)


def modify_weights(w: Sequence[Real], preferences: Sequence[Real]) -> list[float]:
    """Fold caller preferences into weights: normalized elementwise product."""
    if len(w) != len(preferences):
        raise DimensionMismatch(f"{len(w)} weights vs {len(preferences)} preferences")
    if any(p < 0 for p in preferences):
        raise AllZeroPreferences("preferences must be nonnegative")
    products = [float(wi) * float(pi) for wi, pi in zip(w, preferences)]
    total = sum(products)
    if total <= 0:
        raise AllZeroPreferences("all preference-weight products are zero")
    return [p / total for p in products]


def weigh_objectives(
    model: GmopModel,
    theta: float = 0.5,
    l: int | None = None,
    points: Sequence[Sequence[Real]] | None = None,
    preferences: Sequence[Real] | None = None,
) -> WeightingWorkspace:
    """Run the full sampling / normalization / entropy chain."""
    sampled = tuple(sample_admissible(model, theta, l=l, supplied=points))
    matrix = objective_matrix(model, sampled)
    normalized = _normalize_rows(matrix, [obj.orientation for obj in model.objectives])
    deviations, totals, entropies, weights = _entropy_pipeline(normalized)
    ws = WeightingWorkspace(
        sample_points=sampled,
        objective_matrix=matrix,
        normalized_matrix=normalized,
        deviations=deviations,
        deviation_totals=totals,
        entropies=entropies,
        weights=weights,
    )
    if preferences is not None:
        modified = tuple(modify_weights(weights, preferences))
        ws = replace(ws, preferences=tuple(float(p) for p in preferences), modified_weights=modified)
    return ws


# ---------------------------------------------------------------------------
# Weighted-sum pipeline
# ---------------------------------------------------------------------------


def combine_objectives(model: GmopModel, w: Sequence[Real]) -> GreyLinearProgram:
    """Collapse the objectives into one grey program with the given weights.

    Minimize-sense objectives are negated first so the combination is a
    canonical maximize; constraints carry over unchanged.
    """
    if len(w) != len(model.objectives):
        raise DimensionMismatch(f"{len(w)} weights for {len(model.objectives)} objectives")
    total = sum(w)
    if abs(float(total) - 1.0) > 1e-9:
        raise InvariantViolation(f"weights must sum to 1, got {float(total)}")
    price = []
    for j in range(model.variable_count):
        column = [
            obj.coefficients[j] if obj.sense == "maximize" else -obj.coefficients[j]
            for obj in model.objectives
        ]
        price.append(lin_comb(list(w), column))
    return GreyLinearProgram(
        sense="maximize",
        price=tuple(price),
        consumption=tuple(con.coefficients for con in model.constraints),
        resources=tuple(con.rhs for con in model.constraints),
        relations=tuple(con.relation for con in model.constraints),
    )


@dataclass(frozen=True)
class WeightedSumSolution:
    point: tuple[float, ...]
    objective_values: tuple[float, ...]
    weights: tuple[float, ...]
    combined_value: float
    workspace: WeightingWorkspace


def weighted_sum_solve(
    model: GmopModel,
    theta: float = 0.5,
    l: int | None = None,
    points: Sequence[Sequence[Real]] | None = None,
    preferences: Sequence[Real] | None = None,
    weights: Sequence[Real] | None = None,
) -> WeightedSumSolution:
    """Entropy-weighted scalarization solved at the theta-positioned model.

    ``weights`` overrides the entropy weights (an analyst may round or
    otherwise adjust them); preferences modify them multiplicatively.
    Returns the optimal point plus each objective's value there under
    theta whitening.
    """
    ws = weigh_objectives(model, theta, l=l, points=points, preferences=preferences)
    w = tuple(weights) if weights is not None else ws.final_weights
    combined = combine_objectives(model, list(w))
    sol = theta_solve(combined, theta)
    if not sol.is_optimal:
        raise (InfeasibleModel if sol.status == "infeasible" else UnboundedObjective)(
            f"combined program is {sol.status}"
        )
    values = tuple(
        objective_value(obj.coefficients, sol.point, theta) for obj in model.objectives
    )
    return WeightedSumSolution(
        point=sol.point,
        objective_values=values,
        weights=tuple(float(x) for x in w),
        combined_value=sol.value,
        workspace=ws,
    )


# ---------------------------------------------------------------------------
# Max-min satisfaction pipeline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MaxMinWorkspace:
    """Per-objective optima and brackets, in canonical maximize form.

    ``signs[i]`` is -1 where objective i was a minimize objective that got
    negated on the way in; cross values, bounds, midpoints and half-widths
    all live on the canonical scale.
    """

    optima: tuple[tuple[float, ...], ...]
    cross_values: tuple[tuple[float, ...], ...]
    lower_bounds: tuple[float, ...]
    upper_bounds: tuple[float, ...]
    midpoints: tuple[float, ...]
    half_widths: tuple[float, ...]
    signs: tuple[int, ...]
    centered_weights: tuple[float, ...] | None = None
    raised_indices: tuple[int, ...] | None = None   # I1: centered weight >= 0
    lowered_indices: tuple[int, ...] | None = None  # I2: centered weight < 0
    satisfaction: float | None = None


def _canonical_objectives(model: GmopModel) -> tuple[list[tuple[GreyNumber, ...]], tuple[int, ...]]:
    rows = []
    signs = []
    for obj in model.objectives:
        if obj.sense == "maximize":
            rows.append(obj.coefficients)
            signs.append(1)
        else:
            rows.append(tuple(-c for c in obj.coefficients))
            signs.append(-1)
    return rows, tuple(signs)


def individual_optima(model: GmopModel, theta: float) -> MaxMinWorkspace:
    """Solve each objective alone and evaluate every objective at each optimum."""
    canonical, signs = _canonical_objectives(model)
    rows = model.whitened_constraints(theta)
    optima = []
    for i, coeffs in enumerate(canonical):
        lp = LpProblem.build(
            "maximize", [float(whiten(c, theta)) for c in coeffs], rows
        )
        sol = solve_lp(lp)
        if sol.status == "unbounded":
            raise UnboundedObjective(f"objective {i} is unbounded over the whitened region")
        if sol.status == "infeasible":
            raise InfeasibleModel("whitened constraint system is infeasible")
        optima.append(sol.point)
    cross = tuple(
        tuple(objective_value(coeffs, x, theta) for x in optima) for coeffs in canonical
    )
    lows = tuple(min(row) for row in cross)
    highs = tuple(max(row) for row in cross)
    return MaxMinWorkspace(
        optima=tuple(optima),
        cross_values=cross,
        lower_bounds=lows,
        upper_bounds=highs,
        midpoints=tuple((hi + lo) / 2 for lo, hi in zip(lows, highs)),
        half_widths=tuple((hi - lo) / 2 for lo, hi in zip(lows, highs)),
        signs=signs,
    )


def whitening_weight(value: Real, mid: Real, halfwidth: Real, w_centered: Real) -> float:
    """Piecewise-linear satisfaction of an objective value inside its bracket.

    Rises from 0 to 1 over a ramp whose upper cutoff mid + w'*halfwidth and
    lower cutoff (mid + (2w'-1)*halfwidth for w' >= 0, mid - halfwidth
    otherwise) shift upward with the centered weight w': heavier objectives
    must sit closer to their individual optimum to count as satisfied.
    """
    if halfwidth <= 0:
        raise ZeroWidth("objective bracket has zero width")
    top = mid + w_centered * halfwidth
    if w_centered >= 0:
        low = mid + (2 * w_centered - 1) * halfwidth
        span = halfwidth * (1 - w_centered)
    else:
        low = mid - halfwidth
        span = halfwidth * (1 + w_centered)
    if value >= top:
        return 1.0
    if value < low or span <= 0:
        return 0.0
    return float(min(1.0, max(0.0, 1 - (top - value) / span)))


def _round_sig(x: float, digits: int) -> float:
    """Round to significant digits, half to even, via the shortest repr."""
    if x == 0:
        return 0.0
    d = Decimal(repr(float(x)))
    shift = digits - d.adjusted() - 1
    return float(d.scaleb(shift).quantize(Decimal(1), rounding=ROUND_HALF_EVEN).scaleb(-shift))


@dataclass(frozen=True)
class MaxMinSolution:
    point: tuple[float, ...]
    satisfaction: float
    objective_values: tuple[float, ...]
    workspace: MaxMinWorkspace


def max_min_solve(
    model: GmopModel,
    theta: float,
    w: Sequence[Real],
    reproduce_paper_rounding: bool = False,
) -> MaxMinSolution:
    """Maximize the smallest objective satisfaction as one LP over (x, level).

    Objectives whose bracket has zero width carry no satisfaction signal and
    are dropped (weights renormalized over the rest).  The level is capped
    at 1, matching the membership semantics.  Among level-optimal points the
    one with the tightest satisfaction rows is returned (a second solve
    minimizing total row surplus), which makes the answer deterministic and
    balances the objectives at the achieved level.

    ``reproduce_paper_rounding`` rounds each satisfaction row's level
    coefficient and right-hand side to two significant digits before
    solving, mimicking hand-rounded worked calculations.
    """
    if len(w) != len(model.objectives):
        raise DimensionMismatch(f"{len(w)} weights for {len(model.objectives)} objectives")
    canonical, signs = _canonical_objectives(model)
    ws = individual_optima(model, theta)
    rows = model.whitened_constraints(theta)
    n = model.variable_count

    active = [i for i in range(len(canonical)) if ws.half_widths[i] > WIDTH_TOL]
    if not active:
        # no objective discriminates between the individual optima: every
        # membership is vacuously 1 at the shared optimum
        point = ws.optima[0]
        values = tuple(
            objective_value(obj.coefficients, point, theta) for obj in model.objectives
        )
        done = replace(
            ws,
            centered_weights=(0.0,) * len(canonical),
            raised_indices=(),
            lowered_indices=(),
            satisfaction=1.0,
        )
        return MaxMinSolution(point=point, satisfaction=1.0, objective_values=values, workspace=done)

    active_total = float(sum(float(w[i]) for i in active))
    if active_total <= 0:
        raise AllZeroPreferences("weights on the active objectives are all zero")
    mean_share = 1.0 / len(active)
    centered = {i: float(w[i]) / active_total - mean_share for i in active}

    level_coeffs: dict[int, float] = {}
    floors: dict[int, float] = {}
    for i in active:
        mid, width = ws.midpoints[i], ws.half_widths[i]
        wc = centered[i]
        if wc >= 0:
            level_coeffs[i] = (1 - wc) * width
            floors[i] = mid + (2 * wc - 1) * width
        else:
            level_coeffs[i] = (1 + wc) * width
            floors[i] = mid - width
        if reproduce_paper_rounding:
            level_coeffs[i] = _round_sig(level_coeffs[i], 2)
            floors[i] = _round_sig(floors[i], 2)

    whitened = [[float(whiten(c, theta)) for c in canonical[i]] for i in range(len(canonical))]

    constraints = []
    for i in active:
        constraints.append((whitened[i] + [-level_coeffs[i]], ">=", floors[i]))
    for coeffs, rel, rhs in rows:
        constraints.append((list(coeffs) + [0.0], rel, rhs))
    constraints.append(([0.0] * n + [1.0], "<=", 1.0))

    first = solve_lp(LpProblem.build("maximize", [0.0] * n + [1.0], constraints))
    if first.status == "infeasible":
        raise InfeasibleMaxMin("satisfaction program infeasible even at level 0")
    level = float(first.value)

    # second stage: pin the level, pull the satisfaction rows tight
    tight_rows = []
    for i in active:
        tight_rows.append((whitened[i], ">=", floors[i] + level_coeffs[i] * level))
    for coeffs, rel, rhs in rows:
        tight_rows.append((list(coeffs), rel, rhs))
    surplus_cost = [float(sum(whitened[i][j] for i in active)) for j in range(n)]
    second = solve_lp(LpProblem.build("minimize", surplus_cost, tight_rows))
    point = second.point if second.is_optimal else first.point[:n]

    values = tuple(
        objective_value(obj.coefficients, point, theta) for obj in model.objectives
    )
    done = replace(
        ws,
        centered_weights=tuple(centered.get(i, 0.0) for i in range(len(canonical))),
        raised_indices=tuple(i for i in active if centered[i] >= 0),
        lowered_indices=tuple(i for i in active if centered[i] < 0),
        satisfaction=level,
    )
    return MaxMinSolution(
        point=tuple(point), satisfaction=level, objective_values=values, workspace=done
    )
