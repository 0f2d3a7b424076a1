"""Deterministic dense LP kernel: two-phase simplex with Bland's rule.

Solves  max/min c'x  subject to rows  a_i'x {<=,>=,=} b_i  and  x >= 0.
Bland's rule (lowest-index entering column, lowest-index basic variable on
ratio ties) guarantees termination without cycling and makes the returned
vertex a deterministic function of the input.  Sized for the tens of
variables this toolkit produces, not for sparse large-scale work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .errors import MalformedProblem

Sense = Literal["maximize", "minimize"]
Relation = Literal["<=", ">=", "="]

RELATIONS: tuple[str, ...] = ("<=", ">=", "=")

FEAS_TOL = 1e-9       # feasibility / tightness checks
PIVOT_TOL = 1e-9      # reduced-cost and pivot-element threshold
PHASE1_TOL = 1e-7     # residual artificial mass that still counts as feasible


@dataclass(frozen=True)
class Constraint:
    coefficients: tuple[float, ...]
    relation: Relation
    rhs: float


@dataclass(frozen=True)
class LpProblem:
    sense: Sense
    objective: tuple[float, ...]
    constraints: tuple[Constraint, ...]
    variable_count: int

    @classmethod
    def build(
        cls,
        sense: Sense,
        objective: Sequence[float],
        constraints: Sequence[tuple[Sequence[float], str, float]],
        variable_count: int | None = None,
    ) -> "LpProblem":
        n = len(objective) if variable_count is None else variable_count
        if len(objective) != n:
            raise MalformedProblem(f"objective length {len(objective)} != {n} variables")
        if sense not in ("maximize", "minimize"):
            raise MalformedProblem(f"unknown sense {sense!r}")
        rows = []
        for k, (coeffs, rel, rhs) in enumerate(constraints):
            if len(coeffs) != n:
                raise MalformedProblem(f"constraint {k} has {len(coeffs)} coefficients, expected {n}")
            if rel not in RELATIONS:
                raise MalformedProblem(f"constraint {k} has unknown relation {rel!r}")
            rows.append(Constraint(tuple(float(c) for c in coeffs), rel, float(rhs)))
        return cls(sense, tuple(float(c) for c in objective), tuple(rows), n)


@dataclass(frozen=True)
class LpSolution:
    status: Literal["optimal", "infeasible", "unbounded"]
    point: tuple[float, ...] | None = None
    value: float | None = None
    tight_constraints: frozenset[int] = field(default_factory=frozenset)

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"


def _bland_min(tableau: np.ndarray, basis: list[int], allowed: int) -> str:
    """Run simplex minimization on a prepared tableau in place.

    ``tableau`` holds constraint rows followed by the reduced-cost row, with
    the rhs in the last column.  ``allowed`` caps the entering-column range
    (used to freeze artificial columns out of phase 2).  Returns "optimal"
    or "unbounded".
    """
    m = tableau.shape[0] - 1
    for _ in range(100_000):
        cost = tableau[-1, :allowed]
        entering = -1
        for j in range(allowed):
            if cost[j] < -PIVOT_TOL:
                entering = j
                break
        if entering < 0:
            return "optimal"
        col = tableau[:m, entering]
        rhs = tableau[:m, -1]
        leaving = -1
        best_ratio = np.inf
        for i in range(m):
            if col[i] > PIVOT_TOL:
                ratio = rhs[i] / col[i]
                if ratio < best_ratio - 1e-12 or (
                    abs(ratio - best_ratio) <= 1e-12
                    and (leaving < 0 or basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving < 0:
            return "unbounded"
        _pivot(tableau, basis, leaving, entering)
    raise RuntimeError("simplex iteration cap exceeded (should be impossible under Bland's rule)")


def _pivot(tableau: np.ndarray, basis: list[int], row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    pivot_row = tableau[row]
    for i in range(tableau.shape[0]):
        if i != row and abs(tableau[i, col]) > 0.0:
            tableau[i] -= tableau[i, col] * pivot_row
    basis[row] = col


def _rebuild_cost_row(tableau: np.ndarray, basis: list[int], cost: np.ndarray) -> None:
    m = tableau.shape[0] - 1
    row = np.zeros(tableau.shape[1])
    row[: cost.size] = cost
    for i in range(m):
        cb = row[basis[i]]
        if cb != 0.0:
            row -= cb * tableau[i]
    tableau[-1] = row


def solve_lp(problem: LpProblem) -> LpSolution:
    n = problem.variable_count
    if len(problem.objective) != n:
        raise MalformedProblem("objective length inconsistent with variable count")
    for k, con in enumerate(problem.constraints):
        if len(con.coefficients) != n:
            raise MalformedProblem(f"constraint {k} row length mismatch")
        if con.relation not in RELATIONS:
            raise MalformedProblem(f"constraint {k} has unknown relation {con.relation!r}")

    m = len(problem.constraints)
    c = np.asarray(problem.objective, dtype=float)
    c_int = -c if problem.sense == "maximize" else c.copy()

    rows = np.array([con.coefficients for con in problem.constraints], dtype=float).reshape(m, n)
    rhs = np.array([con.rhs for con in problem.constraints], dtype=float)
    rels = [con.relation for con in problem.constraints]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = -rows[i]
            rhs[i] = -rhs[i]
            rels[i] = {"<=": ">=", ">=": "<=", "=": "="}[rels[i]]

    n_slack = sum(1 for r in rels if r in ("<=", ">="))
    n_art = sum(1 for r in rels if r in (">=", "="))
    total = n + n_slack + n_art
    A = np.zeros((m, total))
    A[:, :n] = rows
    basis: list[int] = [0] * m
    s = n
    a = n + n_slack
    art_cols: list[int] = []
    for i, rel in enumerate(rels):
        if rel == "<=":
            A[i, s] = 1.0
            basis[i] = s
            s += 1
        elif rel == ">=":
            A[i, s] = -1.0
            s += 1
            A[i, a] = 1.0
            basis[i] = a
            art_cols.append(a)
            a += 1
        else:
            A[i, a] = 1.0
            basis[i] = a
            art_cols.append(a)
            a += 1

    tableau = np.zeros((m + 1, total + 1))
    tableau[:m, :total] = A
    tableau[:m, -1] = rhs

    if n_art:
        phase1_cost = np.zeros(total)
        phase1_cost[n + n_slack :] = 1.0
        _rebuild_cost_row(tableau, basis, phase1_cost)
        _bland_min(tableau, basis, total)
        # the cost row's rhs cell carries -(sum of artificials)
        if -tableau[-1, -1] > PHASE1_TOL:
            return LpSolution(status="infeasible")
        # pivot lingering artificials out of the basis, dropping redundant rows
        keep = list(range(m))
        for i in range(m):
            if basis[i] >= n + n_slack:
                pivot_col = -1
                for j in range(n + n_slack):
                    if abs(tableau[i, j]) > PIVOT_TOL:
                        pivot_col = j
                        break
                if pivot_col >= 0:
                    _pivot(tableau, basis, i, pivot_col)
                else:
                    keep.remove(i)
        if len(keep) != m:
            rows_idx = keep + [m]
            tableau = tableau[rows_idx]
            basis = [basis[i] for i in keep]
            m = len(keep)

    cost2 = np.zeros(total)
    cost2[:n] = c_int
    _rebuild_cost_row(tableau, basis, cost2)
    status = _bland_min(tableau, basis, n + n_slack)
    if status == "unbounded":
        return LpSolution(status="unbounded")

    x = np.zeros(total)
    for i in range(m):
        x[basis[i]] = tableau[i, -1]
    point = tuple(float(v) for v in x[:n])
    value = float(np.dot(c, x[:n]))

    tight = frozenset(
        i
        for i, con in enumerate(problem.constraints)
        if abs(float(np.dot(con.coefficients, point)) - con.rhs) <= max(FEAS_TOL, FEAS_TOL * abs(con.rhs))
    )
    return LpSolution(status="optimal", point=point, value=value, tight_constraints=tight)
