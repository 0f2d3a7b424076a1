"""Batch reports over stored models: both solvers plus frontier sweeps.

A report echoes its inputs, carries the solution and per-objective values,
and measures wall time.  Frontier reports additionally render the CSV
artifact (columns e2, Z1, Z2, tradeoff, then the allocation fractions).
All numerics serialize at 12 significant digits.
"""

from __future__ import annotations

import io
import time
from pathlib import Path

from .documents import round_floats, sample_points_of
from .errors import ParameterError
from .multiobjective import GmopModel, max_min_solve, weigh_objectives, weighted_sum_solve
from .portfolio import PortfolioSpec, compromise_solution, pareto_frontier
from .store import ModelStore

MODES = ("algorithm1", "algorithm2", "frontier")


def run_report(store: ModelStore, handle: str, mode: str, params: dict | None = None) -> dict:
    params = dict(params or {})
    if mode not in MODES:
        raise ParameterError(f"unknown mode {mode!r}; expected one of {MODES}")
    model = store.model(handle)
    document = store.document(handle)
    started = time.perf_counter()

    if mode in ("algorithm1", "algorithm2"):
        if not isinstance(model, GmopModel):
            raise ParameterError(f"mode {mode} needs a gmop model, got {document.get('kind')}")
        theta = float(params.get("theta", 0.5))
        points = params.get("points") or sample_points_of(document)
        body = _multiobjective_report(model, mode, theta, points, params)
    else:
        if not isinstance(model, PortfolioSpec):
            raise ParameterError(f"mode frontier needs a portfolio model, got {document.get('kind')}")
        body = _frontier_report(model, params)

    elapsed_ms = (time.perf_counter() - started) * 1000
    report = {
        "mode": mode,
        "handle": handle,
        "inputs": {k: v for k, v in params.items()},
        **body,
        "elapsed_ms": elapsed_ms,
    }
    report = round_floats(report)
    _persist_artifacts(store, handle, mode, report)
    return report


def _multiobjective_report(model: GmopModel, mode: str, theta, points, params) -> dict:
    l = params.get("l")
    preferences = params.get("preferences")
    if mode == "algorithm1":
        result = weighted_sum_solve(
            model,
            theta=theta,
            l=l,
            points=points,
            preferences=preferences,
            weights=params.get("weights"),
        )
        ws = result.workspace
        return {
            "weights": list(result.weights),
            "entropy_weights": list(ws.weights),
            "entropies": list(ws.entropies),
            "sample_points": [list(p) for p in ws.sample_points],
            "point": list(result.point),
            "objective_values": list(result.objective_values),
            "combined_value": result.combined_value,
        }
    weights = params.get("weights")
    entropy_ws = None
    if weights is None:
        entropy_ws = weigh_objectives(model, theta, l=l, points=points, preferences=preferences)
        weights = list(entropy_ws.final_weights)
    result = max_min_solve(
        model,
        theta,
        weights,
        reproduce_paper_rounding=bool(params.get("reproduce_paper_rounding", False)),
    )
    ws = result.workspace
    return {
        "weights": list(weights),
        "entropy_weights": list(entropy_ws.weights) if entropy_ws else None,
        "point": list(result.point),
        "satisfaction": result.satisfaction,
        "objective_values": list(result.objective_values),
        "objective_bounds": {
            "lower": list(ws.lower_bounds),
            "upper": list(ws.upper_bounds),
            "midpoints": list(ws.midpoints),
            "half_widths": list(ws.half_widths),
        },
    }


def _frontier_report(spec: PortfolioSpec, params: dict) -> dict:
    epsilons = params.get("epsilons")
    if not epsilons:
        raise ParameterError("frontier mode needs a non-empty list of epsilons")
    theta = float(params.get("theta", 0.5))
    frontier = pareto_frontier(spec, theta, [float(e) for e in epsilons])
    compromise = compromise_solution(frontier)
    best_profit = max(p.profit for p in frontier)
    best_risk = min(p.risk for p in frontier)
    return {
        "points": [
            {
                "epsilon": p.epsilon,
                "profit": p.profit,
                "risk": p.risk,
                "tradeoff": p.tradeoff,
                "allocation": list(p.allocation),
            }
            for p in frontier
        ],
        "ideal": {"profit": best_profit, "risk": best_risk},
        "compromise": {
            "epsilon": compromise.epsilon,
            "profit": compromise.profit,
            "risk": compromise.risk,
            "allocation": list(compromise.allocation),
        },
        "csv": frontier_csv(frontier),
    }


def frontier_csv(frontier) -> str:
    n_vars = len(frontier[0].allocation)
    out = io.StringIO()
    header = ["e2", "Z1", "Z2", "tradeoff"] + [f"x_{j}" for j in range(n_vars)]
    out.write(",".join(header) + "\n")
    for p in frontier:
        cells = [
            f"{p.epsilon:.12g}",
            f"{p.profit:.12g}",
            f"{p.risk:.12g}",
            "" if p.tradeoff is None else f"{p.tradeoff:.12g}",
        ] + [f"{x:.12g}" for x in p.allocation]
        out.write(",".join(cells) + "\n")
    return out.getvalue()


def _persist_artifacts(store: ModelStore, handle: str, mode: str, report: dict) -> None:
    if store.root is None or mode != "frontier":
        return
    reports_dir = Path(store.root) / "reports"
    reports_dir.mkdir(parents=True, exist_ok=True)
    (reports_dir / f"{handle}_frontier.csv").write_text(report["csv"])
