"""Command-line interface: solve, weigh, sweep and run analyst sessions."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .documents import parse_document, parse_text, round_floats, sample_points_of
from .errors import GreyOptError
from .positioned import GreyLinearProgram, PositionedCoefficients, solve_positioned
from .reports import run_report
from .session import SessionEngine
from .store import ModelStore

STORAGE_OPTION = click.option(
    "--storage",
    envvar="GREYOPT_STORAGE",
    default="./greyopt_data",
    show_default=True,
    help="Directory holding stored models, sessions and report artifacts.",
)


def _emit(payload) -> None:
    click.echo(json.dumps(round_floats(payload), indent=2))


def _load_document(path: str) -> dict:
    return parse_text(Path(path).read_text())


def _ephemeral_store(path: str) -> tuple[ModelStore, str]:
    store = ModelStore()
    handle = store.ingest(_load_document(path))
    return store, handle


def _parse_pair(text: str) -> tuple[float, float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise click.BadParameter(f"expected 'lower,upper', got {text!r}")
    return float(parts[0]), float(parts[1])


def _positions_option(theta, rho, beta, delta) -> dict:
    if rho is not None or beta is not None or delta is not None:
        if rho is None or beta is None or delta is None:
            raise click.BadParameter("--rho, --beta and --delta must be given together")
        return {"rho": rho, "beta": beta, "delta": delta}
    return {"theta": 0.5 if theta is None else theta}


@click.group()
def main() -> None:
    """Grey multi-objective programming toolkit."""


@main.command("solve-positioned")
@click.argument("model_file", type=click.Path(exists=True))
@click.option("--theta", type=float, default=None, help="Single whitening position.")
@click.option("--rho", type=float, default=None, help="Price position.")
@click.option("--beta", type=float, default=None, help="Resource position.")
@click.option("--delta", type=float, default=None, help="Consumption position.")
def solve_positioned_cmd(model_file, theta, rho, beta, delta):
    """Whiten a grey program at the given positions and solve it."""
    program = parse_document(_load_document(model_file))
    if not isinstance(program, GreyLinearProgram):
        raise click.ClickException("solve-positioned needs a grey_program document")
    spec = _positions_option(theta, rho, beta, delta)
    if "theta" in spec:
        pc = PositionedCoefficients.theta(spec["theta"], program)
    else:
        pc = PositionedCoefficients.uniform(spec["rho"], spec["beta"], spec["delta"], program)
    sol = solve_positioned(program, pc)
    _emit(
        {
            "status": sol.status,
            "point": list(sol.point) if sol.point else None,
            "value": sol.value,
            "tight_constraints": sorted(sol.tight_constraints),
        }
    )


@main.command("weights")
@click.argument("model_file", type=click.Path(exists=True))
@click.option("--points", "points_file", type=click.Path(exists=True), default=None,
              help="JSON file with sample points (defaults to points embedded in the model).")
@click.option("--theta", type=float, default=0.5, show_default=True)
def weights_cmd(model_file, points_file, theta):
    """Entropy weights of a gmop model's objectives."""
    from .multiobjective import GmopModel, weigh_objectives

    doc = _load_document(model_file)
    model = parse_document(doc)
    if not isinstance(model, GmopModel):
        raise click.ClickException("weights needs a gmop document")
    points = (
        json.loads(Path(points_file).read_text()) if points_file else sample_points_of(doc)
    )
    ws = weigh_objectives(model, theta, points=points)
    _emit(
        {
            "weights": list(ws.weights),
            "entropies": list(ws.entropies),
            "sample_points": [list(p) for p in ws.sample_points],
        }
    )


def _report_command(model_file, mode, params):
    store, handle = _ephemeral_store(model_file)
    return run_report(store, handle, mode, params)


@main.command("algorithm1")
@click.argument("model_file", type=click.Path(exists=True))
@click.option("--theta", type=float, default=0.5, show_default=True)
@click.option("--points", "points_file", type=click.Path(exists=True), default=None)
@click.option("--l", "sample_count", type=int, default=None, help="Number of sample points.")
def algorithm1_cmd(model_file, theta, points_file, sample_count):
    """Entropy-weighted scalarization of a gmop model."""
    params = {"theta": theta}
    if points_file:
        params["points"] = json.loads(Path(points_file).read_text())
    if sample_count:
        params["l"] = sample_count
    _emit(_report_command(model_file, "algorithm1", params))


@main.command("algorithm2")
@click.argument("model_file", type=click.Path(exists=True))
@click.option("--theta", type=float, default=0.5, show_default=True)
@click.option("--weights", "weights_text", type=str, default=None,
              help="Comma-separated objective weights (default: entropy weights).")
@click.option("--points", "points_file", type=click.Path(exists=True), default=None)
@click.option("--reproduce-paper-rounding", is_flag=True, default=False,
              help="Round satisfaction-row coefficients to two significant digits.")
def algorithm2_cmd(model_file, theta, weights_text, points_file, reproduce_paper_rounding):
    """Max-min satisfaction solve of a gmop model."""
    params = {"theta": theta, "reproduce_paper_rounding": reproduce_paper_rounding}
    if weights_text:
        params["weights"] = [float(w) for w in weights_text.split(",")]
    if points_file:
        params["points"] = json.loads(Path(points_file).read_text())
    _emit(_report_command(model_file, "algorithm2", params))


@main.command("frontier")
@click.argument("portfolio_file", type=click.Path(exists=True))
@click.option("--epsilons", required=True, help="Comma-separated risk caps in money units.")
@click.option("--theta", type=float, default=0.5, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(), default=None, help="Write the CSV here.")
def frontier_cmd(portfolio_file, epsilons, theta, csv_path):
    """Sweep the risk cap and report the profit/risk frontier."""
    eps = [float(e) for e in epsilons.split(",")]
    report = _report_command(portfolio_file, "frontier", {"theta": theta, "epsilons": eps})
    if csv_path:
        Path(csv_path).write_text(report["csv"])
    _emit(report)


@main.group("session")
def session_group() -> None:
    """Interactive pleased-degree sessions."""


@session_group.command("start")
@click.argument("model_file", type=click.Path(exists=True))
@click.option("--mu0", type=float, required=True, help="Target floor for the pleased degree.")
@click.option("--theta", type=float, default=None)
@click.option("--rho", type=float, default=None)
@click.option("--beta", type=float, default=None)
@click.option("--delta", type=float, default=None)
@click.option("--theta-lambda", type=float, default=0.5, show_default=True,
              help="Whitening position for the risk weight.")
@STORAGE_OPTION
def session_start(model_file, mu0, theta, rho, beta, delta, theta_lambda, storage):
    store = ModelStore(storage)
    handle = store.ingest(_load_document(model_file))
    engine = SessionEngine(store, store.root)
    state = engine.create(
        handle, mu0, positioned=_positions_option(theta, rho, beta, delta), theta_lambda=theta_lambda
    )
    _emit(state.to_dict())


@session_group.command("step")
@click.argument("session_id")
@click.option("--risk-weight", type=str, default=None, help="Risk weight interval 'lower,upper'.")
@click.option("--theta", type=float, default=None)
@click.option("--rho", type=float, default=None)
@click.option("--beta", type=float, default=None)
@click.option("--delta", type=float, default=None)
@STORAGE_OPTION
def session_step(session_id, risk_weight, theta, rho, beta, delta, storage):
    store = ModelStore(storage)
    engine = SessionEngine(store, store.root)
    positioned = None
    if theta is not None or rho is not None:
        positioned = _positions_option(theta, rho, beta, delta)
    weight = _parse_pair(risk_weight) if risk_weight else None
    state = engine.step(session_id, risk_weight=weight, positioned=positioned)
    _emit(state.to_dict())


@session_group.command("show")
@click.argument("session_id")
@STORAGE_OPTION
def session_show(session_id, storage):
    store = ModelStore(storage)
    engine = SessionEngine(store, store.root)
    _emit(engine.get(session_id).to_dict())


@session_group.command("abandon")
@click.argument("session_id")
@STORAGE_OPTION
def session_abandon(session_id, storage):
    store = ModelStore(storage)
    engine = SessionEngine(store, store.root)
    _emit(engine.abandon(session_id).to_dict())


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@STORAGE_OPTION
def serve_cmd(host, port, storage):
    """Run the HTTP API."""
    import uvicorn

    from .api import create_app

    store = ModelStore(storage)
    app = create_app(store, SessionEngine(store, store.root))
    uvicorn.run(app, host=host, port=port)


def entry() -> None:
    try:
        main(standalone_mode=True)
    except GreyOptError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    entry()
