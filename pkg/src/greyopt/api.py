"""HTTP facade over the store, solvers and sessions.

Endpoints are stateless functions of (handle, parameters) except the
session routes, which serialize steps per session.  Grey numbers travel as
[lower, upper] arrays; every numeric response field carries at most 12
significant digits.
"""

from __future__ import annotations

import os

from fastapi import Body, FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict

from .documents import round_floats
from .errors import (
    DegenerateAssessment,
    GreyOptError,
    ParameterError,
    SessionClosed,
    UnknownHandle,
)
from .positioned import PositionedCoefficients, solve_positioned
from .reports import run_report
from .session import SessionEngine, positions_from
from .store import ModelStore


class SolveBody(BaseModel):
    theta: float | None = None
    rho: float | list[float] | None = None
    beta: float | list[float] | None = None
    delta: float | list[list[float]] | None = None


class Algorithm1Body(BaseModel):
    theta: float = 0.5
    l: int | None = None
    points: list[list[float]] | None = None
    preferences: list[float] | None = None
    weights: list[float] | None = None


class Algorithm2Body(BaseModel):
    theta: float = 0.5
    l: int | None = None
    points: list[list[float]] | None = None
    preferences: list[float] | None = None
    weights: list[float] | None = None
    reproduce_paper_rounding: bool = False


class FrontierBody(BaseModel):
    theta: float = 0.5
    epsilons: list[float]


class SessionCreateBody(BaseModel):
    model_config = ConfigDict(protected_namespaces=())

    model: str
    target_floor: float
    positioned: dict | None = None
    theta_lambda: float = 0.5


class StepBody(BaseModel):
    risk_weight: list[float] | None = None
    positioned: dict | None = None


def _positions(body: SolveBody, program) -> PositionedCoefficients:
    if body.theta is not None:
        return PositionedCoefficients.theta(body.theta, program)
    if isinstance(body.rho, list) or isinstance(body.beta, list) or isinstance(body.delta, list):
        n, m = program.variable_count, program.row_count
        rho = body.rho if isinstance(body.rho, list) else [body.rho or 0.5] * n
        beta = body.beta if isinstance(body.beta, list) else [body.beta or 0.5] * m
        delta = body.delta if isinstance(body.delta, list) else [[body.delta or 0.5] * n] * m
        return PositionedCoefficients(
            rho=tuple(float(r) for r in rho),
            beta=tuple(float(b) for b in beta),
            delta=tuple(tuple(float(d) for d in row) for row in delta),
        )
    if body.rho is None or body.beta is None or body.delta is None:
        raise ParameterError("solve needs either theta or all of rho, beta, delta")
    return positions_from({"rho": body.rho, "beta": body.beta, "delta": body.delta}, program)


def create_app(store: ModelStore | None = None, engine: SessionEngine | None = None) -> FastAPI:
    if store is None:
        store = ModelStore(os.environ.get("GREYOPT_STORAGE"))
    if engine is None:
        engine = SessionEngine(store, store.root)

    app = FastAPI(title="greyopt planner", version="0.1.0")

    @app.exception_handler(GreyOptError)
    async def _grey_errors(_, exc: GreyOptError):
        if isinstance(exc, UnknownHandle):
            return JSONResponse(status_code=404, content={"error": str(exc)})
        if isinstance(exc, SessionClosed):
            return JSONResponse(status_code=409, content={"error": str(exc)})
        if isinstance(exc, DegenerateAssessment):
            return JSONResponse(
                status_code=422,
                content={"error": str(exc), "advisory": DegenerateAssessment.advisory},
            )
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.post("/models")
    def ingest(document: dict = Body(...)):
        handle = store.ingest(document)
        return {"handle": handle, "kind": document.get("kind")}

    @app.get("/models/{handle}")
    def get_model(handle: str):
        return store.document(handle)

    @app.post("/models/{handle}/solve")
    def solve(handle: str, body: SolveBody):
        program = store.model(handle)
        from .positioned import GreyLinearProgram

        if not isinstance(program, GreyLinearProgram):
            raise ParameterError("solve applies to grey_program models")
        solution = solve_positioned(program, _positions(body, program))
        return round_floats(
            {
                "status": solution.status,
                "point": list(solution.point) if solution.point else None,
                "value": solution.value,
                "tight_constraints": sorted(solution.tight_constraints),
            }
        )

    @app.post("/models/{handle}/algorithm1")
    def algorithm1(handle: str, body: Algorithm1Body):
        return run_report(store, handle, "algorithm1", body.model_dump(exclude_none=True))

    @app.post("/models/{handle}/algorithm2")
    def algorithm2(handle: str, body: Algorithm2Body):
        return run_report(store, handle, "algorithm2", body.model_dump(exclude_none=True))

    @app.post("/portfolios/{handle}/frontier")
    def frontier(handle: str, body: FrontierBody):
        return run_report(store, handle, "frontier", body.model_dump())

    @app.post("/sessions")
    def create_session(body: SessionCreateBody):
        state = engine.create(
            body.model,
            body.target_floor,
            positioned=body.positioned,
            theta_lambda=body.theta_lambda,
        )
        return round_floats(state.to_dict())

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return round_floats(engine.get(session_id).to_dict())

    @app.post("/sessions/{session_id}/step")
    def step_session(session_id: str, body: StepBody):
        weight = tuple(body.risk_weight) if body.risk_weight else None
        state = engine.step(session_id, risk_weight=weight, positioned=body.positioned)
        return round_floats(state.to_dict())

    @app.post("/sessions/{session_id}/abandon")
    def abandon_session(session_id: str):
        return round_floats(engine.abandon(session_id).to_dict())

    return app
