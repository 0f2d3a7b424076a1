"""Interactive analyst sessions: adjust the risk weight, inspect the degree.

A session pins a stored model, a target floor mu0 and whitening positions.
Each step scalarizes (for portfolios) with the current risk weight, solves
the ideal/critical/positioned trio, grades the positioned optimum and
appends the outcome to an append-only history.  The session closes as
"pleased" once the degree reaches the floor; otherwise the analyst feeds a
new risk weight (or new positions) and steps again.

Persistence stores only the step inputs (a journal); reloading replays them
through the same pure solvers, so a restored session carries bit-identical
assessments.  Steps within one session are serialized by a lock; distinct
sessions are independent.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from .documents import sig12
from .errors import ParameterError, SessionClosed, UnknownHandle
from .grey import GreyNumber
from .multiobjective import GmopModel
from .portfolio import PortfolioSpec, scalarize
from .positioned import (
    GreyLinearProgram,
    PleasedAssessment,
    PositionedCoefficients,
    assess_pleased,
    solve_positioned,
)
from .store import ModelStore

Status = Literal["awaiting_lambda", "pleased", "abandoned"]


def positions_from(spec: dict, program: GreyLinearProgram) -> PositionedCoefficients:
    """Build whitening positions from a {"theta": t} or {"rho","beta","delta"} dict."""
    if "theta" in spec:
        return PositionedCoefficients.theta(float(spec["theta"]), program)
    try:
        return PositionedCoefficients.uniform(
            float(spec["rho"]), float(spec["beta"]), float(spec["delta"]), program
        )
    except KeyError as exc:
        raise ParameterError(
            "positions need either theta or all of rho, beta, delta"
        ) from exc


@dataclass(frozen=True)
class StepRecord:
    risk_weight: tuple[float, float] | None
    positioned: dict
    assessment: PleasedAssessment
    allocation: tuple[float, ...]
    risk_level: float | None

    def to_dict(self) -> dict:
        return {
            "risk_weight": list(self.risk_weight) if self.risk_weight else None,
            "positioned": self.positioned,
            "assessment": {
                "ideal_value": self.assessment.ideal_value,
                "critical_value": self.assessment.critical_value,
                "positioned_value": self.assessment.positioned_value,
                "degree": self.assessment.degree,
                "target_floor": self.assessment.target_floor,
                "pleased": self.assessment.pleased,
            },
            "allocation": list(self.allocation),
            "risk_level": self.risk_level,
        }


@dataclass(frozen=True)
class SessionState:
    session_id: str
    model_handle: str
    kind: Literal["portfolio", "grey_program"]
    target_floor: float
    positioned: dict
    theta_lambda: float
    risk_weight: tuple[float, float] | None
    history: tuple[StepRecord, ...] = ()
    status: Status = "awaiting_lambda"

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "model": self.model_handle,
            "kind": self.kind,
            "target_floor": self.target_floor,
            "positioned": self.positioned,
            "theta_lambda": self.theta_lambda,
            "risk_weight": list(self.risk_weight) if self.risk_weight else None,
            "status": self.status,
            "history": [record.to_dict() for record in self.history],
        }


class SessionEngine:
    def __init__(self, store: ModelStore, root: str | Path | None = None):
        self.store = store
        self.root = Path(root) if root is not None else None
        self._sessions: dict[str, SessionState] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        if self.root is not None:
            (self.root / "sessions").mkdir(parents=True, exist_ok=True)
            for path in sorted((self.root / "sessions").glob("*.jsonl")):
                self._replay(path)

    def _lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    # -- lifecycle ---------------------------------------------------------

    def create(
        self,
        model_handle: str,
        target_floor: float,
        positioned: dict | None = None,
        theta_lambda: float = 0.5,
    ) -> SessionState:
        model = self.store.model(model_handle)
        if isinstance(model, PortfolioSpec):
            kind = "portfolio"
        elif isinstance(model, GreyLinearProgram):
            kind = "grey_program"
        else:
            raise ParameterError("sessions drive portfolio or grey_program models")
        if not (0 <= target_floor <= 1):
            raise ParameterError(f"target floor {target_floor} outside [0, 1]")
        state = SessionState(
            session_id=uuid.uuid4().hex[:12],
            model_handle=model_handle,
            kind=kind,
            target_floor=float(target_floor),
            positioned=positioned or {"theta": 0.5},
            theta_lambda=float(theta_lambda),
            risk_weight=None,
        )
        self._sessions[state.session_id] = state
        self._journal(
            state.session_id,
            {
                "type": "session",
                "model": model_handle,
                "target_floor": state.target_floor,
                "positioned": state.positioned,
                "theta_lambda": state.theta_lambda,
            },
        )
        return state

    def get(self, session_id: str) -> SessionState:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownHandle(session_id) from None

    def abandon(self, session_id: str) -> SessionState:
        with self._lock(session_id):
            state = self.get(session_id)
            closed = SessionState(**{**state.__dict__, "status": "abandoned"})
            self._sessions[session_id] = closed
            self._journal(session_id, {"type": "abandon"})
            return closed

    # -- stepping ----------------------------------------------------------

    def step(
        self,
        session_id: str,
        risk_weight: tuple[float, float] | None = None,
        positioned: dict | None = None,
    ) -> SessionState:
        with self._lock(session_id):
            state = self._apply_step(self.get(session_id), risk_weight, positioned)
            self._sessions[session_id] = state
            self._journal(
                session_id,
                {
                    "type": "step",
                    "risk_weight": list(risk_weight) if risk_weight else None,
                    "positioned": positioned,
                },
            )
            return state

    def _apply_step(
        self,
        state: SessionState,
        risk_weight: tuple[float, float] | None,
        positioned: dict | None,
    ) -> SessionState:
        if state.status != "awaiting_lambda":
            raise SessionClosed(f"session {state.session_id} is {state.status}")
        if risk_weight is None and positioned is None:
            raise ParameterError("a step needs a new risk weight or new positions")
        weight = tuple(float(v) for v in risk_weight) if risk_weight else state.risk_weight
        positions = positioned if positioned is not None else state.positioned

        model = self.store.model(state.model_handle)
        risk_level: float | None = None
        if state.kind == "portfolio":
            if weight is None:
                raise ParameterError("portfolio sessions need a risk weight interval")
            program = scalarize(model, GreyNumber(*weight), state.theta_lambda).program
        else:
            program = model

        pc = positions_from(positions, program)
        assessment = assess_pleased(program, pc, state.target_floor)
        solution = solve_positioned(program, pc)
        point = solution.point
        if state.kind == "portfolio":
            allocation = point[: model.n + 1]
            risk_level = float(point[-1])
        else:
            allocation = point

        record = StepRecord(
            risk_weight=weight,
            positioned=positions,
            assessment=assessment,
            allocation=tuple(allocation),
            risk_level=risk_level,
        )
        return SessionState(
            session_id=state.session_id,
            model_handle=state.model_handle,
            kind=state.kind,
            target_floor=state.target_floor,
            positioned=positions,
            theta_lambda=state.theta_lambda,
            risk_weight=weight,
            history=state.history + (record,),
            status="pleased" if assessment.degree >= state.target_floor else "awaiting_lambda",
        )

    # -- persistence -------------------------------------------------------

    def _journal(self, session_id: str, entry: dict) -> None:
        if self.root is None:
            return
        path = self.root / "sessions" / f"{session_id}.jsonl"
        with path.open("a") as fh:
            fh.write(json.dumps(entry, sort_keys=True) + "\n")

    def _replay(self, path: Path) -> None:
        """Rebuild a session by re-running its journaled inputs."""
        lines = [json.loads(line) for line in path.read_text().splitlines() if line.strip()]
        if not lines or lines[0].get("type") != "session":
            return
        head = lines[0]
        state = SessionState(
            session_id=path.stem,
            model_handle=head["model"],
            kind="portfolio" if isinstance(self.store.model(head["model"]), PortfolioSpec) else "grey_program",
            target_floor=head["target_floor"],
            positioned=head["positioned"],
            theta_lambda=head["theta_lambda"],
            risk_weight=None,
        )
        for entry in lines[1:]:
            if entry["type"] == "step":
                weight = tuple(entry["risk_weight"]) if entry["risk_weight"] else None
                state = self._apply_step(state, weight, entry["positioned"])
            elif entry["type"] == "abandon":
                state = SessionState(**{**state.__dict__, "status": "abandoned"})
        self._sessions[state.session_id] = state
