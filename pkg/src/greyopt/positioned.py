"""Grey-parameter linear programs and positioned (whitened) solving.

A grey linear program carries interval prices, consumption coefficients and
resources.  Whitening each family at its own position in [0, 1] produces an
ordinary LP: position 1 on prices/resources with 0 on consumption is the
most optimistic ("ideal") reading for a maximize program, the reverse the
most pessimistic ("critical") one, and a single shared position theta gives
the theta-positioned model (theta = 0.5 is mean whitening).

The pleased degree locates a positioned optimum between the critical and
ideal optima; it is only defined for maximize-sense programs whose three
optimal values are strictly positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegenerateAssessment,
    DimensionMismatch,
    InvariantViolation,
    PositionOutOfRange,
)
from .grey import GreyNumber, Real, whiten
from .lp import LpProblem, LpSolution, Relation, RELATIONS, Sense, solve_lp


@dataclass(frozen=True)
class GreyLinearProgram:
    """LP whose price vector, consumption matrix and resource vector are grey."""

    sense: Sense
    price: tuple[GreyNumber, ...]
    consumption: tuple[tuple[GreyNumber, ...], ...]
    resources: tuple[GreyNumber, ...]
    relations: tuple[Relation, ...]

    def __post_init__(self) -> None:
        if self.sense not in ("maximize", "minimize"):
            raise InvariantViolation(f"unknown sense {self.sense!r}")
        n = len(self.price)
        m = len(self.resources)
        if len(self.consumption) != m or len(self.relations) != m:
            raise InvariantViolation(
                f"{m} resources but {len(self.consumption)} rows / {len(self.relations)} relations"
            )
        for i, row in enumerate(self.consumption):
            if len(row) != n:
                raise InvariantViolation(f"consumption row {i} has {len(row)} entries, expected {n}")
        for rel in self.relations:
            if rel not in RELATIONS:
                raise InvariantViolation(f"unknown relation {rel!r}")

    @classmethod
    def build(
        cls,
        sense: Sense,
        price: Sequence[Sequence[Real] | GreyNumber],
        consumption: Sequence[Sequence[Sequence[Real] | GreyNumber]],
        resources: Sequence[Sequence[Real] | GreyNumber],
        relations: Sequence[str],
    ) -> "GreyLinearProgram":
        as_grey = lambda g: g if isinstance(g, GreyNumber) else GreyNumber.parse(g)
        return cls(
            sense=sense,
            price=tuple(as_grey(g) for g in price),
            consumption=tuple(tuple(as_grey(g) for g in row) for row in consumption),
            resources=tuple(as_grey(g) for g in resources),
            relations=tuple(relations),  # type: ignore[arg-type]
        )

    @property
    def variable_count(self) -> int:
        return len(self.price)

    @property
    def row_count(self) -> int:
        return len(self.resources)


@dataclass(frozen=True)
class PositionedCoefficients:
    """Whitening positions: rho per price entry, beta per resource, delta per cell."""

    rho: tuple[float, ...]
    beta: tuple[float, ...]
    delta: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        values = list(self.rho) + list(self.beta) + [d for row in self.delta for d in row]
        for v in values:
            if not (0 <= v <= 1):
                raise PositionOutOfRange(f"positioned coefficient {v} outside [0, 1]")

    @classmethod
    def uniform(
        cls, rho: float, beta: float, delta: float, program: GreyLinearProgram
    ) -> "PositionedCoefficients":
        """Scalar (rho, beta, delta) broadcast to the program's shape."""
        n, m = program.variable_count, program.row_count
        return cls(
            rho=(float(rho),) * n,
            beta=(float(beta),) * m,
            delta=((float(delta),) * n,) * m,
        )

    @classmethod
    def theta(cls, theta: float, program: GreyLinearProgram) -> "PositionedCoefficients":
        """All positions equal: the theta-positioned model."""
        return cls.uniform(theta, theta, theta, program)

    @classmethod
    def ideal(cls, program: GreyLinearProgram) -> "PositionedCoefficients":
        return cls.uniform(1, 1, 0, program)

    @classmethod
    def critical(cls, program: GreyLinearProgram) -> "PositionedCoefficients":
        return cls.uniform(0, 0, 1, program)


@dataclass(frozen=True)
class PleasedAssessment:
    ideal_value: float
    critical_value: float
    positioned_value: float
    degree: float
    target_floor: float
    pleased: bool


def whiten_program(g: GreyLinearProgram, pc: PositionedCoefficients) -> LpProblem:
    """Replace every grey entry by its positioned white value."""
    n, m = g.variable_count, g.row_count
    if len(pc.rho) != n or len(pc.beta) != m or len(pc.delta) != m or any(
        len(row) != n for row in pc.delta
    ):
        raise DimensionMismatch(
            f"positions shaped ({len(pc.rho)}, {len(pc.beta)}, {len(pc.delta)}x?) "
            f"do not match program ({n} vars, {m} rows)"
        )
    objective = [float(whiten(gj, r)) for gj, r in zip(g.price, pc.rho)]
    constraints = []
    for i in range(m):
        row = [float(whiten(g.consumption[i][j], pc.delta[i][j])) for j in range(n)]
        constraints.append((row, g.relations[i], float(whiten(g.resources[i], pc.beta[i]))))
    return LpProblem.build(g.sense, objective, constraints)


def solve_positioned(g: GreyLinearProgram, pc: PositionedCoefficients) -> LpSolution:
    return solve_lp(whiten_program(g, pc))


def theta_solve(g: GreyLinearProgram, theta: float) -> LpSolution:
    if not (0 <= theta <= 1):
        raise PositionOutOfRange(f"theta {theta} outside [0, 1]")
    return solve_positioned(g, PositionedCoefficients.theta(theta, g))


def ideal_solve(g: GreyLinearProgram) -> LpSolution:
    """Most optimistic whitening: prices and resources up, consumption down."""
    return solve_positioned(g, PositionedCoefficients.ideal(g))


def critical_solve(g: GreyLinearProgram) -> LpSolution:
    """Most pessimistic whitening: prices and resources down, consumption up."""
    return solve_positioned(g, PositionedCoefficients.critical(g))


def pleased_degree(critical: float, positioned: float, ideal: float) -> float:
    """Locate a positioned optimum between the critical and ideal optima.

    Strictly increasing in the positioned value; lies in [0, 1] whenever
    0 < critical <= positioned <= ideal.
    """
    if critical <= 0 or positioned <= 0 or ideal <= 0:
        raise DegenerateAssessment(
            f"pleased degree undefined for non-positive optima "
            f"({critical}, {positioned}, {ideal}); {DegenerateAssessment.advisory}"
        )
    return 0.5 * (1 - critical / positioned) + 0.5 * (positioned / ideal)


def assess_pleased(
    g: GreyLinearProgram, pc: PositionedCoefficients, mu0: float
) -> PleasedAssessment:
    """Solve the ideal, critical and positioned models and grade the latter.

    The positioned optimum is "pleased" when its degree reaches the target
    floor mu0 (the acceptance window is [mu0, 1]).
    """
    if not (0 <= mu0 <= 1):
        raise PositionOutOfRange(f"target floor {mu0} outside [0, 1]")
    if g.sense != "maximize":
        raise DegenerateAssessment(
            "pleased-degree assessment is defined for maximize-sense programs only"
        )
    solutions = {
        "ideal": ideal_solve(g),
        "critical": critical_solve(g),
        "positioned": solve_positioned(g, pc),
    }
    for name, sol in solutions.items():
        if not sol.is_optimal:
            raise DegenerateAssessment(
                f"{name} model is {sol.status}; {DegenerateAssessment.advisory}"
            )
    degree = pleased_degree(
        solutions["critical"].value, solutions["positioned"].value, solutions["ideal"].value
    )
    return PleasedAssessment(
        ideal_value=solutions["ideal"].value,
        critical_value=solutions["critical"].value,
        positioned_value=solutions["positioned"].value,
        degree=degree,
        target_floor=float(mu0),
        pleased=degree >= mu0,
    )
