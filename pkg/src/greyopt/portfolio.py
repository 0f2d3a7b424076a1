"""Assets-investment planning under grey rates.

A portfolio splits a fixed budget across a riskless bank deposit and n
risky assets, each carrying grey profit, risk and transaction-cost rates
plus a purchase floor for the fee base.  Two objectives result: maximize
net profit, minimize the largest single-asset risk exposure.  The module
linearizes the risk objective through an auxiliary level variable, folds
both objectives together with a whitened risk weight, sweeps an
epsilon-constraint to trace the profit/risk frontier, and picks the
compromise point nearest the ideal.

Allocations are fractions of the total budget; profit and risk are
reported in money units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Sequence

from .errors import (
    EmptyFrontier,
    IndexOutOfRange,
    InvariantViolation,
    PositionOutOfRange,
    RiskWeightOutOfRange,
)
from .grey import GreyNumber, Real, whiten
from .lp import LpProblem, solve_lp
from .positioned import GreyLinearProgram, theta_solve


@dataclass(frozen=True)
class Asset:
    profit_rate: GreyNumber
    risk_rate: GreyNumber
    transaction_rate: GreyNumber
    purchase_floor: GreyNumber
    name: str = ""


@dataclass(frozen=True)
class PortfolioSpec:
    """Budget, bank rate and the risky-asset table.

    Index 0 always denotes the bank deposit, which has zero risk and
    transaction rates by construction; risky assets are indexed 1..n.
    """

    total_funds: float
    bank_rate: GreyNumber
    assets: tuple[Asset, ...]

    def __post_init__(self) -> None:
        if not (self.total_funds > 0):
            raise InvariantViolation(f"total funds must be positive, got {self.total_funds}")
        for k, asset in enumerate(self.assets):
            for rate in (asset.risk_rate, asset.transaction_rate, asset.purchase_floor):
                if rate.lower < 0:
                    raise InvariantViolation(f"asset {k + 1} has a negative rate bound {rate}")

    @classmethod
    def build(cls, total_funds: Real, bank_rate, assets) -> "PortfolioSpec":
        as_grey = lambda g: g if isinstance(g, GreyNumber) else GreyNumber.parse(g)
        rows = tuple(
            Asset(
                profit_rate=as_grey(a["profit_rate"]),
                risk_rate=as_grey(a["risk_rate"]),
                transaction_rate=as_grey(a["transaction_rate"]),
                purchase_floor=as_grey(a.get("purchase_floor", [0, 0])),
                name=str(a.get("name", "")),
            )
            for a in assets
        )
        return cls(float(total_funds), as_grey(bank_rate), rows)

    @property
    def n(self) -> int:
        return len(self.assets)

    def profit_rates(self) -> list[GreyNumber]:
        return [self.bank_rate] + [a.profit_rate for a in self.assets]

    def risk_rates(self) -> list[GreyNumber]:
        return [GreyNumber(0, 0)] + [a.risk_rate for a in self.assets]

    def transaction_rates(self) -> list[GreyNumber]:
        return [GreyNumber(0, 0)] + [a.transaction_rate for a in self.assets]

    def purchase_floors(self) -> list[GreyNumber]:
        return [GreyNumber(0, 0)] + [a.purchase_floor for a in self.assets]


def transaction_cost(spec: PortfolioSpec, i: int, x_i: Real, theta: float) -> float:
    """Fee for position i: rate times max(invested money, whitened floor).

    Zero positions never pay a fee; the floor only sets the fee base, not a
    minimum position.
    """
    if not (0 <= i <= spec.n):
        raise IndexOutOfRange(f"asset index {i} outside 0..{spec.n}")
    if x_i < 0:
        raise InvariantViolation(f"allocation must be nonnegative, got {x_i}")
    if x_i == 0:
        return 0.0
    rate = float(whiten(spec.transaction_rates()[i], theta))
    floor = float(whiten(spec.purchase_floors()[i], theta))
    return rate * max(spec.total_funds * float(x_i), floor)


@dataclass(frozen=True)
class BiObjectiveModel:
    """Profit objective, minimax risk objective and the budget identity.

    The risk objective is not linear (it is the max over per-asset
    exposures); downstream solvers linearize it through a level variable.
    The budget row is the proportional-fee reading of the cash balance.
    """

    profit_coefficients: tuple[GreyNumber, ...]  # per allocation, money units
    profit_offset: float                          # subtract the budget itself
    risk_coefficients: tuple[GreyNumber, ...]     # per allocation, money units, minimax
    budget_coefficients: tuple[GreyNumber, ...]   # sums to 1 with the fee markup


def build_biobjective(spec: PortfolioSpec) -> BiObjectiveModel:
    money = spec.total_funds
    profit = tuple(
        GreyNumber((r.lower + 1) * money, (r.upper + 1) * money) for r in spec.profit_rates()
    )
    risk = tuple(g.scaled(money) for g in spec.risk_rates())
    budget = tuple(
        GreyNumber(1 + p.lower, 1 + p.upper) for p in spec.transaction_rates()
    )
    return BiObjectiveModel(
        profit_coefficients=profit,
        profit_offset=-money,
        risk_coefficients=risk,
        budget_coefficients=budget,
    )


@dataclass(frozen=True)
class ScalarizedModel:
    """Risk-weighted single-objective grey program over (x_0..x_n, level).

    The level variable carries the largest per-asset risk exposure as a
    fraction of the budget; the objective trades normalized profit against
    it with the whitened risk weight.
    """

    risk_weight: GreyNumber
    theta_lambda: float
    program: GreyLinearProgram

    @property
    def objective_offset(self) -> float:
        """Constant dropped from the program's objective (the -1 budget term)."""
        lam = float(whiten(self.risk_weight, self.theta_lambda))
        return -(1 - lam)


def scalarize(
    spec: PortfolioSpec,
    risk_weight: GreyNumber,
    theta_lambda: float = 0.5,
    purchase_cap: bool = False,
) -> ScalarizedModel:
    """Fold profit and risk into one grey program with a whitened weight.

    Variables are the n+1 allocation fractions plus the risk level; rows are
    the budget identity, one risk-link row per asset, and (optionally) a cap
    row per risky asset when the purchase bound is read as a ceiling.
    """
    if not (0 <= risk_weight.lower and risk_weight.upper <= 1):
        raise RiskWeightOutOfRange(f"risk weight {risk_weight} not within [0, 1]")
    if not (0 <= theta_lambda <= 1):
        raise PositionOutOfRange(f"whitening position {theta_lambda} outside [0, 1]")
    lam = float(whiten(risk_weight, theta_lambda))
    model = build_biobjective(spec)
    money = spec.total_funds
    k = spec.n + 2  # allocations plus the level variable

    price = [
        GreyNumber((1 - lam) * (r.lower + 1), (1 - lam) * (r.upper + 1))
        for r in spec.profit_rates()
    ]
    price.append(GreyNumber(-lam, -lam))

    consumption: list[list[GreyNumber]] = []
    resources: list[GreyNumber] = []
    relations: list[str] = []

    budget_row = [model.budget_coefficients[j] for j in range(spec.n + 1)]
    budget_row.append(GreyNumber(0, 0))
    consumption.append(budget_row)
    resources.append(GreyNumber(1, 1))
    relations.append("=")

    for i, q in enumerate(spec.risk_rates()):
        row = [GreyNumber(0, 0)] * k
        row[i] = q
        row[-1] = GreyNumber(-1, -1)
        consumption.append(row)
        resources.append(GreyNumber(0, 0))
        relations.append("<=")

    if purchase_cap:
        for i, u in enumerate(spec.purchase_floors()):
            if i == 0:
                continue
            row = [GreyNumber(0, 0)] * k
            row[i] = GreyNumber(1, 1)
            consumption.append(row)
            resources.append(GreyNumber(u.lower / money, u.upper / money))
            relations.append("<=")

    program = GreyLinearProgram(
        sense="maximize",
        price=tuple(price),
        consumption=tuple(tuple(row) for row in consumption),
        resources=tuple(resources),
        relations=tuple(relations),  # type: ignore[arg-type]
    )
    return ScalarizedModel(risk_weight=risk_weight, theta_lambda=theta_lambda, program=program)


@dataclass(frozen=True)
class AllocationResult:
    allocation: tuple[float, ...]
    profit: float
    risk: float
    objective_value: float       # scalarized, normalized units, offset included
    point: tuple[float, ...]     # raw LP point including the level variable


def _evaluate_allocation(spec: PortfolioSpec, theta: float, allocation: Sequence[float]):
    money = spec.total_funds
    rates = [float(whiten(r, theta)) for r in spec.profit_rates()]
    risks = [float(whiten(q, theta)) for q in spec.risk_rates()]
    profit = sum((r + 1) * x for r, x in zip(rates, allocation)) * money - money
    risk = max(q * x for q, x in zip(risks, allocation)) * money
    return float(profit), float(risk)


def solve_scalarized(
    spec: PortfolioSpec,
    risk_weight: GreyNumber,
    theta_lambda: float = 0.5,
    theta: float = 0.5,
    mode: Literal["proportional", "exact"] = "proportional",
) -> AllocationResult:
    """Solve the risk-weighted program at the theta-positioned whitening.

    Proportional mode treats fees as proportional to the invested money (the
    linear reading of the budget).  Exact mode honors the purchase floors by
    enumerating which risky assets are active and forcing each active
    position up to its floor, then keeps the best subset.
    """
    if mode == "proportional":
        scal = scalarize(spec, risk_weight, theta_lambda)
        sol = theta_solve(scal.program, theta)
        if not sol.is_optimal:
            raise InvariantViolation(f"scalarized program is {sol.status}")
        allocation = sol.point[: spec.n + 1]
        profit, risk = _evaluate_allocation(spec, theta, allocation)
        return AllocationResult(
            allocation=tuple(allocation),
            profit=profit,
            risk=risk,
            objective_value=float(sol.value) + scal.objective_offset,
            point=sol.point,
        )
    if mode != "exact":
        raise InvariantViolation(f"unknown mode {mode!r}")
    if spec.n > 12:
        raise InvariantViolation("exact mode enumerates asset subsets; limited to 12 assets")

    lam = float(whiten(risk_weight, theta_lambda))
    rates = [float(whiten(r, theta)) for r in spec.profit_rates()]
    risks = [float(whiten(q, theta)) for q in spec.risk_rates()]
    fees = [float(whiten(p, theta)) for p in spec.transaction_rates()]
    floors = [float(whiten(u, theta)) for u in spec.purchase_floors()]
    money = spec.total_funds
    k = spec.n + 2

    best: AllocationResult | None = None
    risky = range(1, spec.n + 1)
    for size in range(spec.n + 1):
        for subset in combinations(risky, size):
            active = set(subset)
            objective = [0.0] * k
            objective[0] = (1 - lam) * (rates[0] + 1)
            for i in active:
                objective[i] = (1 - lam) * (rates[i] + 1)
            objective[-1] = -lam

            rows = []
            budget = [0.0] * k
            budget[0] = 1 + fees[0]
            for i in active:
                budget[i] = 1 + fees[i]
            rows.append((budget, "=", 1.0))
            for i in [0, *active]:
                row = [0.0] * k
                row[i] = risks[i]
                row[-1] = -1.0
                rows.append((row, "<=", 0.0))
            for i in active:
                if floors[i] > 0:
                    row = [0.0] * k
                    row[i] = 1.0
                    rows.append((row, ">=", floors[i] / money))
            for i in risky:
                if i not in active:
                    row = [0.0] * k
                    row[i] = 1.0
                    rows.append((row, "=", 0.0))

            sol = solve_lp(LpProblem.build("maximize", objective, rows))
            if not sol.is_optimal:
                continue
            value = float(sol.value) - (1 - lam)
            if best is None or value > best.objective_value + 1e-12:
                allocation = sol.point[: spec.n + 1]
                profit, risk = _evaluate_allocation(spec, theta, allocation)
                best = AllocationResult(
                    allocation=tuple(allocation),
                    profit=profit,
                    risk=risk,
                    objective_value=value,
                    point=sol.point,
                )
    if best is None:
        raise InvariantViolation("no active-asset subset is feasible")
    return best


@dataclass(frozen=True)
class FrontierPoint:
    profit: float
    risk: float
    allocation: tuple[float, ...]
    epsilon: float
    tradeoff: float | None = None


def pareto_frontier(
    spec: PortfolioSpec, theta: float, epsilons: Sequence[Real]
) -> list[FrontierPoint]:
    """Sweep the risk budget and keep the nondominated profit/risk points.

    Each epsilon caps every asset's risk exposure in money units; the
    trade-off attached to a point is the profit change per unit of risk
    against the previous frontier point.
    """
    eps = [float(e) for e in epsilons]
    if not eps:
        raise EmptyFrontier("no epsilon values supplied")
    if any(e < 0 for e in eps) or any(a > b for a, b in zip(eps, eps[1:])):
        raise InvariantViolation("epsilons must be nonnegative and ascending")

    money = spec.total_funds
    rates = [float(whiten(r, theta)) for r in spec.profit_rates()]
    risks = [float(whiten(q, theta)) for q in spec.risk_rates()]
    fees = [float(whiten(p, theta)) for p in spec.transaction_rates()]
    n_vars = spec.n + 1

    raw: list[FrontierPoint] = []
    for e2 in eps:
        rows = [([1 + f for f in fees], "=", 1.0)]
        for i in range(n_vars):
            if risks[i] > 0:
                row = [0.0] * n_vars
                row[i] = risks[i]
                rows.append((row, "<=", e2 / money))
        sol = solve_lp(LpProblem.build("maximize", [r + 1 for r in rates], rows))
        if not sol.is_optimal:
            continue
        profit, risk = _evaluate_allocation(spec, theta, sol.point)
        raw.append(FrontierPoint(profit=profit, risk=risk, allocation=sol.point, epsilon=e2))
    if not raw:
        raise EmptyFrontier("every epsilon subproblem was infeasible")

    kept: list[FrontierPoint] = []
    for p in raw:
        dominated = False
        for q in raw:
            if q is p:
                continue
            if q.profit >= p.profit - 1e-9 and q.risk <= p.risk + 1e-9:
                if q.profit > p.profit + 1e-9 or q.risk < p.risk - 1e-9:
                    dominated = True
                    break
        if not dominated and not any(
            abs(k.profit - p.profit) <= 1e-9 and abs(k.risk - p.risk) <= 1e-9 for k in kept
        ):
            kept.append(p)

    out: list[FrontierPoint] = []
    for idx, p in enumerate(kept):
        tradeoff = None
        if idx > 0:
            d_risk = p.risk - kept[idx - 1].risk
            if abs(d_risk) > 1e-12:
                tradeoff = -(p.profit - kept[idx - 1].profit) / d_risk
        out.append(
            FrontierPoint(
                profit=p.profit,
                risk=p.risk,
                allocation=p.allocation,
                epsilon=p.epsilon,
                tradeoff=tradeoff,
            )
        )
    return out


def compromise_solution(frontier: Sequence[FrontierPoint]) -> FrontierPoint:
    """Frontier point nearest the ideal after min-max normalization.

    The ideal pairs the best profit with the best risk over the frontier;
    both coordinates are rescaled to [0, 1] so neither unit dominates.
    Distance ties break toward the lower-risk point.
    """
    if not frontier:
        raise EmptyFrontier("cannot pick a compromise from an empty frontier")
    best_profit = max(p.profit for p in frontier)
    worst_profit = min(p.profit for p in frontier)
    best_risk = min(p.risk for p in frontier)
    worst_risk = max(p.risk for p in frontier)
    profit_span = best_profit - worst_profit
    risk_span = worst_risk - best_risk

    chosen = None
    chosen_dist = math.inf
    for p in frontier:
        dp = (best_profit - p.profit) / profit_span if profit_span > 0 else 0.0
        dr = (p.risk - best_risk) / risk_span if risk_span > 0 else 0.0
        dist = math.hypot(dp, dr)
        if (
            chosen is None
            or dist < chosen_dist - 1e-12
            or (abs(dist - chosen_dist) <= 1e-12 and p.risk < chosen.risk - 1e-12)
        ):
            chosen = p
            chosen_dist = dist
    return chosen
