"""Acceptance suite: one test per release criterion, each printing a verdict.

Every expected value here is either taken from the worked example after
verification or frozen from an independent oracle (vertex enumeration,
direct formula recomputation, grid search); tolerances are pinned in the
assertions.  Run with plain pytest; the verdict lines print even under
output capture.
"""

import time
from fractions import Fraction

import numpy as np
import pytest

from greyopt.grey import GreyNumber, whiten
from greyopt.lp import LpProblem, solve_lp
from greyopt.multiobjective import (
    combine_objectives,
    max_min_solve,
    objective_matrix,
    weigh_objectives,
    weighted_sum_solve,
)
from greyopt.portfolio import (
    compromise_solution,
    pareto_frontier,
    solve_scalarized,
)
from greyopt.positioned import (
    PositionedCoefficients,
    assess_pleased,
    critical_solve,
    ideal_solve,
    pleased_degree,
    solve_positioned,
    theta_solve,
)
from greyopt.session import SessionEngine
from greyopt.store import ModelStore

from .conftest import (
    EXAMPLE_POINTS,
    EXAMPLE_WEIGHTS,
    build_demo_portfolio,
    build_example_model,
    random_nonneg_lpgp,
    random_portfolio,
)
from .oracles import brute_force_lp, entropy_pipeline
from .test_service import load


def verdict(capsys, name: str, elapsed_ms: float | None = None) -> None:
    with capsys.disabled():
        timing = f" ({elapsed_ms:.2f} ms)" if elapsed_ms is not None else ""
        print(f"ACCEPTANCE PASS: {name}{timing}")


def timed(fn, repeats: int = 3):
    """Best-of-n wall time in milliseconds, after one warmup call."""
    fn()
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, (time.perf_counter() - start) * 1000)
    return result, best


TABLE = {
    (0, 0): (1.5, 6.5), (0, 1): (3, 13), (0, 2): (1.5, 12.5),
    (1, 0): (2.5, 7.5), (1, 1): (5, 15), (1, 2): (8.5, 19.5),
}


def test_interval_table_reproduction(capsys):
    """Objective intervals at the three sample points, exactly, in < 1 ms."""
    model = build_example_model()
    matrix, elapsed = timed(lambda: objective_matrix(model, EXAMPLE_POINTS))
    for (i, t), (lo, up) in TABLE.items():
        entry = matrix.entries[i][t]
        assert float(entry.lower) == lo and float(entry.upper) == up
    assert elapsed < 1.0, f"took {elapsed:.3f} ms"
    verdict(capsys, "interval table reproduced exactly", elapsed)


def test_entropy_weights(capsys):
    """Full normalization/deviation/entropy chain lands on (0.6, 0.4) rounded."""
    model = build_example_model()
    ws, elapsed = timed(lambda: weigh_objectives(model, 0.5, points=EXAMPLE_POINTS))
    assert abs(ws.weights[0] - 0.6) <= 0.02
    assert abs(ws.weights[1] - 0.4) <= 0.02
    # live oracle recomputation plus the frozen regression pin
    rows = [[(float(g.lower), float(g.upper)) for g in row] for row in ws.objective_matrix.entries]
    _, _, _, oracle = entropy_pipeline(rows, ["benefit", "benefit"])
    assert ws.weights == pytest.approx(oracle, abs=1e-12)
    assert ws.weights == pytest.approx(EXAMPLE_WEIGHTS, abs=1e-12)
    assert elapsed < 10.0, f"took {elapsed:.3f} ms"
    verdict(capsys, f"entropy weights {ws.weights[0]:.4f}/{ws.weights[1]:.4f}", elapsed)


def test_weighted_scalarization_end_to_end(capsys):
    """Exact combined coefficients; mean-whitened solve hits (6, 0)."""
    model = build_example_model()
    weights = [Fraction(3, 5), Fraction(2, 5)]
    combined = combine_objectives(model, weights)
    assert [float(g.lower) for g in combined.price] == [0.8, 0.3]
    assert [float(g.upper) for g in combined.price] == [2.8, 1.3]

    result, elapsed = timed(
        lambda: weighted_sum_solve(model, theta=0.5, points=EXAMPLE_POINTS, weights=weights)
    )
    assert result.point == pytest.approx((6, 0), abs=1e-9)
    assert result.objective_values[0] == pytest.approx(6, abs=1e-9)
    assert result.objective_values[1] == pytest.approx(18, abs=1e-9)
    assert elapsed < 10.0, f"took {elapsed:.3f} ms"
    verdict(capsys, "weighted scalarization: point (6, 0), values (6, 18)", elapsed)


def test_max_min_end_to_end(capsys):
    """Satisfaction solve: hand-rounded rows hit the reported optimum exactly."""
    model = build_example_model()
    rounded, elapsed = timed(
        lambda: max_min_solve(model, 0.5, [0.6, 0.4], reproduce_paper_rounding=True)
    )
    assert rounded.satisfaction == pytest.approx(1.0, abs=1e-9)
    assert rounded.point[0] == pytest.approx(34.2 / 7, abs=1e-9)
    assert rounded.point[1] == pytest.approx(11.6 / 7, abs=1e-9)
    assert rounded.objective_values == pytest.approx((8.2, 13), abs=1e-9)

    exact = max_min_solve(model, 0.5, [0.6, 0.4])
    status, best, _ = brute_force_lp(
        "maximize",
        [0, 0, 1],
        [
            ([1, 2, -1.8], ">=", 6.4),
            ([3, -1, -4.05], ">=", 9),
            ([3, 2, 0], "<=", 18),
            ([-1, 4, 0], "<=", 8),
            ([0, 0, 1], "<=", 1),
        ],
        3,
    )
    assert status == "optimal"
    assert exact.satisfaction == pytest.approx(best, abs=1e-9)
    assert exact.satisfaction == pytest.approx(1.0, abs=1e-9)
    x = exact.point
    assert 3 * x[0] + 2 * x[1] <= 18 + 1e-9 and -x[0] + 4 * x[1] <= 8 + 1e-9
    assert x[0] >= -1e-9 and x[1] >= -1e-9
    assert elapsed < 10.0, f"took {elapsed:.3f} ms"
    verdict(capsys, "max-min satisfaction: level 1 at (34.2/7, 11.6/7)", elapsed)


def test_lp_kernel_oracle_suite(capsys):
    """>= 500 feasible-bounded random LPs match brute force; statuses agree."""
    rng = np.random.default_rng(550_2024)
    start = time.perf_counter()
    optimal = 0
    infeasible = 0
    unbounded = 0
    attempts = 0
    while optimal < 500 and attempts < 2000:
        attempts += 1
        n = int(rng.integers(1, 5))
        m = int(rng.integers(1, 6))
        c = [float(v) for v in rng.uniform(-10, 10, size=n)]
        cons = []
        for _ in range(m):
            row = [float(v) for v in rng.uniform(-10, 10, size=n)]
            pick = rng.random()
            if pick < 0.62:
                rel, rhs = "<=", float(rng.uniform(0, 10))
            elif pick < 0.86:
                rel, rhs = ">=", float(rng.uniform(-10, 5))
            else:
                rel, rhs = "=", float(rng.uniform(0, 8))
            cons.append((row, rel, rhs))
        sense = "maximize" if rng.random() < 0.5 else "minimize"

        status, best, _ = brute_force_lp(sense, c, cons, n)
        sol = solve_lp(LpProblem.build(sense, c, cons))
        assert sol.status == status, (sense, c, cons)
        if status == "optimal":
            assert sol.value == pytest.approx(best, abs=1e-7), (sense, c, cons)
            optimal += 1
        elif status == "infeasible":
            infeasible += 1
        else:
            unbounded += 1
    elapsed = (time.perf_counter() - start) * 1000
    assert optimal >= 500, f"only {optimal} optimal instances in {attempts} attempts"
    assert infeasible > 0 and unbounded > 0, "status agreement not exercised"
    assert elapsed < 5000, f"took {elapsed:.0f} ms"
    verdict(
        capsys,
        f"LP kernel vs oracle: {optimal} optimal, {infeasible} infeasible, "
        f"{unbounded} unbounded agree",
        elapsed,
    )


def test_positioned_property_suite(capsys):
    """Sandwich, monotonicity and pleased-degree laws on 200 random programs."""
    rng = np.random.default_rng(77_2024)
    start = time.perf_counter()
    for _ in range(200):
        g = random_nonneg_lpgp(rng)
        low = critical_solve(g).value
        high = ideal_solve(g).value
        assert low > 0
        for theta in (0, 0.25, 0.5, 0.75, 1):
            v = theta_solve(g, theta).value
            assert low - 1e-7 <= v <= high + 1e-7

        grid = (0, 0.5, 1)
        rho_vals = [solve_positioned(g, PositionedCoefficients.uniform(r, 0.5, 0.5, g)).value for r in grid]
        beta_vals = [solve_positioned(g, PositionedCoefficients.uniform(0.5, b, 0.5, g)).value for b in grid]
        delta_vals = [solve_positioned(g, PositionedCoefficients.uniform(0.5, 0.5, d, g)).value for d in grid]
        assert rho_vals[0] <= rho_vals[1] + 1e-7 <= rho_vals[2] + 2e-7
        assert beta_vals[0] <= beta_vals[1] + 1e-7 <= beta_vals[2] + 2e-7
        assert delta_vals[0] >= delta_vals[1] - 1e-7 >= delta_vals[2] - 2e-7

        assessment = assess_pleased(g, PositionedCoefficients.theta(0.5, g), 0.5)
        assert -1e-9 <= assessment.degree <= 1 + 1e-9
        zs = np.linspace(low, high, 5)
        degrees = [pleased_degree(low, z, high) for z in zs]
        assert all(a <= b + 1e-15 for a, b in zip(degrees, degrees[1:]))
        if high > low + 1e-9:
            assert degrees[0] < degrees[-1]
    elapsed = (time.perf_counter() - start) * 1000
    assert elapsed < 10_000, f"took {elapsed:.0f} ms"
    verdict(capsys, "positioned programming laws on 200 random programs", elapsed)


def test_portfolio_suite(capsys):
    """Budget identity, risk tightness, riskless limit, frontier laws, exact mode."""
    start = time.perf_counter()
    rng = np.random.default_rng(91_2024)

    for _ in range(25):
        spec = random_portfolio(rng)
        lam = float(rng.uniform(0.05, 0.95))
        result = solve_scalarized(spec, GreyNumber(lam, lam), theta=0.5)
        fees = [whiten(p, 0.5) for p in spec.transaction_rates()]
        budget = sum((1 + f) * x for f, x in zip(fees, result.allocation))
        assert budget == pytest.approx(1, abs=1e-9)
        risks = [whiten(q, 0.5) for q in spec.risk_rates()]
        peak = max(q * x for q, x in zip(risks, result.allocation))
        assert result.point[-1] == pytest.approx(peak, abs=1e-9)
        riskless = solve_scalarized(spec, GreyNumber(1, 1), theta=0.5)
        assert riskless.risk == pytest.approx(0, abs=1e-6)

    demo = build_demo_portfolio()
    frontier = pareto_frontier(demo, 0.5, [float(e) for e in np.linspace(0, 120_000, 9)])
    profits = [p.profit for p in frontier]
    assert all(a <= b + 1e-6 for a, b in zip(profits, profits[1:]))
    for p in frontier:
        assert p.risk <= p.epsilon + 1e-9
        for q in frontier:
            assert not (q.profit > p.profit + 1e-9 and q.risk < p.risk - 1e-9)
    assert compromise_solution(frontier) in frontier

    checked = 0
    for _ in range(55):
        spec = random_portfolio(rng, max_assets=6)
        lam = float(rng.uniform(0.05, 0.9))
        weight = GreyNumber(lam, lam)
        prop = solve_scalarized(spec, weight, theta=0.5, mode="proportional")
        exact = solve_scalarized(spec, weight, theta=0.5, mode="exact")
        assert exact.objective_value <= prop.objective_value + 1e-7
        floors = [float(whiten(u, 0.5)) for u in spec.purchase_floors()]
        fees = [float(whiten(p, 0.5)) for p in spec.transaction_rates()]
        money = spec.total_funds
        violated = [
            i for i in range(1, spec.n + 1)
            if prop.allocation[i] > 1e-9 and money * prop.allocation[i] < floors[i] - 1e-6
        ]
        if not violated:
            assert exact.objective_value == pytest.approx(prop.objective_value, abs=1e-7)
        else:
            repaired = list(prop.allocation)
            for i in violated:
                repaired[0] += (1 + fees[i]) * repaired[i] / (1 + fees[0])
                repaired[i] = 0.0
            rates = [float(whiten(r, 0.5)) for r in spec.profit_rates()]
            risks = [float(whiten(q, 0.5)) for q in spec.risk_rates()]
            profit_rate = sum((r + 1) * x for r, x in zip(rates, repaired)) - 1
            risk_rate = max(q * x for q, x in zip(risks, repaired))
            value = (1 - lam) * profit_rate - lam * risk_rate
            assert exact.objective_value >= value - 1e-7
        checked += 1
    assert checked >= 50
    elapsed = (time.perf_counter() - start) * 1000
    assert elapsed < 10_000, f"took {elapsed:.0f} ms"
    verdict(capsys, f"portfolio laws incl. exact mode on {checked} random specs", elapsed)


def test_session_determinism(capsys, tmp_path):
    """Replaying a recorded 5-step risk-weight sequence is bit-identical."""
    weights = [(0.15, 0.35), (0.25, 0.45), (0.35, 0.55), (0.45, 0.65), (0.55, 0.75)]

    store = ModelStore(tmp_path)
    handle = store.ingest(load("portfolio_small.json"))
    engine = SessionEngine(store, store.root)
    state = engine.create(handle, target_floor=0.999, positioned={"theta": 0.5})
    for w in weights:
        state = engine.step(state.session_id, risk_weight=w)
    assert len(state.history) == 5

    # replay 1: a fresh engine reloading the journal from disk
    restored_store = ModelStore(tmp_path)
    restored = SessionEngine(restored_store, restored_store.root).get(state.session_id)
    # replay 2: an independent in-memory run of the same sequence
    fresh_engine = SessionEngine(ModelStore())
    fresh_handle = fresh_engine.store.ingest(load("portfolio_small.json"))
    fresh = fresh_engine.create(fresh_handle, target_floor=0.999, positioned={"theta": 0.5})
    for w in weights:
        fresh = fresh_engine.step(fresh.session_id, risk_weight=w)

    for replayed in (restored.history, fresh.history):
        assert len(replayed) == 5
        for original, again in zip(state.history, replayed):
            assert original.assessment == again.assessment
            assert original.allocation == again.allocation
    verdict(capsys, "session replay bit-identical over 5 recorded steps")
