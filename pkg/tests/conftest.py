"""Shared fixtures: the worked two-objective example and random generators."""

from fractions import Fraction

import numpy as np
import pytest

from greyopt.grey import GreyNumber
from greyopt.positioned import GreyLinearProgram


@pytest.fixture
def combined_program() -> GreyLinearProgram:
    """Weighted combination (0.6/0.4) of the two example objectives.

    Price intervals [0.8, 2.8] and [0.3, 1.3] over the shared constraint
    block; mean whitening gives max 1.8 x1 + 0.8 x2 with rows
    3 x1 + 2 x2 <= 18 and -x1 + 4 x2 <= 8.
    """
    return GreyLinearProgram.build(
        sense="maximize",
        price=[[0.8, 2.8], [0.3, 1.3]],
        consumption=[[[2, 4], [1.5, 2.5]], [[-2, 0], [3, 5]]],
        resources=[[16, 20], [7, 9]],
        relations=["<=", "<="],
    )


def exact_example_objectives():
    """The two grey objective rows with exact rational bounds."""
    f1 = [GreyNumber(Fraction(0), Fraction(2)), GreyNumber(Fraction(3, 2), Fraction(5, 2))]
    f2 = [GreyNumber(Fraction(2), Fraction(4)), GreyNumber(Fraction(-3, 2), Fraction(-1, 2))]
    return f1, f2


def build_example_model():
    """The worked two-objective grey program.

    Objective bounds are exact rationals so weight combinations with exact
    rational weights stay exact end to end.
    """
    from greyopt.multiobjective import GmopModel

    f1, f2 = exact_example_objectives()
    return GmopModel.build(
        objectives=[
            ("maximize", "benefit", f1),
            ("maximize", "benefit", f2),
        ],
        constraints=[
            ([[2, 4], [1.5, 2.5]], "<=", [16, 20]),
            ([[-2, 0], [3, 5]], "<=", [7, 9]),
        ],
        variable_count=2,
    )


EXAMPLE_POINTS = [(2, 1), (4, 2), (5, 1)]

# entropy weights for the example's interval table, frozen from the direct
# recomputation oracle (tests/oracles.py::entropy_pipeline)
EXAMPLE_WEIGHTS = (0.6135599853540431, 0.3864400146459569)


@pytest.fixture
def example_model():
    return build_example_model()


def build_demo_portfolio():
    from greyopt.portfolio import PortfolioSpec

    return PortfolioSpec.build(
        total_funds=1_000_000,
        bank_rate=[0.02, 0.03],
        assets=[
            {"name": "alpha", "profit_rate": [0.08, 0.12], "risk_rate": [0.02, 0.05],
             "transaction_rate": [0.005, 0.015], "purchase_floor": [5000, 10000]},
            {"name": "beta", "profit_rate": [0.15, 0.25], "risk_rate": [0.06, 0.12],
             "transaction_rate": [0.01, 0.02], "purchase_floor": [10000, 20000]},
            {"name": "gamma", "profit_rate": [0.05, 0.07], "risk_rate": [0.01, 0.02],
             "transaction_rate": [0.002, 0.006], "purchase_floor": [2000, 4000]},
        ],
    )


@pytest.fixture
def demo_portfolio():
    return build_demo_portfolio()


def random_portfolio(rng: np.random.Generator, max_assets: int = 6):
    """Random spec with floors large enough to bite sometimes."""
    from greyopt.portfolio import PortfolioSpec

    n = int(rng.integers(1, max_assets + 1))
    money = float(rng.uniform(1e5, 1e7))

    def interval(low, high, width):
        lo = rng.uniform(low, high)
        return [float(lo), float(lo + rng.uniform(0, width))]

    assets = []
    for _ in range(n):
        assets.append(
            {
                "profit_rate": interval(0.02, 0.25, 0.1),
                "risk_rate": interval(0.005, 0.3, 0.1),
                "transaction_rate": interval(0.001, 0.04, 0.01),
                "purchase_floor": interval(0, 0.3 * money, 0.1 * money),
            }
        )
    return PortfolioSpec.build(
        total_funds=money, bank_rate=interval(0.005, 0.05, 0.02), assets=assets
    )


def random_nonneg_lpgp(rng: np.random.Generator) -> GreyLinearProgram:
    """Random maximize-sense grey LP with nonnegative bounds.

    Every instance has a feasible, bounded critical model with strictly
    positive optimum: a covering row with lower bounds >= 0.5 keeps all
    whitenings bounded, and positive prices/resources keep optima positive.
    """
    n = int(rng.integers(1, 4))
    m = int(rng.integers(1, 4))

    def interval(lo_low, lo_high, width):
        lo = rng.uniform(lo_low, lo_high)
        return [float(lo), float(lo + rng.uniform(0, width))]

    price = [interval(0.1, 5, 5) for _ in range(n)]
    consumption = [[interval(0.0, 3, 2) for _ in range(n)] for _ in range(m)]
    resources = [interval(1, 10, 5) for _ in range(m)]
    consumption.append([interval(0.5, 2, 1) for _ in range(n)])
    resources.append(interval(2, 12, 4))
    return GreyLinearProgram.build(
        sense="maximize",
        price=price,
        consumption=consumption,
        resources=resources,
        relations=["<="] * (m + 1),
    )
