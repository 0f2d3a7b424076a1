"""greyopt: grey (interval-parameter) multi-objective linear programming.

Core pieces: grey interval numbers and arithmetic, a deterministic simplex
kernel, positioned whitening with pleased-degree assessment, entropy-weight
and max-min multi-objective solvers, a transaction-cost portfolio planner,
and a CLI/HTTP service for the interactive decision loop.
"""

from .errors import GreyOptError
from .grey import (
    GreyIntervalMatrix,
    GreyNumber,
    grey_distance,
    lin_comb,
    normalize_intervals,
    whiten,
)
from .lp import Constraint, LpProblem, LpSolution, solve_lp
from .multiobjective import (
    GmopModel,
    GreyConstraint,
    GreyObjective,
    MaxMinSolution,
    MaxMinWorkspace,
    WeightedSumSolution,
    WeightingWorkspace,
    combine_objectives,
    entropy_weights,
    individual_optima,
    max_min_solve,
    modify_weights,
    objective_matrix,
    sample_admissible,
    weigh_objectives,
    weighted_sum_solve,
    whitening_weight,
)
from .portfolio import (
    Asset,
    AllocationResult,
    BiObjectiveModel,
    FrontierPoint,
    PortfolioSpec,
    ScalarizedModel,
    build_biobjective,
    compromise_solution,
    pareto_frontier,
    scalarize,
    solve_scalarized,
    transaction_cost,
)
from .positioned import (
    GreyLinearProgram,
    PleasedAssessment,
    PositionedCoefficients,
    assess_pleased,
    critical_solve,
    ideal_solve,
    pleased_degree,
    solve_positioned,
    theta_solve,
    whiten_program,
)

__version__ = "0.1.0"

__all__ = [
    "GreyOptError",
    "GreyNumber",
    "GreyIntervalMatrix",
    "whiten",
    "lin_comb",
    "grey_distance",
    "normalize_intervals",
    "LpProblem",
    "LpSolution",
    "Constraint",
    "solve_lp",
    "GreyLinearProgram",
    "PositionedCoefficients",
    "PleasedAssessment",
    "whiten_program",
    "solve_positioned",
    "theta_solve",
    "ideal_solve",
    "critical_solve",
    "pleased_degree",
    "assess_pleased",
    "GmopModel",
    "GreyObjective",
    "GreyConstraint",
    "WeightingWorkspace",
    "MaxMinWorkspace",
    "WeightedSumSolution",
    "MaxMinSolution",
    "sample_admissible",
    "objective_matrix",
    "weigh_objectives",
    "entropy_weights",
    "modify_weights",
    "combine_objectives",
    "weighted_sum_solve",
    "individual_optima",
    "whitening_weight",
    "max_min_solve",
    "PortfolioSpec",
    "Asset",
    "BiObjectiveModel",
    "ScalarizedModel",
    "AllocationResult",
    "FrontierPoint",
    "transaction_cost",
    "build_biobjective",
    "scalarize",
    "solve_scalarized",
    "pareto_frontier",
    "compromise_solution",
]
