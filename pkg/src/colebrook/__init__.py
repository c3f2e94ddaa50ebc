"""Iterative solvers for the implicit Colebrook flow-friction equation.

The equation is solved in the transformed variable x = 1/sqrt(lambda);
23 classical one-, two- and three-point iterative methods are provided,
together with a benchmarking sweep over the turbulent domain.
"""

from .benchmarks import EXAMPLE_PROBLEMS, EXAMPLE_SOLUTIONS, example_problem
from .core import (
    ColebrookParams,
    DomainError,
    first_derivative,
    lambda_of_x,
    residual,
    second_derivative,
    x_of_lambda,
)
from .engine import (
    DEFAULT_START,
    IterationTrace,
    StoppingPolicy,
    count_iterations,
    iterations_to_solution,
    oracle_root,
    run,
    solve_friction_factor,
)
from .methods import (
    METHOD_IDS,
    METHODS,
    NOT_RECOMMENDED,
    MethodSpec,
    StepOutcome,
    get_method,
    method_metadata,
    step,
)
from .sweep import GridSpec, SweepReport, generate_grid, summary_table, sweep

__version__ = "1.0.0"

__all__ = [
    "ColebrookParams",
    "DomainError",
    "residual",
    "first_derivative",
    "second_derivative",
    "lambda_of_x",
    "x_of_lambda",
    "StoppingPolicy",
    "IterationTrace",
    "DEFAULT_START",
    "run",
    "oracle_root",
    "iterations_to_solution",
    "count_iterations",
    "solve_friction_factor",
    "MethodSpec",
    "StepOutcome",
    "METHODS",
    "METHOD_IDS",
    "NOT_RECOMMENDED",
    "get_method",
    "method_metadata",
    "step",
    "GridSpec",
    "SweepReport",
    "generate_grid",
    "sweep",
    "summary_table",
    "EXAMPLE_PROBLEMS",
    "EXAMPLE_SOLUTIONS",
    "example_problem",
    "__version__",
]
