"""Iteration driver: runs a method to termination and classifies the result.

Two different iteration counts exist on purpose.  The operational stop is
successive-iterate agreement to 9 decimals; the reported benchmark count is
measured against the true root (smallest index whose iterate is within
tolerance of it), which can be one less than the number of iterates listed
because the final confirming iterate is not counted.
"""

import math
from dataclasses import dataclass, field

from .core import ColebrookParams, DomainError, first_derivative, residual
from .methods import (
    ADVANCED,
    DIVISION_BY_ZERO,
    MethodSpec,
    get_method,
    step,
)

__all__ = [
    "StoppingPolicy",
    "IterationTrace",
    "DEFAULT_START",
    "CONVERGED_BY_AGREEMENT",
    "CONVERGED_BY_DIV0",
    "FAILED_MAX_ITERATIONS",
    "FAILED_NON_FINITE",
    "CONVERGED",
    "run",
    "oracle_root",
    "iterations_to_solution",
    "count_iterations",
    "solve_friction_factor",
]

DEFAULT_START = 7.273626085

CONVERGED_BY_AGREEMENT = "converged_by_agreement"
CONVERGED_BY_DIV0 = "converged_by_div0"
FAILED_MAX_ITERATIONS = "failed_max_iter"
FAILED_NON_FINITE = "failed_non_finite"
CONVERGED = frozenset({CONVERGED_BY_AGREEMENT, CONVERGED_BY_DIV0})

# A division by zero only counts as convergence if the residual at the last
# good iterate is already negligible.
_DIV0_RESIDUAL_CAP = 1.0e-7

# Root bracket in the transformed variable; F(1) < 0 < F(15) holds across
# the whole admissible (Re, roughness) domain.
_BRACKET_LO = 1.0
_BRACKET_HI = 15.0


@dataclass(frozen=True)
class StoppingPolicy:
    """Stop when successive iterates agree to `decimal_agreement` decimals."""

    decimal_agreement: int = 9
    max_iterations: int = 100

    def __post_init__(self):
        if self.decimal_agreement < 1 or self.max_iterations < 1:
            raise ValueError("decimal_agreement and max_iterations must be >= 1")

    @property
    def abs_tol(self) -> float:
        return 0.5 * 10.0 ** (-self.decimal_agreement)


@dataclass(frozen=True)
class IterationTrace:
    """Everything one solver run produced."""

    method: str
    problem: ColebrookParams
    start: float
    iterates: list[float]
    termination: str
    iterations_to_solution: int
    residual_at_final: float | None
    evaluations: dict = field(default_factory=dict)

    @property
    def final(self) -> float:
        return self.iterates[-1] if self.iterates else self.start

    @property
    def converged(self) -> bool:
        return self.termination in CONVERGED


def oracle_root(p: ColebrookParams) -> float:
    """Method-independent root: bisection bracket plus Newton polishing.

    Uses the analytic derivative only; the returned point satisfies
    |F(x*)| < 1e-13.
    """
    lo, hi = _BRACKET_LO, _BRACKET_HI
    flo = residual(p, lo)
    if flo == 0.0:
        return lo
    fhi = residual(p, hi)
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise DomainError(
            f"no sign change on [{lo}, {hi}] for Re={p.reynolds}, "
            f"roughness={p.roughness}"
        )
    # 40 halvings narrow the bracket to ~1e-11 which is safely inside the
    # Newton basin of this well-conditioned (F' > 1) problem.
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        fm = residual(p, mid)
        if fm == 0.0:
            lo = hi = mid
            break
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(4):
        fx = residual(p, x)
        if fx == 0.0:
            break
        x -= fx / first_derivative(p, x)
    return x


def iterations_to_solution(
    start: float,
    iterates: list[float],
    root: float,
    policy: StoppingPolicy,
) -> int:
    """Benchmark count: first index whose iterate is within tolerance of root.

    Index 0 means the start point already qualifies; max_iterations + 1 is
    the sentinel for "never got there".
    """
    tol = policy.abs_tol
    if abs(start - root) < tol:
        return 0
    for i, x in enumerate(iterates, start=1):
        if abs(x - root) < tol:
            return i
    return policy.max_iterations + 1


def count_iterations(
    trace: "IterationTrace",
    x_star: float,
    abs_tol: float,
    max_iterations: int = 100,
) -> int:
    """Recount a finished trace against a different root or tolerance."""
    if abs(trace.start - x_star) < abs_tol:
        return 0
    for i, x in enumerate(trace.iterates, start=1):
        if abs(x - x_star) < abs_tol:
            return i
    return max_iterations + 1


def run(
    method: MethodSpec | str,
    p: ColebrookParams,
    x0: float = DEFAULT_START,
    policy: StoppingPolicy | None = None,
    root: float | None = None,
) -> IterationTrace:
    """Iterate `method` from x0 until agreement, breakdown or the cap."""
    spec = get_method(method) if isinstance(method, str) else method
    policy = policy or StoppingPolicy()
    if not math.isfinite(x0):
        raise DomainError(f"start point must be finite, got {x0!r}")

    totals = {"residual": 0, "first_derivative": 0, "second_derivative": 0}
    iterates: list[float] = []
    x = x0
    termination = FAILED_MAX_ITERATIONS
    for _ in range(policy.max_iterations):
        out = step(spec, p, x)
        for k, v in out.evaluations.items():
            totals[k] += v
        if out.terminal_reason == DIVISION_BY_ZERO:
            termination = (
                CONVERGED_BY_DIV0
                if _residual_below(p, x, _DIV0_RESIDUAL_CAP)
                else FAILED_NON_FINITE
            )
            break
        if out.terminal_reason != ADVANCED:
            termination = FAILED_NON_FINITE
            break
        nxt = out.next
        iterates.append(nxt)
        # agreement means the same value at decimal_agreement places, not
        # just a small step: successive iterates straddling a rounding
        # boundary (|delta| < tol but different printed digits) keep going,
        # matching how the reference traces behave near #div0! positions
        if (abs(nxt - x) < policy.abs_tol
                and round(nxt, policy.decimal_agreement)
                == round(x, policy.decimal_agreement)):
            termination = CONVERGED_BY_AGREEMENT
            x = nxt
            break
        x = nxt

    final = iterates[-1] if iterates else x0
    try:
        res_final = residual(p, final)
    except DomainError:
        res_final = None

    if root is None:
        root = oracle_root(p)
    count = iterations_to_solution(x0, iterates, root, policy)

    return IterationTrace(
        method=spec.method_id,
        problem=p,
        start=x0,
        iterates=iterates,
        termination=termination,
        iterations_to_solution=count,
        residual_at_final=res_final,
        evaluations=totals,
    )


def _residual_below(p: ColebrookParams, x: float, cap: float) -> bool:
    try:
        return abs(residual(p, x)) < cap
    except DomainError:
        return False


def solve_friction_factor(
    reynolds: float,
    roughness: float,
    method: str = "newton-raphson",
    x0: float = DEFAULT_START,
    policy: StoppingPolicy | None = None,
) -> IterationTrace:
    """Convenience entry point used by the CLI solve path."""
    p = ColebrookParams(reynolds, roughness)
    return run(method, p, x0=x0, policy=policy)
