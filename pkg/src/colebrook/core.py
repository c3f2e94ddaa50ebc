"""Colebrook residual, its derivatives and the friction-factor transform.

The implicit Colebrook relation is solved in the transformed variable
x = 1/sqrt(lambda), which turns it into a scalar root-finding problem
F(x) = 0 with

    F(x) = x + 2*log10(2.51*x/Re + eps/3.71)

F is strictly increasing (F' > 1) and strictly concave (F'' < 0) on the
turbulent domain, so the root is unique.
"""

import math
from dataclasses import dataclass

__all__ = [
    "DomainError",
    "ColebrookParams",
    "RE_MIN",
    "RE_MAX",
    "ROUGHNESS_MAX",
    "residual",
    "first_derivative",
    "second_derivative",
    "lambda_of_x",
    "x_of_lambda",
]

LN10 = math.log(10.0)

# Turbulent-flow domain of validity.  All bounds are inclusive (the closure
# of the open turbulent rectangle) so grid sweeps can place points on the
# endpoints; roughness 0 is accepted as the smooth-pipe edge case.
RE_MIN = 4.0e3
RE_MAX = 1.0e8
ROUGHNESS_MAX = 0.05

# d2F coefficient: 2 * 2.51**2, kept at the exact differentiated value.
_D2_COEFF = 2.0 * 2.51 * 2.51


class DomainError(ValueError):
    """Inputs outside the turbulent-flow domain of the correlation."""


@dataclass(frozen=True)
class ColebrookParams:
    """One friction problem instance: Reynolds number and relative roughness."""

    reynolds: float
    roughness: float

    def __post_init__(self):
        re = self.reynolds
        eps = self.roughness
        if not (math.isfinite(re) and math.isfinite(eps)):
            raise DomainError("reynolds and roughness must be finite")
        if not (RE_MIN <= re <= RE_MAX):
            raise DomainError(
                f"reynolds {re!r} outside turbulent domain [{RE_MIN:g}, {RE_MAX:g}]"
            )
        if not (0.0 <= eps <= ROUGHNESS_MAX):
            raise DomainError(
                f"roughness {eps!r} outside [0, {ROUGHNESS_MAX:g}]"
            )


def _log_argument(p: ColebrookParams, x: float) -> float:
    a = 2.51 * x / p.reynolds + p.roughness / 3.71
    if a <= 0.0:
        raise DomainError(f"non-positive log argument at x={x!r}")
    return a


def residual(p: ColebrookParams, x: float) -> float:
    """F(x); zero at the Colebrook solution."""
    return x + 2.0 * math.log10(_log_argument(p, x))


def first_derivative(p: ColebrookParams, x: float) -> float:
    """F'(x); always greater than 1 on the valid domain."""
    return 5.02 / (LN10 * p.reynolds * _log_argument(p, x)) + 1.0


def second_derivative(p: ColebrookParams, x: float) -> float:
    """F''(x); always negative on the valid domain."""
    a = _log_argument(p, x)
    return -_D2_COEFF / (LN10 * p.reynolds * p.reynolds * a * a)


def lambda_of_x(x: float) -> float:
    """Darcy friction factor lambda = x**-2."""
    if not (x > 0.0):
        raise DomainError(f"x must be positive, got {x!r}")
    return 1.0 / (x * x)


def x_of_lambda(lam: float) -> float:
    """Inverse transform x = lambda**-0.5."""
    if not (lam > 0.0):
        raise DomainError(f"lambda must be positive, got {lam!r}")
    return 1.0 / math.sqrt(lam)
