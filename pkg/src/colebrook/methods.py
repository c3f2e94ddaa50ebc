"""Registry of the 23 iterative update rules and their single-step semantics.

Each method is exposed as a pure single-step function: given a problem and a
current estimate it returns a StepOutcome carrying the next estimate (or a
terminal reason) plus exact evaluation counts, so callers can audit cost.

The update rules deliberately use a variant first derivative whose constant
term differs from the analytic one (see _variant_first_derivative).  This
matches the computation the reference worksheets actually performed and is
required to reproduce their digit-for-digit traces.  The analytic derivatives
live in core and are the ones validated against finite differences.
"""

import math
from dataclasses import dataclass, field
from typing import Callable

from .core import ColebrookParams, DomainError, residual

__all__ = [
    "StepOutcome",
    "MethodSpec",
    "METHODS",
    "METHOD_IDS",
    "NOT_RECOMMENDED",
    "get_method",
    "method_metadata",
]

LN10 = math.log(10.0)

ADVANCED = "advanced"
DIVISION_BY_ZERO = "division_by_zero"
NON_FINITE = "non_finite"

ONE_POINT = "one-point"
TWO_POINT = "two-point"
THREE_POINT = "three-point"

# Methods the source material flags as not competitive on this problem.
NOT_RECOMMENDED = frozenset({"murakami", "wang-liu", "neta-johnson", "cordero"})


def _variant_first_derivative(p: ColebrookParams, x: float) -> float:
    # Same shape as the analytic F' but with 10*eps/3.71 in place of
    # eps/3.71; kept bug-compatible with the reference computation.
    a = 10.0 * p.roughness / 3.71 + 2.51 * x / p.reynolds
    return 5.02 / (LN10 * p.reynolds * a) + 1.0


def _variant_second_derivative(p: ColebrookParams, x: float) -> float:
    # Analytic log argument, but the printed rounded coefficient 12.6
    # instead of 2*2.51**2 = 12.6002.
    a = p.roughness / 3.71 + 2.51 * x / p.reynolds
    return -12.6 / (LN10 * p.reynolds * p.reynolds * a * a)


class _Evaluator:
    """Counts calls to F, F' and F'' made by one step of a method."""

    __slots__ = ("p", "n_f", "n_d", "n_dd")

    def __init__(self, p: ColebrookParams):
        self.p = p
        self.n_f = 0
        self.n_d = 0
        self.n_dd = 0

    def f(self, x: float) -> float:
        self.n_f += 1
        return residual(self.p, x)

    def d(self, x: float) -> float:
        self.n_d += 1
        return _variant_first_derivative(self.p, x)

    def dd(self, x: float) -> float:
        self.n_dd += 1
        return _variant_second_derivative(self.p, x)


# ---------------------------------------------------------------------------
# Update rules.  Each takes an _Evaluator and the current estimate and
# returns the next estimate; division by zero and domain violations are
# left to propagate and are classified by step().
# ---------------------------------------------------------------------------


def _u_fixed_point(e, x):
    return x - e.f(x)


def _u_newton(e, x):
    return x - e.f(x) / e.d(x)


def _u_halley(e, x):
    fx, dx, ddx = e.f(x), e.d(x), e.dd(x)
    return x - (fx / dx) / (1 - ddx * fx / (2 * dx * dx))


def _u_euler_chebyshev(e, x):
    fx, dx, ddx = e.f(x), e.d(x), e.dd(x)
    return x - fx / dx - fx * fx * ddx / (2 * dx**3)


def _u_basto(e, x):
    # Denominator reproduces the reference arithmetic: 2*F'*(F'^2 - F - F''),
    # i.e. the second and third terms are subtracted rather than multiplied.
    fx, dx, ddx = e.f(x), e.d(x), e.dd(x)
    return x - fx / dx - fx * fx * ddx / (2 * dx * (dx * dx - fx - ddx))


def _u_super_halley(e, x):
    fx, dx, ddx = e.f(x), e.d(x), e.dd(x)
    L = fx * ddx / (dx * dx)
    return x - (1 + 0.5 * L / (1 - L)) * fx / dx


def _u_murakami(e, x):
    fx, dx = e.f(x), e.d(x)
    w = x - fx / dx
    v = x - 0.5 * fx / dx
    dw, dv = e.d(w), e.d(v)
    return x - 0.3 * fx / dx + 0.5 * fx / dw - (2.0 / 3.0) * fx / dv \
        - 32 * fx / (75 * dw - 15 * fx)


def _u_ostrowski(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    return y - fy / dx * fx / (fx - 2 * fy)


def _u_kung_traub(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    return y - fy / dx / (1 - fy / fx) ** 2


def _u_maheshwari(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    u = fy / fx
    return x - fx / dx * (u * u - fx / (fy - fx))


def _u_khattri_babajee(e, x):
    # The 0.001 perturbation of F'(x) is subtracted, not added; the sign
    # is what reproduces the reference iterates.
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    return y - fx * fy / (fx - 2 * fy) * (3 / (dx - 0.001 * fy) - 2 / dx)


def _u_jarratt_hermite(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - (2.0 / 3.0) * fx / dx
    dy = e.d(y)
    z = x - 0.5 * fx / dx * (1 + 1 / (1 + 1.5 * (dy / dx - 1)))
    fy = e.f(y)
    dz = e.d(z)
    den = x + 2 * y - 3 * z
    h = (fx + dx * (z - x) * (z - y) ** 2 / ((y - x) * den)
         + dz * (z - y) * (x - z) / den
         - (fx - fy) / (x - y) * (z - x) ** 3 / ((y - x) * den))
    return z - h / dz


def _u_wang_liu(e, x):
    # The Hermite correction evaluates to F'(z)*(z-y) in the reference
    # arithmetic, so the step collapses to the intermediate Newton point.
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    z = y - fy / dx * fx / (fx - 2 * fy)
    dz = e.d(z)
    h = dz * (z - y)
    return z - h / dz


def _u_neta(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    z = y - fy / dx * (fx - 0.5 * fy) / (fx - 2.5 * fy)
    fz = e.f(z)
    return z - fz / dx * (fx - fy) / (fx - 3 * fy)


def _u_chun_neta(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    z = y - fy / dx / (1 - fy / fx) ** 2
    fz = e.f(z)
    return z - fz / dx / (1 - fy / fx - fz / fx) ** 2


def _u_dzunic(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    z = y - fx / (fx - 2 * fy) * fy / dx
    fz = e.f(z)
    u = fy / fx
    return z - fz / (dx * (1 - 2 * u - u * u) * (1 - fz / fy) * (1 - 2 * fz / fx))


def _u_neta_johnson(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    dy = e.d(y)
    w = x - fx / (8 * dx) - 3 * fx / (8 * dy)
    dw = e.d(w)
    z = x - fx / (dx / 6 + dy / 6 + 2 * dw / 3)
    fz = e.f(z)
    return z - fz / dx * 3 * (dx + dy - dw) / (-2 * dx + 2 * dy - dw)


def _u_jain_steffensen(e, x):
    fx = e.f(x)
    fs = e.f(x + fx)
    y = x - fx * fx / (fs - fx)
    fy = e.f(y)
    return x - fx**3 / ((fs - fx) * (fx - fy))


def _u_bi_ren_wu(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    z = y - fy / dx * fx / (fx - 2 * fy)
    fz = e.f(z)
    pyx = (fy - fx) / (y - x)
    pzy = (fz - fy) / (z - y)
    return z - fz / (pzy + pyx - dx)


def _u_cordero(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    z = y - fy / dx * fx / (fx - 2 * fy)
    fz = e.f(z)
    return z + fz * fy / fx


def _u_sharma_arora(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    pyx = (fy - fx) / (y - x)
    z = y - fy / (2 * pyx - dx)
    fz = e.f(z)
    pzx = (fz - fx) / (z - x)
    pzy = (fz - fy) / (z - y)
    return z - pzy / pzx * fz / (2 * pzy - pzx)


def _u_sharma_sharma(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    z = y - fy / dx / (1 - 2 * fy / fx)
    fz = e.f(z)
    w = 1 + (fz / fx) / (1 + fz / fx)
    pxy = (fx - fy) / (x - y)
    pxz = (fx - fz) / (x - z)
    pyz = (fy - fz) / (y - z)
    return z - w * fz * pxy / (pxz * pyz)


def _u_sharma_guha_gupta(e, x):
    fx, dx = e.f(x), e.d(x)
    y = x - fx / dx
    fy = e.f(y)
    z = y - 1 / (1 - 2 * fy / fx) * fy / dx
    fz = e.f(z)
    p = (x - y) * fx * fy
    q = (y - z) * fy * fz
    r = (z - x) * fz * fx
    pzx = (fz - fx) / (z - x)
    pyx = (fy - fx) / (y - x)
    return x - (p + q + r) / (p * pzx + q * dx + r * pyx) * fx


@dataclass(frozen=True)
class StepOutcome:
    """Result of one method step."""

    next: float | None
    terminal_reason: str  # advanced | division_by_zero | non_finite
    evaluations: dict = field(default_factory=dict)


@dataclass(frozen=True)
class MethodSpec:
    """Static description of one iterative method."""

    method_id: str
    equation: int
    family: str
    log_calls: int           # residual (log) evaluations grouped per family
    residual_calls: int      # actual F evaluations per step
    derivative_calls: int    # actual F' evaluations per step
    second_derivative_calls: int
    function_point_count: int  # distinct abscissae touched per step
    reference_worst_case: int
    update: Callable = field(repr=False, compare=False)

    @property
    def recommended(self) -> bool:
        return self.method_id not in NOT_RECOMMENDED


def _spec(mid, eq, fam, logc, nf, nd, ndd, pts, ref, fn):
    return MethodSpec(mid, eq, fam, logc, nf, nd, ndd, pts, ref, fn)


_SPECS = [
    _spec("fixed-point", 3, ONE_POINT, 1, 1, 0, 0, 1, 7, _u_fixed_point),
    _spec("newton-raphson", 4, ONE_POINT, 1, 1, 1, 0, 1, 7, _u_newton),
    _spec("halley", 5, ONE_POINT, 1, 1, 1, 1, 1, 7, _u_halley),
    _spec("euler-chebyshev", 6, ONE_POINT, 1, 1, 1, 1, 1, 7, _u_euler_chebyshev),
    _spec("basto", 7, ONE_POINT, 1, 1, 1, 1, 1, 7, _u_basto),
    _spec("super-halley", 8, ONE_POINT, 1, 1, 1, 1, 1, 7, _u_super_halley),
    _spec("murakami", 9, ONE_POINT, 1, 1, 3, 0, 3, 12, _u_murakami),
    _spec("ostrowski", 10, TWO_POINT, 2, 2, 1, 0, 2, 4, _u_ostrowski),
    _spec("kung-traub", 11, TWO_POINT, 2, 2, 1, 0, 2, 4, _u_kung_traub),
    _spec("maheshwari", 12, TWO_POINT, 2, 2, 1, 0, 2, 4, _u_maheshwari),
    _spec("khattri-babajee", 13, TWO_POINT, 2, 2, 1, 0, 2, 4, _u_khattri_babajee),
    _spec("jarratt-hermite", 14, TWO_POINT, 2, 2, 3, 0, 3, 4, _u_jarratt_hermite),
    _spec("wang-liu", 15, TWO_POINT, 2, 2, 2, 0, 3, 7, _u_wang_liu),
    _spec("neta", 16, THREE_POINT, 3, 3, 1, 0, 3, 2, _u_neta),
    _spec("chun-neta", 17, THREE_POINT, 3, 3, 1, 0, 3, 3, _u_chun_neta),
    _spec("dzunic-petkovic-petkovic", 18, THREE_POINT, 3, 3, 1, 0, 3, 2, _u_dzunic),
    _spec("neta-johnson", 19, THREE_POINT, 3, 2, 3, 0, 4, 11, _u_neta_johnson),
    _spec("jain-steffensen", 20, THREE_POINT, 3, 3, 0, 0, 3, 2, _u_jain_steffensen),
    _spec("bi-ren-wu", 21, THREE_POINT, 3, 3, 1, 0, 3, 3, _u_bi_ren_wu),
    _spec("cordero", 22, THREE_POINT, 3, 3, 1, 0, 3, 4, _u_cordero),
    _spec("sharma-arora", 23, THREE_POINT, 3, 3, 1, 0, 3, 2, _u_sharma_arora),
    _spec("sharma-sharma", 24, THREE_POINT, 3, 3, 1, 0, 3, 2, _u_sharma_sharma),
    _spec("sharma-guha-gupta", 25, THREE_POINT, 3, 3, 1, 0, 3, 2,
          _u_sharma_guha_gupta),
]

METHODS = {s.method_id: s for s in _SPECS}
METHOD_IDS = [s.method_id for s in _SPECS]


def get_method(method_id: str) -> MethodSpec:
    try:
        return METHODS[method_id]
    except KeyError:
        raise KeyError(
            f"unknown method {method_id!r}; valid ids: {', '.join(METHOD_IDS)}"
        ) from None


def method_metadata(method_id: str) -> dict:
    """Static cost/identity metadata for one method, as a plain dict."""
    s = get_method(method_id)
    return {
        "method_id": s.method_id,
        "equation": s.equation,
        "family": s.family,
        "log_calls": s.log_calls,
        "residual_calls": s.residual_calls,
        "derivative_calls": s.derivative_calls,
        "second_derivative_calls": s.second_derivative_calls,
        "function_point_count": s.function_point_count,
        "reference_worst_case": s.reference_worst_case,
        "recommended": s.recommended,
    }


def step(spec: MethodSpec, p: ColebrookParams, x: float) -> StepOutcome:
    """Apply one iteration of the method at x.

    Division by zero is reported as its own terminal reason so callers can
    distinguish "landed exactly on the root" from genuine breakdown.
    """
    e = _Evaluator(p)
    try:
        nxt = spec.update(e, x)
    except ZeroDivisionError:
        return StepOutcome(None, DIVISION_BY_ZERO, _counts(e))
    except (DomainError, OverflowError, ValueError):
        return StepOutcome(None, NON_FINITE, _counts(e))
    if not math.isfinite(nxt):
        return StepOutcome(None, NON_FINITE, _counts(e))
    return StepOutcome(nxt, ADVANCED, _counts(e))


def _counts(e: _Evaluator) -> dict:
    return {
        "residual": e.n_f,
        "first_derivative": e.n_d,
        "second_derivative": e.n_dd,
    }
