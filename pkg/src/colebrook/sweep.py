"""740-point domain sweep and the worst-case iteration-count table.

The grid is 37 Reynolds values by 20 roughness values, both log-uniform with
endpoints included.  37*20 = 740 keeps one axis prime so each grid point is
uniquely identified by its linear index, and the spacing covers the admissible
domain corner to corner.  Aggregation is a max/merge over per-point results,
so the outcome is independent of evaluation order; parallel runs are merged
back in grid order to keep serialized output byte-identical.
"""

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import ColebrookParams
from .engine import CONVERGED, DEFAULT_START, StoppingPolicy, oracle_root, run
from .methods import METHOD_IDS, get_method

__all__ = [
    "GridSpec",
    "SweepReport",
    "MethodResult",
    "generate_grid",
    "sweep",
    "summary_table",
    "TABLE_COLUMNS",
]

TABLE_COLUMNS = [
    "method_id",
    "equation",
    "family",
    "log_calls",
    "worst_case",
    "paper_worst_case",
    "delta",
]


@dataclass(frozen=True)
class GridSpec:
    """Log-uniform test grid over the admissible (Re, roughness) rectangle."""

    re_points: int = 37
    rough_points: int = 20
    re_range: tuple[float, float] = (4.0e3, 1.0e8)
    rough_range: tuple[float, float] = (1.0e-6, 0.05)

    def __post_init__(self):
        if self.re_points < 2 or self.rough_points < 2:
            raise ValueError("each axis needs at least two points")
        for lo, hi in (self.re_range, self.rough_range):
            if not (0.0 < lo < hi):
                raise ValueError("ranges must be positive and increasing")

    @property
    def size(self) -> int:
        return self.re_points * self.rough_points


def _log_axis(lo: float, hi: float, n: int) -> list[float]:
    a, b = math.log(lo), math.log(hi)
    vals = [math.exp(a + i * (b - a) / (n - 1)) for i in range(n)]
    # pin the endpoints exactly; exp(log(x)) can be off by one ulp
    vals[0], vals[-1] = lo, hi
    return vals


def generate_grid(spec: GridSpec | None = None) -> list[ColebrookParams]:
    """Deterministic row-major grid; first point is (re_min, rough_min)."""
    spec = spec or GridSpec()
    res = _log_axis(*spec.re_range, spec.re_points)
    roughs = _log_axis(*spec.rough_range, spec.rough_points)
    return [ColebrookParams(re, r) for re in res for r in roughs]


@dataclass
class MethodResult:
    """Aggregated sweep outcome for a single method."""

    method_id: str
    worst_case_iterations: int = 0
    worst_point: ColebrookParams | None = None
    histogram: dict[int, int] = field(default_factory=dict)
    failures: list[tuple[ColebrookParams, str]] = field(default_factory=list)


@dataclass
class SweepReport:
    """Per-method aggregates over one grid."""

    grid: GridSpec
    start: float
    results: dict[str, MethodResult]

    @property
    def total_failures(self) -> int:
        return sum(len(r.failures) for r in self.results.values())


def _point_counts(args):
    """Worker: run every requested method at one grid point.

    Returns (index, [(count, termination), ...]) so the parent can merge in
    grid order regardless of completion order.
    """
    idx, re, rough, method_ids, x0, decimal_agreement, max_iterations = args
    p = ColebrookParams(re, rough)
    policy = StoppingPolicy(decimal_agreement, max_iterations)
    root = oracle_root(p)
    out = []
    for mid in method_ids:
        tr = run(mid, p, x0=x0, policy=policy, root=root)
        out.append((tr.iterations_to_solution, tr.termination))
    return idx, out


def _worker_count() -> int:
    raw = os.environ.get("COLEBROOK_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 0:
        raise ValueError("COLEBROOK_THREADS must be >= 0")
    if n == 0:
        n = min(os.cpu_count() or 1, 8)
    return n


def sweep(
    grid: GridSpec | list[ColebrookParams] | None = None,
    method_ids: list[str] | None = None,
    x0: float = DEFAULT_START,
    policy: StoppingPolicy | None = None,
) -> SweepReport:
    """Run every method over every grid point and aggregate worst cases."""
    if grid is None or isinstance(grid, GridSpec):
        spec = grid or GridSpec()
        points = generate_grid(spec)
    else:
        spec = GridSpec()
        points = grid
    method_ids = method_ids or METHOD_IDS
    for mid in method_ids:
        get_method(mid)  # fail fast on typos
    policy = policy or StoppingPolicy()

    jobs = [
        (i, p.reynolds, p.roughness, method_ids, x0,
         policy.decimal_agreement, policy.max_iterations)
        for i, p in enumerate(points)
    ]
    workers = _worker_count()
    if workers > 1 and len(jobs) > 1:
        chunk = max(1, len(jobs) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            raw = list(pool.map(_point_counts, jobs, chunksize=chunk))
    else:
        raw = [_point_counts(j) for j in jobs]
    raw.sort(key=lambda item: item[0])

    results = {mid: MethodResult(mid) for mid in method_ids}
    for idx, per_method in raw:
        p = points[idx]
        for mid, (count, termination) in zip(method_ids, per_method):
            r = results[mid]
            r.histogram[count] = r.histogram.get(count, 0) + 1
            if termination not in CONVERGED:
                r.failures.append((p, termination))
            # counts above the cap are the "never got there" sentinel;
            # they are visible in the histogram but do not define the
            # worst case, which is over points that reached the root
            if count <= policy.max_iterations and count > r.worst_case_iterations:
                r.worst_case_iterations = count
                r.worst_point = p
    return SweepReport(grid=spec, start=x0, results=results)


def summary_table(report: SweepReport) -> list[dict]:
    """Comparison rows in equation order; column set is TABLE_COLUMNS."""
    rows = []
    for mid in METHOD_IDS:
        if mid not in report.results:
            continue
        s = get_method(mid)
        measured = report.results[mid].worst_case_iterations
        rows.append({
            "method_id": mid,
            "equation": s.equation,
            "family": s.family,
            "log_calls": s.log_calls,
            "worst_case": measured,
            "paper_worst_case": s.reference_worst_case,
            "delta": measured - s.reference_worst_case,
        })
    return rows
