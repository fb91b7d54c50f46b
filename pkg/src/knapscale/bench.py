"""Instrumented comparison: exact solve on raw weights vs the composed scheme.

Work is counted in dynamic-programming cells (n * (total weight + 1) per
exact solve), never wall-clock; wall time is optionally recorded but nothing
is ever asserted about it.  Runs iterate deterministically over the sorted
(n, epsilon, seed) grid, so output with ``measure_time=False`` (the default)
is byte-for-byte reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .core import Sense, SubsetInstance, scaled_weight_bound
from .errors import BudgetExceeded, DomainError
from .instances import generate_instance, structure_bytes
from .maxkp import MAX_RATIO, exact_dp_max, fptas_max
from .minkp import MIN_RATIO, exact_dp_min, fptas_min

DEFAULT_CELL_BUDGET = 20_000_000_000

CSV_COLUMNS = (
    "kind", "n", "eps_num", "eps_den", "seed", "W", "Wprime", "Wprime_bound",
    "cells_exact", "cells_fptas", "approx_steps", "value_exact", "value_fptas",
    "opt_ratio_num", "opt_ratio_den", "time_exact_ms", "time_fptas_ms",
)


@dataclass(frozen=True)
class WorkMetrics:
    """Counted work plus instance statistics for a single solver run."""

    n: int
    total_weight: int
    dp_cells: int
    approx_steps: int
    structure_bytes: int
    total_scaled_weight: int | None = None
    epsilon: Fraction | None = None
    wall_time_ms: int | None = None


@dataclass(frozen=True)
class BenchRow:
    """One benchmark point: the same instance solved both ways."""

    kind: str
    n: int
    epsilon: Fraction
    seed: int
    exact: WorkMetrics
    scheme: WorkMetrics
    scaled_bound: int
    value_exact: int
    value_scheme: int

    @property
    def value_ratio(self) -> Fraction:
        """Scheme value over exact value (1 when the optimum is zero)."""
        if self.value_exact == 0:
            return Fraction(1)
        return Fraction(self.value_scheme, self.value_exact)

    def csv_fields(self) -> tuple[str, ...]:
        def opt(v):
            return "" if v is None else str(v)

        ratio = self.value_ratio
        return (
            self.kind,
            str(self.n),
            str(self.epsilon.numerator),
            str(self.epsilon.denominator),
            str(self.seed),
            str(self.exact.total_weight),
            opt(self.scheme.total_scaled_weight),
            str(self.scaled_bound),
            str(self.exact.dp_cells),
            str(self.scheme.dp_cells),
            str(self.scheme.approx_steps),
            str(self.value_exact),
            str(self.value_scheme),
            str(ratio.numerator),
            str(ratio.denominator),
            opt(self.exact.wall_time_ms),
            opt(self.scheme.wall_time_ms),
        )


def _timed(fn, instance, measure_time):
    start = time.perf_counter()
    report = fn(instance)
    elapsed_ms = round((time.perf_counter() - start) * 1000) if measure_time else None
    return report, elapsed_ms


def run_exact(instance: SubsetInstance, measure_time: bool = False):
    """Solve with the exact table on the raw weights; return report + metrics."""
    solver = exact_dp_min if instance.sense is Sense.MINIMIZE else exact_dp_max
    report, elapsed = _timed(solver, instance, measure_time)
    metrics = WorkMetrics(
        n=instance.n,
        total_weight=instance.total_weight(),
        dp_cells=report.dp_cells,
        approx_steps=0,
        structure_bytes=structure_bytes(instance),
        wall_time_ms=elapsed,
    )
    return report, metrics


def run_scheme(instance: SubsetInstance, epsilon: Fraction, measure_time: bool = False):
    """Run the composed scheme; return report + metrics for the whole pipeline."""
    epsilon = Fraction(epsilon)
    scheme = fptas_min if instance.sense is Sense.MINIMIZE else fptas_max
    report, elapsed = _timed(lambda inst: scheme(inst, epsilon), instance, measure_time)
    metrics = WorkMetrics(
        n=instance.n,
        total_weight=instance.total_weight(),
        dp_cells=report.dp_cells,
        approx_steps=report.approx_steps,
        structure_bytes=structure_bytes(instance),
        total_scaled_weight=report.scaled_total_weight,
        epsilon=epsilon,
        wall_time_ms=elapsed,
    )
    return report, metrics


def bench_compare(
    kind: str,
    n_list,
    epsilon_list,
    weight_max: int,
    seeds,
    *,
    size_max: int = 10,
    tightness: Fraction = Fraction(1, 2),
    cell_budget: int = DEFAULT_CELL_BUDGET,
    measure_time: bool = False,
) -> list[BenchRow]:
    """Run the comparison grid and return one row per (n, epsilon, seed).

    Every run asserts the a-priori bound on the scaled total weight.  A
    baseline whose table would exceed ``cell_budget`` cells raises
    BudgetExceeded before any work is done.
    """
    if cell_budget < 1:
        raise DomainError(f"cell budget must be positive, got {cell_budget}")
    ns = sorted(set(int(n) for n in n_list))
    epsilons = sorted(set(Fraction(e) for e in epsilon_list))
    seed_values = sorted(set(int(s) for s in seeds))
    if not ns or not epsilons or not seed_values:
        raise DomainError("n_list, epsilon_list and seeds must all be nonempty")
    ratio = MIN_RATIO if kind == "minkp" else MAX_RATIO

    rows = []
    for n in ns:
        for epsilon in epsilons:
            for seed in seed_values:
                instance = generate_instance(kind, n, weight_max, size_max, tightness, seed)
                baseline_cells = n * (instance.total_weight() + 1)
                if baseline_cells > cell_budget:
                    raise BudgetExceeded(
                        f"baseline needs {baseline_cells} cells, budget is {cell_budget}"
                    )
                exact_report, exact_metrics = run_exact(instance, measure_time)
                scheme_report, scheme_metrics = run_scheme(instance, epsilon, measure_time)
                bound = scaled_weight_bound(instance.sense, n, epsilon, ratio)
                scaled_total = scheme_metrics.total_scaled_weight
                if scaled_total is not None and scaled_total > bound:
                    raise AssertionError(
                        f"scaled total weight {scaled_total} exceeds bound {bound}"
                    )
                rows.append(
                    BenchRow(
                        kind=kind,
                        n=n,
                        epsilon=epsilon,
                        seed=seed,
                        exact=exact_metrics,
                        scheme=scheme_metrics,
                        scaled_bound=bound,
                        value_exact=exact_report.original_value,
                        value_scheme=scheme_report.original_value,
                    )
                )
    return rows


def rows_to_csv(rows) -> str:
    """Fixed-column CSV with a mandatory header row, LF line endings."""
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(",".join(row.csv_fields()) for row in rows)
    return "\n".join(lines) + "\n"
