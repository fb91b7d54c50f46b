"""Maximum knapsack: pack a capacity at maximum total weight.

Mirrors the minimization module: profit-indexed exact dynamic program,
density greedy with a best-single-item fallback as the half-ratio bound
provider, exhaustive oracle, and the composed scheme.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bruteforce import best_subset
from .core import Sense, SolutionReport, SolverHooks, SubsetInstance, fptas
from .errors import InstanceTooLarge, ValidationError

_SMALL_TABLE_CELLS = 4096
_NUMPY_VALUE_LIMIT = 1 << 62

MAX_RATIO = Fraction(1, 2)


@dataclass(frozen=True)
class MaxKPStructure:
    """A single packing constraint: selected sizes must total at most capacity."""

    sizes: tuple[int, ...]
    capacity: int

    def __post_init__(self):
        sizes = tuple(operator.index(a) for a in self.sizes)
        if any(a < 1 for a in sizes):
            raise ValidationError("item sizes must be positive integers")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "capacity", operator.index(self.capacity))
        if self.capacity < 0:
            raise ValidationError(f"capacity must be nonnegative, got {self.capacity}")

    def is_feasible(self, selected) -> bool:
        return sum(self.sizes[i] for i in selected) <= self.capacity

    def encoded_bytes(self) -> int:
        body = " ".join(str(a) for a in self.sizes)
        return len(f"{body} {self.capacity}" if body else str(self.capacity))


def max_knapsack(weights, sizes, capacity: int) -> SubsetInstance:
    """Build a validated maximization instance from parallel item lists."""
    weights = tuple(weights)
    sizes = tuple(sizes)
    if len(weights) != len(sizes):
        raise ValidationError(f"{len(weights)} weights but {len(sizes)} sizes")
    return SubsetInstance(weights, MaxKPStructure(sizes, capacity), Sense.MAXIMIZE)


def _require_max(instance: SubsetInstance) -> MaxKPStructure:
    structure = instance.structure
    if not isinstance(structure, MaxKPStructure) or instance.sense is not Sense.MAXIMIZE:
        raise ValidationError("expected a maximum-knapsack instance")
    if len(structure.sizes) != instance.n:
        raise ValidationError(
            f"structure has {len(structure.sizes)} sizes for {instance.n} items"
        )
    return structure


def _solve_max_python(weights, sizes, capacity):
    """Reference table: entry p = minimum size reaching profit exactly p.

    The sentinel exceeds both the capacity and the total size, so it can
    never masquerade as a feasible entry.  Take-bits are set only on strict
    improvement, so backtracking prefers exclusion on ties.
    """
    total = sum(weights)
    sentinel = max(sum(sizes), capacity) + 1
    dp = [sentinel] * (total + 1)
    dp[0] = 0
    rows = []
    for w, a in zip(weights, sizes):
        prev = dp
        cur = prev.copy()
        bits = 0
        for p in range(w, total + 1):
            base = prev[p - w]
            if base >= sentinel:
                continue
            cand = base + a
            if cand < cur[p]:
                cur[p] = cand
                bits |= 1 << p
        rows.append(bits)
        dp = cur
    profit = max(p for p in range(total + 1) if dp[p] <= capacity)
    selected = []
    p = profit
    for i in range(len(weights) - 1, -1, -1):
        if (rows[i] >> p) & 1:
            selected.append(i)
            p -= weights[i]
    return frozenset(selected)


def _pack_table(weights, sizes, profit_budget, sentinel, dtype):
    """Rolling array: entry p = min size (sentinel-capped) at profit exactly p."""
    dp = np.full(profit_budget + 1, sentinel, dtype=dtype)
    dp[0] = 0
    for w, a in zip(weights, sizes):
        if w > profit_budget:
            continue
        shifted = dp[:-w] + a
        np.minimum(shifted, sentinel, out=shifted)
        np.minimum(dp[w:], shifted, out=dp[w:])
    return dp


def _recover_max(weights, sizes, lo, hi, profit, size_budget, sentinel, dtype, out):
    """Append indices of a subset of items[lo:hi] with weight exactly
    ``profit`` and size within ``size_budget``."""
    if profit == 0:
        return
    count = hi - lo
    if count == 1:
        if weights[lo] != profit or sizes[lo] > size_budget:
            raise AssertionError("selection recovery lost feasibility")
        out.append(lo)
        return
    if count * (sum(weights[lo:hi]) + 1) <= _SMALL_TABLE_CELLS:
        sub = _solve_max_python(weights[lo:hi], sizes[lo:hi], size_budget)
        if sum(weights[lo + i] for i in sub) != profit:
            raise AssertionError("selection recovery lost feasibility")
        out.extend(lo + i for i in sub)
        return
    mid = (lo + hi) // 2
    left = _pack_table(weights[lo:mid], sizes[lo:mid], profit, sentinel, dtype)
    right = _pack_table(weights[mid:hi], sizes[mid:hi], profit, sentinel, dtype)
    combined = left.astype(np.int64) + right[::-1].astype(np.int64)
    split = int(np.argmax(combined <= size_budget))
    if combined[split] > size_budget:
        raise AssertionError("selection recovery lost feasibility")
    size_left = int(left[split])
    del left, right, combined
    _recover_max(weights, sizes, lo, mid, split, size_left, sentinel, dtype, out)
    _recover_max(weights, sizes, mid, hi, profit - split, size_budget - size_left,
                 sentinel, dtype, out)


def _solve_max_numpy(weights, sizes, capacity):
    total = sum(weights)
    sentinel = max(sum(sizes), capacity) + 1
    reach = sentinel + max(sizes)
    dtype = np.int32 if reach <= np.iinfo(np.int32).max else np.int64
    dp = _pack_table(weights, sizes, total, sentinel, dtype)
    profit = total - int(np.argmax((dp <= capacity)[::-1]))
    del dp
    if profit == 0:
        return frozenset()
    selected: list[int] = []
    _recover_max(weights, sizes, 0, len(weights), profit, capacity, sentinel, dtype, selected)
    return frozenset(selected)


def exact_dp_max(instance: SubsetInstance) -> SolutionReport:
    """Maximum-weight packing via the profit-indexed dynamic program.

    Never infeasible: the empty selection packs any capacity.  Counted work
    is n * (W + 1) cells, the full extent of the profit table.
    """
    structure = _require_max(instance)
    cells = instance.n * (instance.total_weight() + 1)
    if instance.n == 0:
        return SolutionReport(frozenset(), 0, True, Fraction(1), dp_cells=cells)
    weights = list(instance.weights)
    sizes = list(structure.sizes)
    sentinel_reach = max(sum(sizes), structure.capacity) + 1 + max(sizes)
    if cells <= _SMALL_TABLE_CELLS or sentinel_reach >= _NUMPY_VALUE_LIMIT:
        selected = _solve_max_python(weights, sizes, structure.capacity)
    else:
        selected = _solve_max_numpy(weights, sizes, structure.capacity)
    return SolutionReport(
        selected, instance.value_of(selected), True, Fraction(1), dp_cells=cells
    )


def approx_half_max(instance: SubsetInstance) -> SolutionReport:
    """Density greedy or the best single fitting item, whichever is heavier.

    The better of the two is always at least half the optimum.  Density ties
    are broken by smaller index.
    """
    structure = _require_max(instance)
    capacity = structure.capacity
    weights = instance.weights
    sizes = structure.sizes
    order = sorted(range(instance.n), key=lambda i: (Fraction(-weights[i], sizes[i]), i))
    steps = instance.n
    remaining = capacity
    greedy: list[int] = []
    for i in order:
        steps += 1
        if sizes[i] <= remaining:
            greedy.append(i)
            remaining -= sizes[i]
    greedy_value = sum(weights[i] for i in greedy)
    single = -1
    single_value = 0
    for i in range(instance.n):
        steps += 1
        if sizes[i] <= capacity and weights[i] > single_value:
            single, single_value = i, weights[i]
    if greedy_value >= single_value:
        selected, value = frozenset(greedy), greedy_value
    else:
        selected, value = frozenset([single]), single_value
    return SolutionReport(selected, value, True, MAX_RATIO, approx_steps=steps)


def brute_force_max(instance: SubsetInstance) -> SolutionReport:
    """Exhaustive oracle; guards against exponential blowup at n > 25."""
    structure = _require_max(instance)
    if instance.n > 25:
        raise InstanceTooLarge(f"brute force refuses n = {instance.n} > 25")
    value, indices = best_subset(
        instance.weights, structure.sizes, structure.capacity, Sense.MAXIMIZE
    )
    return SolutionReport(frozenset(indices), value, True, Fraction(1))


def max_hooks() -> SolverHooks:
    return SolverHooks(exact=exact_dp_max, approx=approx_half_max, ratio=MAX_RATIO)


def fptas_max(instance: SubsetInstance, epsilon) -> SolutionReport:
    """The composed scheme with the exact table and greedy hooks (ratio 1/2)."""
    return fptas(instance, epsilon, max_hooks())
