"""Minimum knapsack: cover a demand at minimum total weight.

Provides the exact dynamic program (pseudo-polynomial in the total weight),
a quadratic-time factor-2 greedy used as the bound provider, the exhaustive
oracle, and the composed approximation scheme with those hooks.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bruteforce import best_subset
from .core import Sense, SolutionReport, SolverHooks, SubsetInstance, fptas
from .errors import InfeasibleInstance, InstanceTooLarge, ValidationError

# Tables with at most this many cells run on the plain-Python reference path;
# larger ones use the vectorized rolling table with split-based recovery.
_SMALL_TABLE_CELLS = 4096
_NUMPY_VALUE_LIMIT = 1 << 62

MIN_RATIO = Fraction(2)


@dataclass(frozen=True)
class MinKPStructure:
    """A single covering constraint: selected sizes must total at least demand."""

    sizes: tuple[int, ...]
    demand: int

    def __post_init__(self):
        sizes = tuple(operator.index(a) for a in self.sizes)
        if any(a < 1 for a in sizes):
            raise ValidationError("item sizes must be positive integers")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "demand", operator.index(self.demand))
        if self.demand < 0:
            raise ValidationError(f"demand must be nonnegative, got {self.demand}")

    def is_feasible(self, selected) -> bool:
        return sum(self.sizes[i] for i in selected) >= self.demand

    def encoded_bytes(self) -> int:
        """Byte length of the constraint coefficients plus right-hand side."""
        body = " ".join(str(a) for a in self.sizes)
        return len(f"{body} {self.demand}" if body else str(self.demand))


def min_knapsack(weights, sizes, demand: int) -> SubsetInstance:
    """Build a validated minimization instance from parallel item lists."""
    weights = tuple(weights)
    sizes = tuple(sizes)
    if len(weights) != len(sizes):
        raise ValidationError(f"{len(weights)} weights but {len(sizes)} sizes")
    return SubsetInstance(weights, MinKPStructure(sizes, demand), Sense.MINIMIZE)


def _require_min(instance: SubsetInstance) -> MinKPStructure:
    structure = instance.structure
    if not isinstance(structure, MinKPStructure) or instance.sense is not Sense.MINIMIZE:
        raise ValidationError("expected a minimum-knapsack instance")
    if len(structure.sizes) != instance.n:
        raise ValidationError(
            f"structure has {len(structure.sizes)} sizes for {instance.n} items"
        )
    return structure


def _solve_min_python(weights, sizes, demand):
    """Full table with per-item decision bitsets; exact big-int arithmetic.

    Coverage entries are capped at the demand, which leaves the feasibility
    threshold untouched while keeping every entry small.  Backtracking takes
    an item only when it strictly improved the entry, so ties prefer
    exclusion and the selection is deterministic.
    """
    total = sum(weights)
    dp = [0] * (total + 1)
    rows = []
    for w, a in zip(weights, sizes):
        prev = dp
        cur = prev.copy()
        bits = 0
        for c in range(w, total + 1):
            cand = prev[c - w] + a
            if cand > demand:
                cand = demand
            if cand > cur[c]:
                cur[c] = cand
                bits |= 1 << c
        rows.append(bits)
        dp = cur
    cost = 0
    while dp[cost] < demand:
        cost += 1
    selected = []
    for i in range(len(weights) - 1, -1, -1):
        if (rows[i] >> cost) & 1:
            selected.append(i)
            cost -= weights[i]
    return frozenset(selected)


def _cover_table(weights, sizes, budget, cap, dtype):
    """Rolling array: entry c = best coverage (capped) with weight <= c."""
    dp = np.zeros(budget + 1, dtype=dtype)
    for w, a in zip(weights, sizes):
        if w > budget:
            continue
        shifted = dp[:-w] + a
        np.minimum(shifted, cap, out=shifted)
        np.maximum(dp[w:], shifted, out=dp[w:])
    return dp


def _recover_min(weights, sizes, lo, hi, budget, need, dtype, out):
    """Append indices of a subset of items[lo:hi] with weight <= budget
    covering need, by recursive halving of the item range."""
    if need <= 0:
        return
    count = hi - lo
    if count == 1:
        if weights[lo] > budget or sizes[lo] < need:
            raise AssertionError("selection recovery lost feasibility")
        out.append(lo)
        return
    if count * (budget + 1) <= _SMALL_TABLE_CELLS:
        sub = _solve_min_python(weights[lo:hi], sizes[lo:hi], need)
        if sum(weights[lo + i] for i in sub) > budget:
            raise AssertionError("selection recovery lost feasibility")
        out.extend(lo + i for i in sub)
        return
    mid = (lo + hi) // 2
    left = _cover_table(weights[lo:mid], sizes[lo:mid], budget, need, dtype)
    right = _cover_table(weights[mid:hi], sizes[mid:hi], budget, need, dtype)
    combined = left.astype(np.int64) + right[::-1].astype(np.int64)
    split = int(np.argmax(combined >= need))
    if combined[split] < need:
        raise AssertionError("selection recovery lost feasibility")
    need_left = int(left[split])
    del left, right, combined
    _recover_min(weights, sizes, lo, mid, split, need_left, dtype, out)
    _recover_min(weights, sizes, mid, hi, budget - split, need - need_left, dtype, out)


def _solve_min_numpy(weights, sizes, demand):
    total = sum(weights)
    reach = demand + max(sizes)
    dtype = np.int32 if reach <= np.iinfo(np.int32).max else np.int64
    dp = _cover_table(weights, sizes, total, demand, dtype)
    best_cost = int(np.argmax(dp >= demand))
    del dp
    selected: list[int] = []
    _recover_min(weights, sizes, 0, len(weights), best_cost, demand, dtype, selected)
    return frozenset(selected)


def exact_dp_min(instance: SubsetInstance) -> SolutionReport:
    """Minimum-weight feasible subset via the cost-indexed dynamic program.

    The table spans costs 0..W, so the counted work is always n * (W + 1)
    cells regardless of internal shortcuts.
    """
    structure = _require_min(instance)
    cells = instance.n * (instance.total_weight() + 1)
    if structure.demand == 0:
        return SolutionReport(frozenset(), 0, True, Fraction(1), dp_cells=cells)
    if sum(structure.sizes) < structure.demand:
        raise InfeasibleInstance(
            f"total size {sum(structure.sizes)} cannot cover demand {structure.demand}"
        )
    weights = list(instance.weights)
    sizes = list(structure.sizes)
    if cells <= _SMALL_TABLE_CELLS or structure.demand + max(sizes) >= _NUMPY_VALUE_LIMIT:
        selected = _solve_min_python(weights, sizes, structure.demand)
    else:
        selected = _solve_min_numpy(weights, sizes, structure.demand)
    return SolutionReport(
        selected, instance.value_of(selected), True, Fraction(1), dp_cells=cells
    )


def approx2_min(instance: SubsetInstance) -> SolutionReport:
    """Greedy covering by truncated density; value within factor 2 of optimal.

    Repeatedly picks the unselected item minimizing weight / min(size,
    residual demand), comparing exactly by cross multiplication.  Ties go to
    the smaller index.  At most n rounds of n candidate scans.
    """
    structure = _require_min(instance)
    demand = structure.demand
    if demand == 0:
        return SolutionReport(frozenset(), 0, True, MIN_RATIO, approx_steps=0)
    if sum(structure.sizes) < demand:
        raise InfeasibleInstance(
            f"total size {sum(structure.sizes)} cannot cover demand {demand}"
        )
    weights = instance.weights
    sizes = structure.sizes
    remaining = demand
    chosen: list[int] = []
    in_use = [False] * instance.n
    steps = 0
    while remaining > 0:
        best = -1
        best_w = 0
        best_t = 1
        for i in range(instance.n):
            if in_use[i]:
                continue
            steps += 1
            truncated = min(sizes[i], remaining)
            if best < 0 or weights[i] * best_t < best_w * truncated:
                best, best_w, best_t = i, weights[i], truncated
        chosen.append(best)
        in_use[best] = True
        remaining -= sizes[best]
    selected = frozenset(chosen)
    return SolutionReport(
        selected, instance.value_of(selected), True, MIN_RATIO, approx_steps=steps
    )


def brute_force_min(instance: SubsetInstance) -> SolutionReport:
    """Exhaustive oracle; guards against exponential blowup at n > 25."""
    structure = _require_min(instance)
    if instance.n > 25:
        raise InstanceTooLarge(f"brute force refuses n = {instance.n} > 25")
    result = best_subset(instance.weights, structure.sizes, structure.demand, Sense.MINIMIZE)
    if result is None:
        raise InfeasibleInstance(
            f"total size {sum(structure.sizes)} cannot cover demand {structure.demand}"
        )
    value, indices = result
    return SolutionReport(frozenset(indices), value, True, Fraction(1))


def min_hooks() -> SolverHooks:
    return SolverHooks(exact=exact_dp_min, approx=approx2_min, ratio=MIN_RATIO)


def fptas_min(instance: SubsetInstance, epsilon) -> SolutionReport:
    """The composed scheme with the exact table and greedy hooks (ratio 2)."""
    return fptas(instance, epsilon, min_hooks())
