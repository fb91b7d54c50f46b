"""Core abstraction: weighted subset selection plus the scale-and-round scheme.

The scheme composes two solvers for the same problem:

* an exact solver whose work grows with the total weight of the instance
  (pseudo-polynomial), and
* a constant-ratio approximation used only to obtain a bound on the optimum.

The bound fixes an exact rational scaling factor.  Dividing and rounding
every weight by that factor produces a modified instance whose total weight
is polynomial in ``n`` and ``1/epsilon``; solving the modified instance
exactly and re-valuing the selection under the original weights yields a
``(1 + epsilon)`` (minimization) or ``(1 - epsilon)`` (maximization)
approximate solution.

All ratio arithmetic in this module is exact: ``epsilon``, the approximation
ratio and the scaling factor are :class:`fractions.Fraction` values, and no
float ever enters a comparison that backs the guarantee.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Callable

from .errors import DomainError, ValidationError

# Exact rational carrier for epsilon, approximation ratios and the scaling
# factor.  fractions.Fraction already guarantees lowest terms and a positive
# denominator.
Rational = Fraction


class Sense(Enum):
    """Optimization direction; selects the rounding rule applied to weights."""

    MINIMIZE = "min"
    MAXIMIZE = "max"


def ceil_div(a: int, b: int) -> int:
    """Exact ceiling of ``a / b`` for integers, ``b > 0``."""
    if b <= 0:
        raise DomainError("ceil_div requires a positive divisor")
    return -(-a // b)


def floor_div(a: int, b: int) -> int:
    """Exact floor of ``a / b`` for integers, ``b > 0``."""
    if b <= 0:
        raise DomainError("floor_div requires a positive divisor")
    return a // b


def _as_weight(value) -> int:
    try:
        w = operator.index(value)
    except TypeError:
        raise ValidationError(f"weight {value!r} is not an integer") from None
    if w < 1:
        raise ValidationError(f"weight {w} is not a positive integer")
    return w


@dataclass(frozen=True)
class SubsetInstance:
    """A ground set of positively weighted items plus a feasibility structure.

    Items are identified by their position ``0..n-1`` in ``weights``.  The
    ``structure`` payload is opaque at this layer; it decides which index
    sets are feasible and is carried through scaling untouched.
    """

    weights: tuple[int, ...]
    structure: object
    sense: Sense

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(_as_weight(w) for w in self.weights))
        if not isinstance(self.sense, Sense):
            raise ValidationError(f"sense must be a Sense, got {self.sense!r}")

    @property
    def n(self) -> int:
        return len(self.weights)

    def total_weight(self) -> int:
        return sum(self.weights)

    def value_of(self, selected) -> int:
        """Total weight of an index set under this instance's weights."""
        return sum(self.weights[i] for i in selected)


@dataclass(frozen=True)
class ScalingParameters:
    """Exact inputs and the derived scaling factor for one transformation.

    ``bound`` is the approximation value used to anchor the scale: an upper
    bound on the optimum when minimizing, a lower bound when maximizing.
    """

    sense: Sense
    n: int
    epsilon: Fraction
    ratio: Fraction
    bound: int
    scale: Fraction


@dataclass(frozen=True)
class ScaledInstance:
    """The weight-scaled twin of a base instance.

    The structure object is the very same object as in ``base``; only the
    weights differ.  ``big_items`` holds the indices whose original weight
    exceeded the sense-specific threshold and received the fixed replacement
    weight instead of a rounded one.
    """

    base: SubsetInstance
    scaled_weights: tuple[int, ...]
    total_scaled_weight: int
    params: ScalingParameters
    big_items: frozenset[int]

    def as_instance(self) -> SubsetInstance:
        return SubsetInstance(self.scaled_weights, self.base.structure, self.base.sense)


@dataclass(frozen=True)
class SolutionReport:
    """A solver's answer: the chosen index set plus its certificate.

    ``original_value`` is always recomputed from the weights of the instance
    the report answers for, never from scaled weights.  ``guarantee`` is the
    proven multiplicative factor relative to the optimum (1 for exact
    solvers, the ratio for approximations, ``1 +/- epsilon`` for the scheme).
    ``dp_cells`` and ``approx_steps`` carry counted work for benchmarking;
    ``scaled_total_weight`` is filled only when a scaled instance was solved
    on the way to this report.
    """

    selected: frozenset[int]
    original_value: int
    feasible: bool
    guarantee: Fraction
    bound_used: int | None = None
    dp_cells: int = 0
    approx_steps: int = 0
    scaled_total_weight: int | None = None


@dataclass(frozen=True)
class SolverHooks:
    """The two algorithms the scheme composes.

    ``exact`` must return an optimal report for every instance it accepts
    and is assumed pseudo-polynomial in the total weight.  ``approx`` must
    return a feasible report whose value is within ``ratio`` of the optimum:
    at most ``ratio * OPT`` when minimizing (``ratio > 1``), at least
    ``ratio * OPT`` when maximizing (``0 < ratio < 1``).
    """

    exact: Callable[[SubsetInstance], SolutionReport]
    approx: Callable[[SubsetInstance], SolutionReport]
    ratio: Fraction


def _check_ranges(sense: Sense, epsilon: Fraction, ratio: Fraction) -> None:
    if epsilon <= 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    if sense is Sense.MINIMIZE:
        if ratio <= 1:
            raise DomainError(f"minimization needs an approximation ratio > 1, got {ratio}")
    else:
        if not 0 < ratio < 1:
            raise DomainError(f"maximization needs a ratio strictly between 0 and 1, got {ratio}")
        if epsilon >= 1:
            raise DomainError(f"maximization needs epsilon < 1, got {epsilon}")


def compute_scale(
    sense: Sense, n: int, epsilon: Fraction, ratio: Fraction, bound: int
) -> ScalingParameters:
    """Derive the exact scaling factor from the approximation bound.

    Minimizing: ``scale = (epsilon / ratio) * bound / n`` with ``bound`` an
    upper bound on the optimum.  Maximizing: ``scale = epsilon * bound / n``
    with ``bound`` a lower bound.  The factor is zero iff ``bound`` is zero.
    """
    epsilon = Fraction(epsilon)
    ratio = Fraction(ratio)
    _check_ranges(sense, epsilon, ratio)
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if bound < 0:
        raise DomainError(f"bound must be nonnegative, got {bound}")
    if sense is Sense.MINIMIZE:
        scale = (epsilon / ratio) * Fraction(bound, n)
    else:
        scale = epsilon * Fraction(bound, n)
    return ScalingParameters(sense, n, epsilon, ratio, bound, scale)


def scale_weights_min(instance: SubsetInstance, params: ScalingParameters) -> ScaledInstance:
    """Round weights up for a minimization instance.

    Items with weight at most the upper bound get ``ceil(w / scale)``.  Any
    heavier item provably cannot occur in an optimal solution, so it receives
    the fixed weight ``ceil(bound / scale) + n + 1`` which exceeds the total
    scaled weight of every optimal selection.
    """
    if instance.sense is not Sense.MINIMIZE or params.sense is not Sense.MINIMIZE:
        raise DomainError("scale_weights_min requires a minimization instance")
    if params.n != instance.n:
        raise DomainError(f"params were derived for n={params.n}, instance has n={instance.n}")
    if params.scale <= 0:
        raise DomainError("scaling factor must be positive (bound was zero?)")
    upper = params.bound
    penalty = math.ceil(Fraction(upper) / params.scale) + params.n + 1
    scaled = []
    big = []
    for i, w in enumerate(instance.weights):
        if w <= upper:
            scaled.append(math.ceil(Fraction(w) / params.scale))
        else:
            scaled.append(penalty)
            big.append(i)
    return ScaledInstance(instance, tuple(scaled), sum(scaled), params, frozenset(big))


def scale_weights_max(instance: SubsetInstance, params: ScalingParameters) -> ScaledInstance:
    """Round weights down for a maximization instance.

    Items with weight at most ``bound / ratio`` get ``floor(w / scale)``,
    clamped up to 1 so the result stays a valid positive-integer instance.
    Heavier items can appear in no feasible solution at all and are assigned
    weight 1.
    """
    if instance.sense is not Sense.MAXIMIZE or params.sense is not Sense.MAXIMIZE:
        raise DomainError("scale_weights_max requires a maximization instance")
    if params.n != instance.n:
        raise DomainError(f"params were derived for n={params.n}, instance has n={instance.n}")
    if params.scale <= 0:
        raise DomainError("scaling factor must be positive (bound was zero?)")
    threshold = Fraction(params.bound) / params.ratio
    scaled = []
    big = []
    for i, w in enumerate(instance.weights):
        if w <= threshold:
            scaled.append(max(math.floor(Fraction(w) / params.scale), 1))
        else:
            scaled.append(1)
            big.append(i)
    return ScaledInstance(instance, tuple(scaled), sum(scaled), params, frozenset(big))


def scaled_weight_bound(sense: Sense, n: int, epsilon: Fraction, ratio: Fraction) -> int:
    """A-priori bound on the total scaled weight, independent of the instance.

    Minimizing: ``n * (ceil(ratio * n / epsilon) + n + 1)`` (the ceiling
    mirrors the integer replacement weight).  Maximizing:
    ``n * floor(n / (epsilon * ratio)) + n``.
    """
    epsilon = Fraction(epsilon)
    ratio = Fraction(ratio)
    _check_ranges(sense, epsilon, ratio)
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if sense is Sense.MINIMIZE:
        return n * (math.ceil(ratio * n / epsilon) + n + 1)
    return n * math.floor(Fraction(n) / (epsilon * ratio)) + n


def fptas(instance: SubsetInstance, epsilon: Fraction, hooks: SolverHooks) -> SolutionReport:
    """Run the composed scheme on one instance.

    Pipeline: obtain the bound from ``hooks.approx``; derive the scaling
    factor; build the scaled instance; solve it with ``hooks.exact``; re-value
    the returned index set under the original weights.  Two short-circuits
    keep the result exact instead of merely approximate:

    * a zero bound certifies that the approximate solution is optimal, and
    * a scaling factor of at most 1 would not shrink the instance, so the
      exact solver is applied to the original weights directly.
    """
    epsilon = Fraction(epsilon)
    _check_ranges(instance.sense, epsilon, hooks.ratio)
    minimizing = instance.sense is Sense.MINIMIZE
    guarantee = 1 + epsilon if minimizing else 1 - epsilon

    approx_report = hooks.approx(instance)
    bound = approx_report.original_value
    if bound == 0:
        return replace(approx_report, guarantee=guarantee, bound_used=0)

    params = compute_scale(instance.sense, instance.n, epsilon, hooks.ratio, bound)
    if params.scale <= 1:
        exact_report = hooks.exact(instance)
        return replace(
            exact_report,
            guarantee=guarantee,
            bound_used=bound,
            approx_steps=approx_report.approx_steps,
        )

    if minimizing:
        scaled = scale_weights_min(instance, params)
    else:
        scaled = scale_weights_max(instance, params)
    exact_report = hooks.exact(scaled.as_instance())
    if minimizing and not scaled.big_items.isdisjoint(exact_report.selected):
        raise AssertionError("optimal scaled solution contains an excluded oversized item")
    return SolutionReport(
        selected=exact_report.selected,
        original_value=instance.value_of(exact_report.selected),
        feasible=True,
        guarantee=guarantee,
        bound_used=bound,
        dp_cells=exact_report.dp_cells,
        approx_steps=approx_report.approx_steps,
        scaled_total_weight=scaled.total_scaled_weight,
    )


def verify_guarantee(
    report: SolutionReport, opt: int, sense: Sense, epsilon: Fraction
) -> bool:
    """Check a report against the true optimum, in exact rational arithmetic."""
    epsilon = Fraction(epsilon)
    value = Fraction(report.original_value)
    if sense is Sense.MINIMIZE:
        return value <= (1 + epsilon) * opt
    return value >= (1 - epsilon) * opt
