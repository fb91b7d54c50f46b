"""Approximation schemes for subset selection via exact-rational weight scaling.

Compose a pseudo-polynomial exact solver with a constant-ratio approximation:
the approximation bounds the optimum, the bound fixes a rational scaling
factor, and solving the weight-scaled instance exactly yields a certified
(1 +/- epsilon)-approximate answer at a fraction of the exact solver's work.
Instantiated end to end for minimum and maximum knapsack.
"""

from .bench import CSV_COLUMNS, WorkMetrics, bench_compare, rows_to_csv
from .core import (
    Rational,
    ScaledInstance,
    ScalingParameters,
    Sense,
    SolutionReport,
    SolverHooks,
    SubsetInstance,
    ceil_div,
    compute_scale,
    fptas,
    floor_div,
    scale_weights_max,
    scale_weights_min,
    scaled_weight_bound,
    verify_guarantee,
)
from .errors import (
    BudgetExceeded,
    DomainError,
    InfeasibleInstance,
    InstanceTooLarge,
    KnapscaleError,
    ParseError,
    ValidationError,
)
from .instances import generate_instance, parse_instance, serialize_instance, structure_bytes
from .maxkp import (
    MAX_RATIO,
    MaxKPStructure,
    approx_half_max,
    brute_force_max,
    exact_dp_max,
    fptas_max,
    max_hooks,
    max_knapsack,
)
from .minkp import (
    MIN_RATIO,
    MinKPStructure,
    approx2_min,
    brute_force_min,
    exact_dp_min,
    fptas_min,
    min_hooks,
    min_knapsack,
)

__version__ = "0.1.0"
