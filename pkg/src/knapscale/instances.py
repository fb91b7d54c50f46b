"""Instance text format, serialization and seeded random generation.

Format: first line is ``minkp <n> <demand>`` or ``maxkp <n> <capacity>``;
each of the following n lines is ``<weight> <size>``.  All tokens are
base-10 integers, lines end with LF.  ``parse_instance`` and
``serialize_instance`` are exact inverses on every valid instance.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import Sense, SubsetInstance
from .errors import DomainError, ParseError
from .maxkp import MaxKPStructure, max_knapsack
from .minkp import MinKPStructure, min_knapsack

KINDS = ("minkp", "maxkp")


def kind_of(instance: SubsetInstance) -> str:
    return "minkp" if instance.sense is Sense.MINIMIZE else "maxkp"


def _int_token(token: str, line: int, what: str) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not a base-10 integer", line) from None


def parse_instance(text: str) -> SubsetInstance:
    """Parse instance text, reporting the offending line on syntax errors.

    Range violations (zero weights, negative demand, ...) surface as
    ValidationError from instance construction rather than ParseError.
    """
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise ParseError("missing header", 1)
    header = lines[0].split()
    if len(header) != 3:
        raise ParseError(f"expected 'minkp|maxkp <n> <rhs>', got {lines[0]!r}", 1)
    kind = header[0]
    if kind not in KINDS:
        raise ParseError(f"unknown problem kind {kind!r}", 1)
    n = _int_token(header[1], 1, "item count")
    rhs = _int_token(header[2], 1, "right-hand side")
    if n < 0:
        raise ParseError(f"item count {n} is negative", 1)
    weights = []
    sizes = []
    for k in range(n):
        line_no = k + 2
        if line_no > len(lines) or not lines[line_no - 1].strip():
            raise ParseError(f"expected item line {k + 1} of {n}", line_no)
        tokens = lines[line_no - 1].split()
        if len(tokens) != 2:
            raise ParseError(f"expected '<weight> <size>', got {lines[line_no - 1]!r}", line_no)
        weights.append(_int_token(tokens[0], line_no, "weight"))
        sizes.append(_int_token(tokens[1], line_no, "size"))
    for extra in range(n + 1, len(lines)):
        if lines[extra].strip():
            raise ParseError(f"unexpected trailing content {lines[extra]!r}", extra + 1)
    if kind == "minkp":
        return min_knapsack(weights, sizes, rhs)
    return max_knapsack(weights, sizes, rhs)


def serialize_instance(instance: SubsetInstance) -> str:
    """Render an instance in the text format, LF-terminated."""
    structure = instance.structure
    if isinstance(structure, MinKPStructure):
        rhs = structure.demand
    elif isinstance(structure, MaxKPStructure):
        rhs = structure.capacity
    else:
        raise DomainError(f"cannot serialize structure of type {type(structure).__name__}")
    out = [f"{kind_of(instance)} {instance.n} {rhs}"]
    out.extend(f"{w} {a}" for w, a in zip(instance.weights, structure.sizes))
    return "\n".join(out) + "\n"


def structure_bytes(instance: SubsetInstance) -> int:
    """Encoded byte length of the feasibility structure (its coefficients
    and right-hand side in decimal)."""
    return instance.structure.encoded_bytes()


def generate_instance(
    kind: str,
    n: int,
    weight_max: int,
    size_max: int,
    tightness: Fraction,
    seed: int,
) -> SubsetInstance:
    """Seeded uniform instance: weights and sizes on [1, max], right-hand
    side = round(tightness * total size).  Identical seeds give identical
    instances."""
    if kind not in KINDS:
        raise DomainError(f"kind must be one of {KINDS}, got {kind!r}")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if weight_max < 1 or size_max < 1:
        raise DomainError("weight_max and size_max must be at least 1")
    tightness = Fraction(tightness)
    if not 0 < tightness <= 1:
        raise DomainError(f"tightness must be in (0, 1], got {tightness}")
    rng = random.Random(seed)
    weights = [rng.randint(1, weight_max) for _ in range(n)]
    sizes = [rng.randint(1, size_max) for _ in range(n)]
    rhs = round(tightness * sum(sizes))
    if kind == "minkp":
        return min_knapsack(weights, sizes, rhs)
    return max_knapsack(weights, sizes, rhs)
