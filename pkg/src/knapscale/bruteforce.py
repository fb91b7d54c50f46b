"""Exhaustive subset enumeration, used as the optimality oracle.

Enumeration is vectorized in chunks of bitmasks; a plain-Python loop takes
over when magnitudes could overflow 64-bit accumulation.  Ties on the
objective are broken toward the lexicographically smallest sorted index
tuple, so oracle output is deterministic and order-stable.
"""

from __future__ import annotations

import numpy as np

from .core import Sense

_CHUNK = 1 << 16
_SAFE_SUM = 1 << 62


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _best_subset_python(weights, sizes, rhs, sense):
    n = len(weights)
    covering = sense is Sense.MINIMIZE
    best_val = None
    best_key = None
    for mask in range(1 << n):
        value = 0
        load = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                value += weights[i]
                load += sizes[i]
            m >>= 1
            i += 1
        if covering:
            if load < rhs:
                continue
            better = best_val is None or value < best_val
        else:
            if load > rhs:
                continue
            better = best_val is None or value > best_val
        if better:
            best_val = value
            best_key = _mask_to_indices(mask)
        elif value == best_val:
            key = _mask_to_indices(mask)
            if key < best_key:
                best_key = key
    if best_val is None:
        return None
    return best_val, best_key


def best_subset(weights, sizes, rhs, sense: Sense):
    """Optimal (value, sorted index tuple) over all 2^n subsets, or None.

    ``sense`` decides both feasibility and direction: MINIMIZE treats ``rhs``
    as a covering demand (total size >= rhs) and minimizes total weight;
    MAXIMIZE treats it as a capacity (total size <= rhs) and maximizes.
    Returns None when no subset is feasible.
    """
    n = len(weights)
    if n == 0:
        if sense is Sense.MINIMIZE and rhs > 0:
            return None
        return 0, ()
    if sum(weights) >= _SAFE_SUM or sum(sizes) >= _SAFE_SUM or abs(rhs) >= _SAFE_SUM:
        return _best_subset_python(weights, sizes, rhs, sense)

    covering = sense is Sense.MINIMIZE
    w_arr = np.asarray(weights, dtype=np.int64)
    a_arr = np.asarray(sizes, dtype=np.int64)
    shifts = np.arange(n, dtype=np.int64)
    best_val = None
    candidates: list[int] = []
    for lo in range(0, 1 << n, _CHUNK):
        masks = np.arange(lo, min(lo + _CHUNK, 1 << n), dtype=np.int64)
        bits = (masks[:, None] >> shifts) & 1
        values = bits @ w_arr
        loads = bits @ a_arr
        feasible = loads >= rhs if covering else loads <= rhs
        if not feasible.any():
            continue
        f_values = values[feasible]
        f_masks = masks[feasible]
        chunk_best = int(f_values.min() if covering else f_values.max())
        if (
            best_val is None
            or (covering and chunk_best < best_val)
            or (not covering and chunk_best > best_val)
        ):
            best_val = chunk_best
            candidates = [int(m) for m in f_masks[f_values == chunk_best]]
        elif chunk_best == best_val:
            candidates.extend(int(m) for m in f_masks[f_values == chunk_best])
    if best_val is None:
        return None
    return best_val, min(_mask_to_indices(m) for m in candidates)
