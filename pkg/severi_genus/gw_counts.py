"""Genus-0 Gromov-Witten counts of the plane.

N_d is the number of rational plane curves of degree d through 3d-1 general
points. N_1 = 1 and, for d > 1,

    N_d = Σ_{i+j=d, i,j>0} N_i N_j ( i²j² C(3d-4, 3i-2) - i³j C(3d-4, 3i-1) )

Each N_d needs every N_e with e < d, so the values live in a GWTable that is
filled bottom-up: computing N_d fills 1..d with O(d²) big-int products in
total. Naive recursion would be exponential.
"""

from __future__ import annotations

import logging
import threading

from .errors import DegreeOutOfRangeError
from .exact_arith import ExactInt, binomial
from .models import GWTable

log = logging.getLogger(__name__)

# ── lazy-loaded singleton ─────────────────────────────────────────────────────
# One process-wide table, grown on demand. Writers hold the lock; completed
# entries are never rewritten, so readers of e <= max_degree need no lock.
_SHARED_TABLE: GWTable | None = None
_SHARED_LOCK = threading.Lock()


def kontsevich_sum(d: int, table: GWTable, reverse: bool = False) -> ExactInt:
    """Evaluate the recursion sum for N_d from the entries N_1..N_{d-1} of table.

    ``reverse`` walks i from d-1 down to 1. The summand is not symmetric in
    (i, j) but the total is, which the verify suite checks.
    """
    if d < 2:
        raise DegreeOutOfRangeError(f"the recursion sum starts at d=2, got d={d}")
    top = 3 * d - 4
    order = range(d - 1, 0, -1) if reverse else range(1, d)
    total = 0
    for i in order:
        j = d - i
        weight = i * i * j * j * binomial(top, 3 * i - 2) - i ** 3 * j * binomial(top, 3 * i - 1)
        total += table[i] * table[j] * weight
    return total


def compute_N(d: int, table: GWTable) -> ExactInt:
    """Return N_d, extending ``table`` through degree d if needed.

    This is the only function that writes to a GWTable. The genus formulas
    read a table that is already filled.
    """
    if d < 1:
        raise DegreeOutOfRangeError(f"N_d is defined for d >= 1, got d={d}")
    # N_1 = 1 seeds the recursion; every later entry needs all the earlier ones.
    if not table.values:
        table.values.append(1)
    # Single writer: callers sharing a table go through shared_table() instead.
    for e in range(table.max_degree + 1, d + 1):
        table.values.append(kontsevich_sum(e, table))
    return table[d]


def n_table(dmax: int) -> GWTable:
    """Return a fresh table holding N_1..N_dmax."""
    if dmax < 1:
        raise DegreeOutOfRangeError(f"dmax must be >= 1, got {dmax}")
    table = GWTable()
    compute_N(dmax, table)
    log.debug("filled N_1..N_%d", dmax)
    return table


def shared_table(dmax: int = 1) -> GWTable:
    """Return the process-wide table, grown to at least dmax."""
    global _SHARED_TABLE
    with _SHARED_LOCK:
        if _SHARED_TABLE is None:
            _SHARED_TABLE = GWTable()
        if _SHARED_TABLE.max_degree < dmax:
            compute_N(dmax, _SHARED_TABLE)
        return _SHARED_TABLE
