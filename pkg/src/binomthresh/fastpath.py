"""Certified floating-point fast path for the threshold predicate.

The exact comparison ``d * C(n,k) > 2**n`` is equivalent to

    ln C(n,k) + ln d - n ln 2 > 0.

Evaluating the left side in double precision is O(1) given a table of
ln(i!), but a bare float comparison could misclassify near-ties.  The fast
path therefore tracks a rigorous upper bound E on the total rounding error
and answers only when the computed margin clears E:

    d >  E   ->  definitely above   (exact predicate is true)
    d < -E   ->  definitely not above
    else     ->  uncertain          (caller falls back to exact integers)

Soundness never depends on tight constants: every allowance below is a
deliberate over-estimate.  An exact tie (d = 0 analytically, e.g.
4 * C(4,1) == 2**4) always lands in [-E, E] because E > 0, so the strict
inequality is never decided by the float path in the tie case.
"""

from __future__ import annotations

import enum
import math
import sys
import threading
from array import array
from dataclasses import dataclass, field

from . import exact
from .errors import DomainError, ResourceLimitError
from .exact import ThresholdKind

EPS = sys.float_info.epsilon  # 2**-52
LN2 = math.log(2.0)

# Two float64 arrays per table entry.
_BYTES_PER_ENTRY = 16
DEFAULT_MEMORY_BUDGET = 512 * 1024 * 1024  # bytes; ~33.5 million entries


class Certainty(enum.Enum):
    DEFINITELY_ABOVE = "definitely-above"
    DEFINITELY_NOT_ABOVE = "definitely-not-above"
    UNCERTAIN = "uncertain"


@dataclass(frozen=True)
class FastVerdict:
    """Outcome of a certified float comparison.

    ``margin`` is the signed certified distance in natural-log units: the
    amount by which the computed difference cleared the error bound
    (positive for DEFINITELY_ABOVE, negative for DEFINITELY_NOT_ABOVE,
    0.0 for UNCERTAIN).
    """

    variant: Certainty
    margin: float

    @property
    def is_definite(self) -> bool:
        return self.variant is not Certainty.UNCERTAIN


@dataclass(frozen=True)
class LogFactorialTable:
    """Table of ln(i!) values with per-entry cumulative rounding bounds.

    ``logs[i]`` approximates ln(i!); the true value lies within
    ``[logs[i] - bounds[i], logs[i] + bounds[i]]``.  Bounds are
    non-decreasing in i.  Immutable after construction; safe for concurrent
    readers.
    """

    max_n: int
    logs: array = field(repr=False)
    bounds: array = field(repr=False)

    def entry(self, i: int) -> tuple[float, float]:
        """(log-value, cumulative-error-bound) for index i."""
        return self.logs[i], self.bounds[i]


def build_table(max_n: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> LogFactorialTable:
    """Accumulate ln(i!) for i = 0..max_n with compensated summation.

    Each step adds ln(i) via Kahan summation and charges a conservative
    allowance of 4 ulp of the running magnitude to the cumulative error
    bound.  That over-covers both the compensated-summation error and the
    rounding of math.log itself (each at most ~1 ulp per step relative to
    the running sum, since ln(i) <= ln(i!) for i >= 2).
    """
    if max_n < 0:
        raise DomainError(f"max_n={max_n} must be >= 0")
    need = (max_n + 1) * _BYTES_PER_ENTRY
    if need > memory_budget:
        raise ResourceLimitError(
            f"table for max_n={max_n} needs {need} bytes, budget is {memory_budget}"
        )
    logs = array("d", [0.0]) * (max_n + 1)
    bounds = array("d", [0.0]) * (max_n + 1)
    total = 0.0
    comp = 0.0
    bound = 0.0
    for i in range(1, max_n + 1):
        y = math.log(i) - comp
        t = total + y
        comp = (t - total) - y
        total = t
        bound += 4.0 * EPS * abs(total)
        logs[i] = total
        bounds[i] = bound
    return LogFactorialTable(max_n=max_n, logs=logs, bounds=bounds)


def compare_fast(n: int, k: int, kind: ThresholdKind, table: LogFactorialTable) -> FastVerdict:
    """Certified three-way comparison of C(n,k) against 2**n / denominator.

    Computes d = [ln(n!) - ln(k!) - ln((n-k)!)] + ln(denominator) - n ln 2
    in double precision and a rigorous error bound E.  E combines the three
    table bounds with 8 ulp of M, where M bounds the magnitude of every
    intermediate (at most 7 roundings occur: two subtractions, one log, one
    multiply whose constant carries <= 1/2 ulp scaled by n, one add, one
    subtract).
    """
    if n < exact.MIN_N:
        raise DomainError(f"n={n}: threshold sequences are defined for n >= {exact.MIN_N}")
    if n > table.max_n:
        raise DomainError(f"n={n} exceeds table coverage (max_n={table.max_n})")
    if k < 0 or k > n:
        raise DomainError(f"k={k} out of range for n={n}: need 0 <= k <= n")
    logs = table.logs
    ln_den = math.log(kind.denominator(n))
    ln_pow2 = n * LN2
    d = (logs[n] - logs[k] - logs[n - k]) + ln_den - ln_pow2
    m = logs[n] + ln_den + ln_pow2
    e = table.bounds[n] + table.bounds[k] + table.bounds[n - k] + 8.0 * EPS * m
    if d > e:
        return FastVerdict(Certainty.DEFINITELY_ABOVE, d - e)
    if d < -e:
        return FastVerdict(Certainty.DEFINITELY_NOT_ABOVE, d + e)
    return FastVerdict(Certainty.UNCERTAIN, 0.0)


def exceeds_hybrid(n: int, k: int, kind: ThresholdKind, table: LogFactorialTable) -> bool:
    """Threshold predicate via the fast path, exact integers on uncertainty.

    Always equal to exact.exceeds(n, k, kind); the fast path merely avoids
    the big-integer work whenever its certified margin is decisive.
    """
    verdict = compare_fast(n, k, kind, table)
    if verdict.variant is Certainty.DEFINITELY_ABOVE:
        return True
    if verdict.variant is Certainty.DEFINITELY_NOT_ABOVE:
        return False
    return exact.exceeds(n, k, kind)


# One table per process, grown geometrically and shared read-only.  Workers
# only ever read a fully built table: construction happens under the lock and
# the reference swap is atomic.
_shared_lock = threading.Lock()
_shared_table: LogFactorialTable | None = None


def shared_table(min_n: int) -> LogFactorialTable:
    """Process-wide table covering at least min_n, rebuilt only on growth."""
    global _shared_table
    table = _shared_table
    if table is not None and table.max_n >= min_n:
        return table
    with _shared_lock:
        table = _shared_table
        if table is None or table.max_n < min_n:
            target = max(min_n, 2 * (table.max_n if table else 0), 1024)
            table = build_table(target)
            _shared_table = table
    return table
