"""Asymptotic approximation of f(n), residual statistics, and central-third
binomial bounds.

The closed-form approximation

    approx(n) = n/2 - (1/2) * sqrt(n * ln(2n/pi))

tracks f(n) to within an additive constant; this module computes residuals
f(n) - approx(n) and their summary band, which is how that bounded-error
claim is made falsifiable (no explicit constant is available, so the band is
established empirically and then required to stay put on larger ranges).

Also here: the two-sided bound check for the central-third coefficient,

    0.375 * 1.88**n / n  <  C(n, n/3)  <  0.85 * 1.89**n / sqrt(n)

for n a positive multiple of 3.  The comparison runs in the certified log
domain first; when a margin is too small to certify, the decision falls back
to a single exact integer comparison, possible because the four constants
are exact decimals (e.g. 1.88 = 47/25, so the lower bound clears to
3 * 47**n < 8 * n * 25**n * C(n, n/3)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpz

from . import exact
from .errors import DomainError
from .fastpath import EPS, shared_table
from .sequence import SequenceRecord


@dataclass(frozen=True)
class ResidualRecord:
    """f(n) against the closed-form approximation at the same n."""

    n: int
    f: int
    approx: float
    residual: float  # exactly f - approx in double precision


@dataclass(frozen=True)
class ResidualSummary:
    span: tuple[int, int]
    min_residual: float
    max_residual: float
    mean_residual: float


def asymptotic_approx(n: int) -> float:
    """n/2 - (1/2)*sqrt(n*ln(2n/pi)), the closed-form approximation of f(n).

    Natural logarithm throughout.  Requires n >= 3 so 2n/pi > 1 and the
    logarithm is positive.
    """
    if n < exact.MIN_N:
        raise DomainError(f"n={n}: approximation defined for n >= {exact.MIN_N}")
    return n / 2 - 0.5 * math.sqrt(n * math.log(2 * n / math.pi))


def residual_records(records: Iterable[SequenceRecord]) -> list[ResidualRecord]:
    """Residual f(n) - approx(n) for each input row, in input order."""
    out = []
    for r in records:
        a = asymptotic_approx(r.n)
        out.append(ResidualRecord(n=r.n, f=r.f, approx=a, residual=r.f - a))
    return out


def residual_summary(
    n_start: int, n_end: int, records: Sequence[SequenceRecord]
) -> ResidualSummary:
    """Min/max/mean of f(n) - approx(n) over [n_start, n_end].

    ``records`` must cover the whole range (extra rows outside it are
    ignored); a gap is a domain error.
    """
    if not exact.MIN_N <= n_start <= n_end:
        raise DomainError(
            f"need {exact.MIN_N} <= n_start <= n_end, got [{n_start}, {n_end}]"
        )
    by_n = {r.n: r for r in records}
    missing = [n for n in range(n_start, n_end + 1) if n not in by_n]
    if missing:
        raise DomainError(
            f"records do not cover [{n_start}, {n_end}]: first missing n={missing[0]}"
        )
    residuals = [
        r.residual for r in residual_records(by_n[n] for n in range(n_start, n_end + 1))
    ]
    lo, hi = min(residuals), max(residuals)
    # fsum is exact; the single closing division can still land a hair
    # outside [lo, hi] when all residuals are nearly equal, so clamp.
    mean = min(hi, max(lo, math.fsum(residuals) / len(residuals)))
    return ResidualSummary((n_start, n_end), lo, hi, mean)


# Exact-decimal decompositions of the bound constants:
#   0.375 = 3/8, 1.88 = 47/25, 0.85 = 17/20, 1.89 = 189/100.
_LN_0375 = math.log(0.375)
_LN_188 = math.log(1.88)
_LN_085 = math.log(0.85)
_LN_189 = math.log(1.89)


def _lower_ok_exact(n: int) -> bool:
    # 0.375 * 1.88**n / n < C  <=>  3 * 47**n < 8 * n * 25**n * C
    c = gmpy2.bincoef(n, n // 3)
    return 3 * mpz(47) ** n < 8 * n * mpz(25) ** n * c


def _upper_ok_exact(n: int) -> bool:
    # C < 0.85 * 1.89**n / sqrt(n)  <=>  C**2 * n < 0.7225 * 3.5721**n ...
    # cleared:  400 * 10000**n * n * C**2 < 289 * 35721**n
    c = gmpy2.bincoef(n, n // 3)
    return 400 * mpz(10_000) ** n * n * c * c < 289 * mpz(35_721) ** n


def remark21_check(n: int) -> tuple[bool, bool]:
    """(lower_ok, upper_ok) for 0.375*1.88**n/n < C(n, n/3) < 0.85*1.89**n/sqrt(n).

    n must be a positive multiple of 3.  Each side is first decided in the
    certified log domain (table-backed ln C(n, n/3) against the log of the
    bound); an uncertain margin falls back to an exact integer comparison,
    so the returned booleans are always exact.
    """
    if n < exact.MIN_N or n % 3 != 0:
        raise DomainError(f"n={n} must be a multiple of 3 with n >= {exact.MIN_N}")
    table = shared_table(n)
    k = n // 3
    logs, bounds = table.logs, table.bounds
    ln_c = logs[n] - logs[k] - logs[n - k]
    table_err = bounds[n] + bounds[k] + bounds[n - k]
    ln_n = math.log(n)

    # Lower bound margin: ln C - (ln 0.375 + n ln 1.88 - ln n).  At most ten
    # roundings occur, each below EPS times an intermediate bounded by m; 16
    # is a deliberate over-count.
    d_lo = ln_c - (_LN_0375 + n * _LN_188 - ln_n)
    m_lo = logs[n] + abs(_LN_0375) + n * _LN_188 + ln_n
    e_lo = table_err + 16.0 * EPS * m_lo
    if d_lo > e_lo:
        lower_ok = True
    elif d_lo < -e_lo:
        lower_ok = False
    else:
        lower_ok = _lower_ok_exact(n)

    # Upper bound margin: (ln 0.85 + n ln 1.89 - ln(n)/2) - ln C.
    d_hi = (_LN_085 + n * _LN_189 - 0.5 * ln_n) - ln_c
    m_hi = logs[n] + abs(_LN_085) + n * _LN_189 + ln_n
    e_hi = table_err + 16.0 * EPS * m_hi
    if d_hi > e_hi:
        upper_ok = True
    elif d_hi < -e_hi:
        upper_ok = False
    else:
        upper_ok = _upper_ok_exact(n)

    return lower_ok, upper_ok
