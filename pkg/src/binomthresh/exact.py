"""Exact integer arithmetic for binomial threshold predicates.

This module is the ground truth for everything else in the package.  The two
sequences of interest are

    f(n) = least k >= 1 with C(n,k) > 2**n / (n+1)        (n >= 3)
    L(n) = least k >= 1 with C(n,k) > 2**n / n            (n >= 3)

Both defining inequalities are decided here without any division or rounding:
``C(n,k) > 2**n / d`` is equivalent to ``d * C(n,k) > 2**n`` over the
integers, so a single arbitrary-precision comparison settles it.  Big-integer
arithmetic is delegated to GMP via :mod:`gmpy2`; results cross the API
boundary as plain Python ints.

Also housed here: the cleared-denominator integer form of the entropy-style
bound C(n,k) <= n**n / (k**k * (n-k)**(n-k)).
"""

from __future__ import annotations

import enum

import gmpy2
from gmpy2 import mpz

from .errors import DomainError

_ONE = mpz(1)

MIN_N = 3  # f and L are defined for n >= 3 only


class ThresholdKind(enum.Enum):
    """Which threshold denominator a comparison uses: n+1 for f, n for L."""

    F = "f"
    L = "L"

    def denominator(self, n: int) -> int:
        """The denominator d in the predicate C(n,k) > 2**n / d."""
        return n + 1 if self is ThresholdKind.F else n


class ExactOrdering(enum.Enum):
    """Exact relation of denominator * C(n,k) to 2**n.

    ``EQUAL`` is kept distinct from ``BELOW`` so boundary ties (for example
    4 * C(4,1) == 2**4) stay visible instead of being folded into "below";
    the threshold inequality itself is strict, so only ``ABOVE`` makes the
    predicate true.
    """

    BELOW = -1
    EQUAL = 0
    ABOVE = 1


def _check_nk(n: int, k: int) -> None:
    if k < 0 or k > n:
        raise DomainError(f"k={k} out of range for n={n}: need 0 <= k <= n")


def binomial_exact(n: int, k: int) -> int:
    """Exact binomial coefficient C(n,k) as a Python int.

    >>> binomial_exact(5, 2)
    10
    >>> binomial_exact(17, 0)
    1
    """
    if n < 0:
        raise DomainError(f"n={n} must be >= 0")
    _check_nk(n, k)
    return int(gmpy2.bincoef(n, k))


def compare_exact(n: int, k: int, kind: ThresholdKind) -> ExactOrdering:
    """Exact ordering of denominator(n) * C(n,k) versus 2**n.

    Decided entirely in arbitrary-precision integers: no division, no
    rounding, so the result is correct even when the two sides agree to
    hundreds of digits.
    """
    if n < MIN_N:
        raise DomainError(f"n={n}: threshold sequences are defined for n >= {MIN_N}")
    _check_nk(n, k)
    lhs = kind.denominator(n) * gmpy2.bincoef(n, k)
    rhs = _ONE << n
    if lhs > rhs:
        return ExactOrdering.ABOVE
    if lhs == rhs:
        return ExactOrdering.EQUAL
    return ExactOrdering.BELOW


def exceeds(n: int, k: int, kind: ThresholdKind) -> bool:
    """True iff C(n,k) > 2**n / denominator(n) holds strictly.

    An exact tie (EQUAL) counts as false: the defining inequality is strict.
    """
    return compare_exact(n, k, kind) is ExactOrdering.ABOVE


def lemma21_holds(n: int, k: int) -> bool:
    """Check C(n,k) * k**k * (n-k)**(n-k) <= n**n in exact integers.

    This is the cleared-denominator form of the entropy-style upper bound
    C(n,k) <= n**n / (k**k * (n-k)**(n-k)), stated for 0 <= k <= n-1 with the
    convention 0**0 = 1 (so k = 0 reads 1 * 1 * n**n <= n**n, an equality).
    """
    if n < 1:
        raise DomainError(f"n={n} must be >= 1")
    if k < 0 or k >= n:
        raise DomainError(f"k={k} out of range for n={n}: need 0 <= k <= n-1")
    lhs = gmpy2.bincoef(n, k) * mpz(k) ** k * mpz(n - k) ** (n - k)
    return lhs <= mpz(n) ** n
