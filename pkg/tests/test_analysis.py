"""Asymptotic approximation, residual statistics, central-third bounds."""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binomthresh import (
    DomainError,
    SequenceRecord,
    asymptotic_approx,
    compute_range,
    remark21_check,
    residual_records,
    residual_summary,
)
from binomthresh.analysis import _lower_ok_exact, _upper_ok_exact
from .conftest import TABLE1, mult_binomial

# frozen closed-form evaluations (50-digit arithmetic, rounded here)
APPROX_3 = 0.8033851942902799
APPROX_100 = 39.80982399477487
RESIDUAL_3 = 0.19661480570972012


class TestAsymptoticApprox:
    def test_frozen_values(self):
        assert asymptotic_approx(3) == pytest.approx(APPROX_3, rel=1e-12)
        assert asymptotic_approx(100) == pytest.approx(APPROX_100, rel=1e-12)

    def test_six_decimal_rendering(self):
        assert f"{asymptotic_approx(3):.6f}" == "0.803385"
        assert f"{1 - asymptotic_approx(3):.6f}" == "0.196615"

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_domain_error(self, n):
        with pytest.raises(DomainError):
            asymptotic_approx(n)

    @given(st.integers(3, 10**6))
    def test_below_half_n(self, n):
        assert asymptotic_approx(n) < n / 2

    def test_gap_to_half_n_increasing(self):
        gaps = [n / 2 - asymptotic_approx(n) for n in range(3, 500)]
        assert all(a < b for a, b in zip(gaps, gaps[1:]))

    def test_matches_high_precision(self):
        with mpmath.workdps(50):
            for n in (3, 10, 100, 9999):
                true = float(n / 2 - mpmath.sqrt(n * mpmath.log(2 * n / mpmath.pi)) / 2)
                assert asymptotic_approx(n) == pytest.approx(true, rel=1e-14)


class TestResiduals:
    def test_residual_is_exact_float_subtraction(self):
        records = compute_range(3, 200)
        for r in residual_records(records):
            assert r.residual == r.f - r.approx  # bitwise, not approx

    def test_frozen_residual_at_3(self):
        (rec,) = residual_records([SequenceRecord(3, 1, 1)])
        assert rec.residual == pytest.approx(RESIDUAL_3, rel=1e-12)

    def test_summary_over_table1(self):
        records = [SequenceRecord(*row) for row in TABLE1]
        summary = residual_summary(3, 23, records)
        residuals = [f - asymptotic_approx(n) for n, f, _ in TABLE1]
        assert summary.min_residual == min(residuals)
        assert summary.max_residual == max(residuals)
        assert summary.min_residual <= summary.mean_residual <= summary.max_residual
        assert summary.span == (3, 23)

    def test_summary_ignores_rows_outside_span(self):
        records = [SequenceRecord(*row) for row in TABLE1]
        narrow = residual_summary(5, 9, records)
        residuals = [f - asymptotic_approx(n) for n, f, _ in TABLE1 if 5 <= n <= 9]
        assert narrow.min_residual == min(residuals)
        assert narrow.max_residual == max(residuals)

    def test_missing_records_rejected(self):
        records = [SequenceRecord(*row) for row in TABLE1 if row[0] != 11]
        with pytest.raises(DomainError):
            residual_summary(3, 23, records)

    def test_bad_span_rejected(self):
        with pytest.raises(DomainError):
            residual_summary(23, 3, [])


class TestRemark21:
    def test_frozen_small_cases(self):
        # n=3: C=3 between 0.8306 and 3.3132; n=6: C=15 between 2.7595 and 15.8166
        assert remark21_check(3) == (True, True)
        assert remark21_check(6) == (True, True)

    def test_frozen_large_case(self):
        assert remark21_check(999) == (True, True)

    @pytest.mark.parametrize("n", [0, 1, 2, 4, 5, 7, -3, -6])
    def test_domain_errors(self, n):
        with pytest.raises(DomainError):
            remark21_check(n)

    def test_exact_forms_match_rational_oracle(self):
        # the cleared-denominator integer decisions vs literal Fractions
        for n in (3, 6, 9, 30, 99, 300):
            c = mult_binomial(n, n // 3)
            lower = Fraction(375, 1000) * Fraction(188, 100) ** n / n < c
            assert _lower_ok_exact(n) == lower
            # the upper bound involves sqrt(n); compare squares instead
            # (both sides positive, so squaring preserves the ordering)
            upper_sq = c * c * n < Fraction(85, 100) ** 2 * Fraction(189, 100) ** (2 * n)
            assert _upper_ok_exact(n) == upper_sq

    def test_full_multiple_of_3_sweep_to_3000(self):
        failures = [n for n in range(3, 3001, 3) if remark21_check(n) != (True, True)]
        small = {n: remark21_check(n) for n in range(3, 30, 3)}
        print(f"observed small-n outcomes (informational): {small}")
        assert failures == []
