from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from doublestar_ramsey import (
    DoubleStarSpec,
    PreconditionError,
    best_upper,
    bounds_report,
    corollary_bound,
    m3_of,
    nsz_lower_main,
    r_b,
    range_flags,
    theorem_bound,
)
from doublestar_ramsey.bounds import ceil_sqrt, in_gap_range, in_golden_range
from oracles import m3_decimal, m3_scan, theorem_bound_decimal

S = DoubleStarSpec


@pytest.mark.parametrize("m", [1, 2, 3, 10, 977])
def test_r_b_2m_m(m):
    assert r_b(S(2 * m, m)) == 4 * m + 2


@pytest.mark.parametrize("spec, value", [(S(1, 1), 5), (S(4, 2), 10), (S(5, 3), 13), (S(7, 4), 17)])
def test_r_b_values(spec, value):
    assert r_b(spec) == value


def test_r_b_matches_path_formula():
    k = 3  # S(1,1) is the 3-edge path
    assert r_b(S(1, 1)) == k + (k + 1) // 2


@pytest.mark.parametrize(
    "spec, flags",
    [(S(2, 1), (True, False)), (S(3, 2), (False, False)), (S(5, 3), (True, False)), (S(7, 4), (True, False)), (S(12, 5), (True, True))],
)
def test_range_flags(spec, flags):
    assert range_flags(spec) == flags


def test_golden_for_2m_m():
    assert all(in_golden_range(S(2 * m, m)) for m in range(1, 2000))


def test_gap_implies_golden():
    # golden fails only below phi*m2, so the smallest gap m1 per m2 decides
    for m2 in range(1, 10_001):
        m1 = (1699 * (m2 + 1)) // 1000 + 1
        if m1 < 3 * m2:
            assert in_gap_range(S(m1, m2))
            assert in_golden_range(S(m1, m2))
            assert not in_gap_range(S(m1 - 1, m2))


@settings(max_examples=2000, deadline=None)
@given(st.integers(1, 10_000), st.integers(1, 10_000))
def test_gap_implies_golden_sampled(a, b):
    spec = S(a, b)
    if in_gap_range(spec):
        assert in_golden_range(spec)


@pytest.mark.parametrize(
    "spec, m3", [(S(2, 1), 2), (S(4, 2), 3), (S(5, 3), 4), (S(6, 3), 4), (S(7, 4), 5)]
)
def test_m3_values(spec, m3):
    assert m3_scan(spec.m1, spec.m2) == m3
    assert m3_decimal(spec.m1, spec.m2) == m3
    assert m3_of(spec) == m3


@pytest.mark.parametrize("spec, bound", [(S(2, 1), 6), (S(4, 2), 10), (S(5, 3), 13), (S(6, 3), 14)])
def test_theorem_bound_values(spec, bound):
    assert theorem_bound_decimal(spec.m1, spec.m2) == bound
    assert theorem_bound(spec) == bound


def test_out_of_range_rejected():
    with pytest.raises(PreconditionError):
        m3_of(S(3, 2))
    with pytest.raises(PreconditionError):
        theorem_bound(S(10, 1))


def test_against_decimal_oracle_grid():
    for m2 in range(1, 80):
        for m1 in range(m2, 3 * m2):
            spec = S(m1, m2)
            if in_golden_range(spec):
                assert m3_of(spec) == m3_decimal(m1, m2)
                assert theorem_bound(spec) == theorem_bound_decimal(m1, m2)


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 10**40))
def test_ceil_sqrt(x):
    r = ceil_sqrt(x)
    assert r * r >= x
    assert r == 0 or (r - 1) * (r - 1) < x


@pytest.mark.parametrize("m, value", [(1, 6), (10, 44), (100_000, 427_493)])
def test_corollary_bound(m, value):
    assert corollary_bound(m) == value


def test_corollary_m1_matches_theorem():
    assert corollary_bound(1) == theorem_bound(S(2, 1)) == 6


def test_best_upper():
    assert best_upper(S(10, 1)) == (22, "eq1")
    assert best_upper(S(2, 1)) == (6, "theorem")
    assert best_upper(S(5, 3)) == (13, "theorem")
    # gap range: eq1 not applicable
    spec = S(12, 5)
    assert in_gap_range(spec)
    assert best_upper(spec) == (theorem_bound(spec), "theorem")


def test_eq1_not_assumed_equal_to_r_b_plus_1():
    report = bounds_report(S(2, 2))
    assert report.eq1_bound == 8 and report.r_b == 8
    report = bounds_report(S(10, 1))
    assert report.eq1_bound == report.r_b + 1


def test_nsz_lower_main():
    assert nsz_lower_main(S(1, 1)) == (Fraction(5, 2), Fraction(294, 115))
    for m in range(1, 50):
        first, second = nsz_lower_main(S(2 * m, m))
        assert first == Fraction(25 * m, 6)
        assert second == Fraction(21 * m, 5)


def test_report_contents():
    report = bounds_report(S(2, 1))
    assert (report.t1, report.t2, report.m3, report.corollary_bound) == (3, 2, 2, 6)
    assert "r_b=6 theorem_bound=6 best_upper=6" in report.record()
    assert report.theorem_bound == S(2, 1).m1 + S(2, 1).m2 + report.m3 + 1
    out = bounds_report(S(10, 1))
    assert out.theorem_bound is None and out.m3 is None and out.corollary_bound is None
    assert "theorem_bound=-" in out.record()
    assert "theorem_bound" in out.render()


def test_report_is_deterministic():
    a = [bounds_report(S(m1, m2)).record() for m1 in range(1, 30) for m2 in range(1, m1 + 1)]
    b = [bounds_report(S(m1, m2)).record() for m1 in range(1, 30) for m2 in range(1, m1 + 1)]
    assert a == b


def test_first_strict_corollary_gap_by_decimal():
    from decimal import Decimal, ROUND_CEILING

    strict = [
        m
        for m in range(1, 700)
        if theorem_bound_decimal(2 * m, m)
        < int((Decimal("4.27492") * m).to_integral_value(rounding=ROUND_CEILING)) + 1
    ]
    assert strict[0] == 622
    assert all(theorem_bound(S(2 * m, m)) < corollary_bound(m) for m in strict)
