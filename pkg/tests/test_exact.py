import math
from fractions import Fraction
from math import comb

import pytest

from ramseylab import (
    Interval,
    integer_nth_root,
    link_support_lower_bound,
    nth_root_interval,
    star_deficiency_bound,
)

PRECISION = Fraction(1, 10**6)


def test_integer_nth_root():
    assert integer_nth_root(27, 3) == (3, True)
    assert integer_nth_root(28, 3) == (3, False)
    assert integer_nth_root(0, 5) == (0, True)
    assert integer_nth_root(1, 9) == (1, True)
    assert integer_nth_root(10**30, 10) == (1000, True)
    with pytest.raises(ValueError):
        integer_nth_root(-1, 2)


def test_interval_ordering():
    with pytest.raises(ValueError):
        Interval(Fraction(1), Fraction(0))


def test_nth_root_exact_cases():
    assert nth_root_interval(Fraction(1, 4), 2, PRECISION) == Interval(Fraction(1, 2), Fraction(1, 2))
    assert nth_root_interval(Fraction(8, 27), 3, PRECISION) == Interval(Fraction(2, 3), Fraction(2, 3))
    assert nth_root_interval(Fraction(1), 7, PRECISION) == Interval(Fraction(1), Fraction(1))


def test_nth_root_defining_inequalities():
    q = Fraction(2, 7)
    iv = nth_root_interval(q, 3, PRECISION)
    assert iv.lo**3 <= q <= iv.hi**3
    assert iv.width <= PRECISION


def test_nth_root_nesting():
    q = Fraction(5, 9)
    coarse = nth_root_interval(q, 4, Fraction(1, 100))
    fine = nth_root_interval(q, 4, Fraction(1, 10**9))
    assert coarse.encloses(fine)


def test_star_deficiency_exact_at_top():
    # b = k-1 makes the radicand 1, so the coefficient vanishes exactly
    assert star_deficiency_bound(4, 5, 9, PRECISION) == Interval(Fraction(0), Fraction(0))


def test_star_deficiency_linear_root_case():
    # k = 3 involves a first root, so the value is exactly (1 - b/2)^2 * C(n-1, 2)
    iv = star_deficiency_bound(Fraction(1, 2), 3, 11, PRECISION)
    assert iv == Interval(Fraction(9, 16) * 45, Fraction(9, 16) * 45)


def test_star_deficiency_bisected_case():
    b = Fraction(6561, 10000)
    iv = star_deficiency_bound(b, 4, 4, PRECISION)
    true = (1 - math.sqrt(float(b) / 3)) ** 3
    assert iv.width <= PRECISION
    assert float(iv.lo) - 1e-9 <= true <= float(iv.hi) + 1e-9


def test_star_deficiency_invalid():
    with pytest.raises(ValueError):
        star_deficiency_bound(0, 4, 9, PRECISION)
    with pytest.raises(ValueError):
        star_deficiency_bound(5, 4, 9, PRECISION)  # b > k-1
    with pytest.raises(ValueError):
        star_deficiency_bound(1, 2, 9, PRECISION)
    with pytest.raises(ValueError):
        star_deficiency_bound(1, 4, 9, 0)


def test_link_support_exact_cases():
    assert link_support_lower_bound(Fraction(1, 2), 3, 11, PRECISION) == Interval(
        Fraction(5, 2), Fraction(5, 2)
    )
    assert link_support_lower_bound(Fraction(3, 4), 4, 9, PRECISION) == Interval(
        Fraction(4), Fraction(4)
    )


def test_link_support_bisected_case():
    iv = link_support_lower_bound(1, 5, 101, PRECISION)
    true = (0.25 ** (1 / 3)) * 100
    assert iv.width <= PRECISION
    assert float(iv.lo) - 1e-9 <= true <= float(iv.hi) + 1e-9


def test_interval_widths_random(rng):
    for _ in range(60):
        k = rng.randint(3, 10)
        n = rng.randint(k, 24)
        b = Fraction(rng.randint(1, 4 * (k - 1)), 4)
        if b > k - 1:
            b = Fraction(k - 1)
        precision = Fraction(1, 10 ** rng.randint(3, 8))
        iv = star_deficiency_bound(b, k, n, precision)
        assert iv.width <= precision
        assert 0 <= iv.lo and iv.hi <= comb(n - 1, k - 1)
        iv = link_support_lower_bound(b, k, n, precision)
        assert iv.width <= precision
        assert 0 <= iv.lo and iv.hi <= n - 1 + precision


def test_composed_bounds_nest_under_refinement():
    b = Fraction(7, 10)
    coarse = star_deficiency_bound(b, 5, 12, Fraction(1, 10**3))
    fine = star_deficiency_bound(b, 5, 12, Fraction(1, 10**9))
    assert coarse.encloses(fine)
    coarse = link_support_lower_bound(b, 5, 12, Fraction(1, 10**3))
    fine = link_support_lower_bound(b, 5, 12, Fraction(1, 10**9))
    assert coarse.encloses(fine)


def test_composite_monotone_consistency():
    # deficiency coefficient shrinks as b grows: larger guaranteed degree
    # leaves less room away from the star
    prev = None
    for numer in (1, 2, 3):
        iv = star_deficiency_bound(Fraction(numer, 1), 4, 12, PRECISION)
        if prev is not None:
            assert iv.hi <= prev.hi + PRECISION
        prev = iv
