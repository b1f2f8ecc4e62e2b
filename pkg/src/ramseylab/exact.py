"""Outward-rounded rational intervals for the irrational root expressions.

The only irrational quantity the proofs need is (b/(k-1))^(1/(k-2)).  Its
enclosure comes from exact rational bisection: every step compares mid^(k-2)
against the radicand with big-integer arithmetic, so the true value provably
stays inside [lo, hi].  Perfect powers are detected first and returned as
degenerate (exact) intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

RationalLike = Fraction | int | str


@dataclass(frozen=True)
class Interval:
    """A closed rational interval [lo, hi] enclosing a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: Fraction | int) -> bool:
        return self.lo <= value <= self.hi

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def scaled(self, factor: Fraction | int) -> "Interval":
        if factor < 0:
            raise ValueError("scaling by a negative factor would flip the interval")
        return Interval(self.lo * factor, self.hi * factor)


def integer_nth_root(x: int, m: int) -> tuple[int, bool]:
    """Floor of x**(1/m) and whether it is exact, for x >= 0, m >= 1."""
    if x < 0:
        raise ValueError(f"radicand must be nonnegative, got {x}")
    if m < 1:
        raise ValueError(f"root index must be at least 1, got {m}")
    if m == 1 or x in (0, 1):
        return x, True
    lo = 0
    hi = 1 << (x.bit_length() // m + 1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**m <= x:
            lo = mid
        else:
            hi = mid
    return lo, lo**m == x


def nth_root_interval(q: RationalLike, m: int, precision: RationalLike) -> Interval:
    """Enclose q**(1/m) for q >= 0 within the requested width.

    When q is a perfect m-th power of a rational the result is degenerate and
    exact.  Otherwise deterministic bisection from the bracket [0, max(1, q)]
    maintains lo^m <= q <= hi^m at every step, so narrowing the precision
    only ever nests the interval.
    """
    q = Fraction(q)
    precision = Fraction(precision)
    if q < 0:
        raise ValueError(f"radicand must be nonnegative, got {q}")
    if m < 1:
        raise ValueError(f"root index must be at least 1, got {m}")
    if precision <= 0:
        raise ValueError(f"precision must be positive, got {precision}")
    if m == 1:
        return Interval(q, q)
    root_num, exact_num = integer_nth_root(q.numerator, m)
    root_den, exact_den = integer_nth_root(q.denominator, m)
    if exact_num and exact_den:
        root = Fraction(root_num, root_den)
        return Interval(root, root)
    lo = Fraction(0)
    hi = max(Fraction(1), q)
    while hi - lo > precision:
        mid = (lo + hi) / 2
        if mid**m <= q:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)


def star_deficiency_bound(
    b: RationalLike, k: int, n: int, precision: RationalLike
) -> Interval:
    """Enclose (1 - (b/(k-1))^(1/(k-2)))^(k-1) * C(n-1, k-1).

    This bounds from above the number of edges a loose-3-path-free
    hypergraph can keep away from a vertex of degree >= b * C(n-1, k-1).
    Requires k >= 3 and 0 < b <= k-1.
    """
    b = Fraction(b)
    precision = Fraction(precision)
    if k < 3:
        raise ValueError(f"uniformity must be at least 3, got {k}")
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    if not 0 < b <= k - 1:
        raise ValueError(f"need 0 < b <= k-1, got b={b}, k={k}")
    if precision <= 0:
        raise ValueError(f"precision must be positive, got {precision}")
    scale = comb(n - 1, k - 1)
    if scale == 0:
        return Interval(Fraction(0), Fraction(0))
    q = b / (k - 1)
    # (1 - x)^(k-1) * scale is decreasing in x on [0, 1]; the root bracket
    # stays inside [0, 1] because q <= 1.
    eps = precision / ((k - 1) * scale)
    while True:
        root = nth_root_interval(q, k - 2, eps)
        lo = (1 - root.hi) ** (k - 1) * scale
        hi = (1 - root.lo) ** (k - 1) * scale
        if hi - lo <= precision:
            return Interval(lo, hi)
        eps /= 2


def link_support_lower_bound(
    b: RationalLike, k: int, n: int, precision: RationalLike
) -> Interval:
    """Enclose (b/(k-1))^(1/(k-2)) * (n-1).

    This is the guaranteed vertex-support size of a sub-link whose minimum
    degree reaches b/(k-1) * C(n-2, k-2).  Requires k >= 3 and 0 < b <= k-1.
    """
    b = Fraction(b)
    precision = Fraction(precision)
    if k < 3:
        raise ValueError(f"uniformity must be at least 3, got {k}")
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    if not 0 < b <= k - 1:
        raise ValueError(f"need 0 < b <= k-1, got b={b}, k={k}")
    if precision <= 0:
        raise ValueError(f"precision must be positive, got {precision}")
    scale = n - 1
    if scale == 0:
        return Interval(Fraction(0), Fraction(0))
    q = b / (k - 1)
    eps = precision / scale
    while True:
        root = nth_root_interval(q, k - 2, eps)
        result = root.scaled(scale)
        if result.width <= precision:
            return result
        eps /= 2
