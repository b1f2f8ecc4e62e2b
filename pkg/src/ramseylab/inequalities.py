"""Exact verification of the constant inequalities behind the proof chain.

Every inequality is decided by big-rational comparison; 0.96 and 0.9 are
carried as 24/25 and 9/10 so verdicts are bit-exact.  Two items depend on an
unbounded parameter (the clique-count comparison grows with r, the sparse
degree bound is a sufficient k-only reduction of an n-dependent statement);
their records carry an `asymptotic` flag next to the exact per-parameter
verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable

NINE_TENTHS = Fraction(9, 10)
TWENTYFOUR_25THS = Fraction(24, 25)
ONE_TENTH = Fraction(1, 10)


@dataclass(frozen=True)
class IneqRecord:
    """One verified inequality with its exact certificate."""

    name: str
    params: dict
    relation: str  # "<", ">", or ">=" read as: lhs RELATION rhs
    lhs: Fraction
    rhs: Fraction
    holds: bool | None  # None would mean undecided; all current items are exact
    asymptotic: bool = False

    @property
    def margin(self) -> Fraction:
        """Oriented slack: positive means the inequality holds with room."""
        if self.relation == "<":
            return self.rhs - self.lhs
        return self.lhs - self.rhs

    def to_json_obj(self) -> dict:
        verdict = "undecided" if self.holds is None else ("yes" if self.holds else "no")
        return {
            "name": self.name,
            "params": dict(self.params),
            "holds": verdict,
            "certificate_lo": str(self.margin),
            "certificate_hi": str(self.margin),
            "asymptotic_flag": self.asymptotic,
        }


@dataclass(frozen=True)
class IneqReport:
    records: tuple[IneqRecord, ...] = field(default_factory=tuple)

    def record(self, name: str, **params) -> IneqRecord:
        for rec in self.records:
            if rec.name == name and all(rec.params.get(key) == val for key, val in params.items()):
                return rec
        raise KeyError(f"no record named {name!r} with params {params}")

    def all_hold(self) -> bool:
        return all(rec.holds for rec in self.records)

    def to_json_obj(self) -> list[dict]:
        return [rec.to_json_obj() for rec in self.records]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _compare(relation: str, lhs: Fraction, rhs: Fraction) -> bool:
    if relation == "<":
        return lhs < rhs
    if relation == ">":
        return lhs > rhs
    if relation == ">=":
        return lhs >= rhs
    raise ValueError(f"unknown relation {relation!r}")


def _record(name, params, relation, lhs, rhs, asymptotic=False) -> IneqRecord:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    return IneqRecord(name, params, relation, lhs, rhs, _compare(relation, lhs, rhs), asymptotic)


def verify_constant_inequalities(
    k: int, A: int = 250, r_list: Iterable[int] = ()
) -> IneqReport:
    """Evaluate the whole inequality catalog at uniformity k and factor A.

    Catalog (all exact rational comparisons):
      k_below_geometric        k < (99/96)^k
      shrink_factor_floor      1 - 1/A >= 99/100
      fractional_power_step    0.96^(k/(k-1)) > 0.96^2 > 9/10, decided via the
                               exponent comparison k < 2(k-1) and 576/625 > 9/10
      tail_power_bound         (1/10)^(k-2) * (k-1) < (9/10)^k
      shadow_average_excess    (k-1)/(32k) * (24/25)^(2k) > (9/10)^k
      triple_split_margin      (9/10)^k < (24/25)^k / (144k)
      sparse_degree_sufficient (9/10)^(k-2) * 48k^2 < (24/25)^k   [asymptotic:
                               k-only sufficient form of an n-dependent bound]
      residual_clique_excess   r * (24/25)^k * C(Ar-1, k-1) < C((A-1)r, k),
                               one record per r in r_list  [asymptotic in r]
    """
    if k < 3:
        raise ValueError(f"uniformity must be at least 3, got {k}")
    if A < 2:
        raise ValueError(f"factor A must be at least 2, got {A}")
    rs = sorted(set(int(r) for r in r_list))
    if any(r < 1 for r in rs):
        raise ValueError("r values must be positive")

    records = []
    records.append(
        _record("k_below_geometric", {"k": k}, "<", k, Fraction(99, 96) ** k)
    )
    records.append(
        _record("shrink_factor_floor", {"A": A}, ">=", 1 - Fraction(1, A), Fraction(99, 100))
    )
    exponent_step_ok = k < 2 * (k - 1)
    square_step = _record(
        "fractional_power_step",
        {"k": k, "exponent_step_ok": exponent_step_ok},
        ">",
        TWENTYFOUR_25THS**2,
        NINE_TENTHS,
    )
    if not exponent_step_ok:
        square_step = IneqRecord(
            square_step.name, square_step.params, square_step.relation,
            square_step.lhs, square_step.rhs, False, square_step.asymptotic,
        )
    records.append(square_step)
    records.append(
        _record(
            "tail_power_bound", {"k": k}, "<",
            ONE_TENTH ** (k - 2) * (k - 1), NINE_TENTHS**k,
        )
    )
    records.append(
        _record(
            "shadow_average_excess", {"k": k}, ">",
            Fraction(k - 1, 32 * k) * TWENTYFOUR_25THS ** (2 * k), NINE_TENTHS**k,
        )
    )
    records.append(
        _record(
            "triple_split_margin", {"k": k}, "<",
            NINE_TENTHS**k, TWENTYFOUR_25THS**k / (144 * k),
        )
    )
    records.append(
        _record(
            "sparse_degree_sufficient", {"k": k}, "<",
            NINE_TENTHS ** (k - 2) * 48 * k * k, TWENTYFOUR_25THS**k,
            asymptotic=True,
        )
    )
    for r in rs:
        records.append(
            _record(
                "residual_clique_excess", {"k": k, "A": A, "r": r}, "<",
                r * TWENTYFOUR_25THS**k * comb(A * r - 1, k - 1),
                Fraction(comb((A - 1) * r, k)),
                asymptotic=True,
            )
        )
    return IneqReport(tuple(records))
