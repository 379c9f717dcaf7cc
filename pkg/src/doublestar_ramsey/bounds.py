"""Exact-integer evaluation of the double-star Ramsey bounds.

Nothing here touches floating point.  Square-root ceilings are computed
by clearing the denominator 2 and comparing squares via ``math.isqrt``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .doublestar import DoubleStarSpec, PreconditionError

# 1.699 and 4.27492 are taken as exact decimals.
GAP_NUM, GAP_DEN = 1699, 1000
COROLLARY_NUM, COROLLARY_DEN = 427492, 100000


def ceil_sqrt(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def _radicand(spec: DoubleStarSpec) -> int:
    # (2 * sqrt(2 m1^2 + (m1 + m2/2)^2))^2
    m1, m2 = spec.m1, spec.m2
    return 8 * m1 * m1 + (2 * m1 + m2) ** 2


def r_b(spec: DoubleStarSpec) -> int:
    """Burr's lower bound ``max(2 t1, t1 + 2 t2) - 1`` with ``t_i = m_i + 1``."""
    t1, t2 = spec.m1 + 1, spec.m2 + 1
    return max(2 * t1, t1 + 2 * t2) - 1


def eq1_bound(spec: DoubleStarSpec) -> int:
    return max(2 * spec.m1, spec.m1 + 2 * spec.m2) + 2


def ghk_bound(spec: DoubleStarSpec) -> int:
    return 2 * spec.m1 + spec.m2 + 2


def in_golden_range(spec: DoubleStarSpec) -> bool:
    """``(sqrt(5) + 1)/2 * m2 < m1 < 3 m2``."""
    m1, m2 = spec.m1, spec.m2
    lhs = 2 * m1 - m2
    return lhs > 0 and lhs * lhs > 5 * m2 * m2 and m1 < 3 * m2


def in_gap_range(spec: DoubleStarSpec) -> bool:
    """``1.699 (m2 + 1) < m1 < 3 m2``."""
    m1, m2 = spec.m1, spec.m2
    return GAP_DEN * m1 > GAP_NUM * (m2 + 1) and m1 < 3 * m2


def range_flags(spec: DoubleStarSpec) -> tuple[bool, bool]:
    return in_golden_range(spec), in_gap_range(spec)


def _require_golden(spec: DoubleStarSpec) -> None:
    if not in_golden_range(spec):
        raise PreconditionError(f"{spec} is outside (sqrt(5)+1)/2 * m2 < m1 < 3 m2")


def m3_of(spec: DoubleStarSpec) -> int:
    """Least ``t`` with ``2t + 2 m1 + m2 >= sqrt(8 m1^2 + (2 m1 + m2)^2)``."""
    _require_golden(spec)
    s = ceil_sqrt(_radicand(spec))
    return -(-(s - 2 * spec.m1 - spec.m2) // 2)


def theorem_bound(spec: DoubleStarSpec) -> int:
    """``ceil(sqrt(2 m1^2 + (m1 + m2/2)^2) + m2/2) + 1``."""
    _require_golden(spec)
    s = ceil_sqrt(_radicand(spec))
    return -(-(s + spec.m2) // 2) + 1


def corollary_bound(m: int) -> int:
    """``ceil(4.27492 m) + 1`` for ``S(2m, m)``."""
    if m < 1:
        raise PreconditionError(f"m must be positive, got {m}")
    return -(-COROLLARY_NUM * m // COROLLARY_DEN) + 1


def nsz_lower_main(spec: DoubleStarSpec) -> tuple[Fraction, Fraction]:
    """Main terms of the two asymptotic lower bounds (``o(m2)`` dropped).

    The second one is stated for ``m1 >= 2 m2`` only; it is returned
    regardless and the caller decides whether it applies.
    """
    m1, m2 = spec.m1, spec.m2
    return (
        Fraction(5 * m1, 3) + Fraction(5 * m2, 6),
        Fraction(189 * m1, 115) + Fraction(21 * m2, 23),
    )


def best_upper(spec: DoubleStarSpec) -> tuple[int, str]:
    """Smallest applicable upper bound and the name of the formula.

    Ties go to ``theorem``, then ``eq1``, then ``ghk``.
    """
    candidates = []
    if in_golden_range(spec):
        candidates.append((theorem_bound(spec), "theorem"))
    if not in_gap_range(spec):
        candidates.append((eq1_bound(spec), "eq1"))
    candidates.append((ghk_bound(spec), "ghk"))
    return min(candidates, key=lambda c: c[0])


@dataclass(frozen=True)
class BoundsReport:
    spec: DoubleStarSpec
    t1: int
    t2: int
    r_b: int
    eq1_bound: int
    ghk_bound: int
    theorem_bound: Optional[int]
    m3: Optional[int]
    corollary_bound: Optional[int]
    nsz_lower_main_1: Fraction
    nsz_lower_main_2: Fraction
    in_golden_range: bool
    in_gap_range: bool
    best_upper: int
    best_upper_source: str

    def items(self) -> list[tuple[str, str]]:
        def show(x) -> str:
            if x is None:
                return "-"
            if isinstance(x, bool):
                return "yes" if x else "no"
            return str(x)

        return [
            ("m1", show(self.spec.m1)),
            ("m2", show(self.spec.m2)),
            ("t1", show(self.t1)),
            ("t2", show(self.t2)),
            ("r_b", show(self.r_b)),
            ("theorem_bound", show(self.theorem_bound)),
            ("best_upper", show(self.best_upper)),
            ("best_upper_source", self.best_upper_source),
            ("eq1_bound", show(self.eq1_bound)),
            ("ghk_bound", show(self.ghk_bound)),
            ("m3", show(self.m3)),
            ("corollary_bound", show(self.corollary_bound)),
            ("nsz_lower_main_1", show(self.nsz_lower_main_1)),
            ("nsz_lower_main_2", show(self.nsz_lower_main_2)),
            ("in_golden_range", show(self.in_golden_range)),
            ("in_gap_range", show(self.in_gap_range)),
        ]

    def render(self) -> str:
        rows = self.items()
        width = max(len(k) for k, _ in rows)
        lines = [f"bounds for {self.spec}"]
        lines += [f"  {k.ljust(width)}  {v}" for k, v in rows]
        lines.append("  (nsz_lower_main_* are asymptotic main terms; the o(m2) term is not computed)")
        return "\n".join(lines) + "\n"

    def record(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.items())


def bounds_report(spec: DoubleStarSpec) -> BoundsReport:
    golden, gap = range_flags(spec)
    low1, low2 = nsz_lower_main(spec)
    best, source = best_upper(spec)
    return BoundsReport(
        spec=spec,
        t1=spec.m1 + 1,
        t2=spec.m2 + 1,
        r_b=r_b(spec),
        eq1_bound=eq1_bound(spec),
        ghk_bound=ghk_bound(spec),
        theorem_bound=theorem_bound(spec) if golden else None,
        m3=m3_of(spec) if golden else None,
        corollary_bound=corollary_bound(spec.m2) if spec.m1 == 2 * spec.m2 else None,
        nsz_lower_main_1=low1,
        nsz_lower_main_2=low2,
        in_golden_range=golden,
        in_gap_range=gap,
        best_upper=best,
        best_upper_source=source,
    )
