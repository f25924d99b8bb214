"""Exact plateau detection.

The density at a fractional time is piecewise analytic on the open cells cut
out of (0, 1/2) by the singular points where the window I(x) gains or loses
a contributing integer.  On each cell the two windowed sums

    S_pm = sum_{k in I} c(k) e(+-N lam k / q)

are constants, and the density is constant on the cell iff one of them
vanishes, with level (lam/q) |other|^2.  Both sums live in Z[zeta_M] with
M = lcm(8, 4q, q s), s the reduced denominator of N lam, so the criterion is
decided by the exact cyclotomic zero test; every exact verdict is
cross-checked against the float shadow and a disagreement raises.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycInt
from .rationals import mod_inverse
from .wavefield import WellParams

ZERO_LEVEL = "zero"
POSITIVE_LEVEL = "positive"

SIDE_PLUS = "plus"
SIDE_MINUS = "minus"
SIDE_BOTH = "both"

FLOAT_ZERO_TOL = 1e-9


class ExactFloatMismatch(RuntimeError):
    """The exact zero test and the float shadow disagreed; this would mean a
    corrupted coefficient path and must never be silently ignored."""


@dataclass(frozen=True)
class Cell:
    """Open interval between consecutive singular points, with the integers
    of the window (zero-coefficient k already dropped for even q)."""

    lo: Fraction
    hi: Fraction
    members: tuple[int, ...]


@dataclass(frozen=True)
class PlateauInterval:
    lo: Fraction
    hi: Fraction
    level: float
    level_exact: CycInt  # the surviving windowed sum; all-zero for forbidden zones
    kind: str            # ZERO_LEVEL or POSITIVE_LEVEL
    vanishing_side: str  # SIDE_PLUS, SIDE_MINUS or SIDE_BOTH


@dataclass(frozen=True)
class PlateauReport:
    params: WellParams
    intervals: tuple[PlateauInterval, ...]
    fragmentation: bool
    zero_checks: int = 0  # exact-vs-float agreements verified while detecting


def singular_points(params: WellParams) -> list[Fraction]:
    """The x in (0, 1/2) where a window edge crosses a contributing integer:
    xq +- q/(2 lam) integral for odd q, (xq +- q/(2 lam)) + q/2 an even
    integer for even q.  Computed exactly."""
    q = params.q
    shift = Fraction(1, 2) / params.lam  # q/(2 lam) scaled back by 1/q
    half = Fraction(1, 2)
    points: set[Fraction] = set()
    if q % 2:
        # x = m/q -+ 1/(2 lam)
        for sign in (1, -1):
            m_lo = math.ceil(q * (0 - sign * shift))
            m_hi = math.floor(q * (half - sign * shift))
            for m in range(m_lo - 1, m_hi + 2):
                x = Fraction(m, q) + sign * shift
                if 0 < x < half:
                    points.add(x)
    else:
        # x = (2m - q/2)/q -+ 1/(2 lam)
        for sign in (1, -1):
            for m in range(-q, q + 1):
                x = Fraction(2 * m - q // 2, q) + sign * shift
                if 0 < x < half:
                    points.add(x)
    return sorted(points)


def _members(mid: Fraction, params: WellParams) -> tuple[int, ...]:
    q = params.q
    half = Fraction(1, 2) / params.lam
    lo = q * (mid - half)
    hi = q * (mid + half)
    ks = range(math.ceil(lo), math.floor(hi) + 1)
    if q % 2 == 0:
        ks = [k for k in ks if (k + q // 2) % 2 == 0]
    return tuple(ks)


@lru_cache(maxsize=4096)
def _cells_cached(lam: Fraction, q: int) -> tuple[Cell, ...]:
    params = WellParams(lam, 1, Fraction(1, q) if q > 1 else Fraction(0))
    bounds = [Fraction(0)] + singular_points(params) + [Fraction(1, 2)]
    cells = []
    for lo, hi in zip(bounds, bounds[1:]):
        mid = (lo + hi) / 2
        members = _members(mid, params)
        quarter = (3 * lo + hi) / 4
        three_quarter = (lo + 3 * hi) / 4
        if _members(quarter, params) != members or _members(three_quarter, params) != members:
            raise ValueError(f"corrupt cell ({lo}, {hi}): window membership is not constant")
        cells.append(Cell(lo, hi, members))
    return tuple(cells)


def build_cells(params: WellParams) -> tuple[Cell, ...]:
    """Partition (0, 1/2) into cells of constant window membership; each cell
    is validated at its midpoint and both quarter points."""
    return _cells_cached(params.lam, params.q)


def cyclotomic_order(params: WellParams) -> int:
    """Common order housing every term of both windowed sums."""
    return math.lcm(8, 4 * params.q, params.q * params.s)


def window_sums(cell: Cell, params: WellParams) -> tuple[CycInt, CycInt]:
    """Assemble (S_plus, S_minus) for the cell exactly in Z[zeta_M].

    Exponent bookkeeping is pure integer arithmetic: the coefficient
    contributes (inv(4a) k^2 mod q) / q for odd q or sqrt(2) times
    (inv(a) k^2 mod 4q) / (4q) for even q, and the drift factor contributes
    (+- n k mod s q) / (s q) with N lam = n / s reduced.  The float shadow of
    each assembled sum is compared against a direct complex summation.
    """
    a, q = params.a, params.q
    if _members((cell.lo + cell.hi) / 2, params) != cell.members:
        raise ValueError(f"corrupt cell {cell}: members do not match its midpoint window")
    order = cyclotomic_order(params)
    n_lam = params.n_lam
    s = n_lam.denominator
    drift_scale = order // (s * q)
    drift_num = n_lam.numerator
    odd = q % 2 == 1
    if odd:
        inv = mod_inverse(4 * a, q)
        coeff_scale = order // q
    else:
        inv = mod_inverse(a, q)
        coeff_scale = order // (4 * q)
    eighth = order // 8

    plus = [0] * order
    minus = [0] * order
    shadow_plus = 0j
    shadow_minus = 0j
    for k in cell.members:
        if odd:
            coeff_num = (inv * k * k) % q
            j_coeff = coeff_num * coeff_scale
            coeff_frac = coeff_num / q
            weight = 1.0
        else:
            coeff_num = (inv * k * k) % (4 * q)
            j_coeff = coeff_num * coeff_scale
            coeff_frac = coeff_num / (4 * q)
            weight = math.sqrt(2.0)
        drift_mod = (drift_num * k) % (s * q)
        j_drift = drift_mod * drift_scale
        drift_frac = drift_mod / (s * q)
        jp = (j_coeff + j_drift) % order
        jm = (j_coeff - j_drift) % order
        if odd:
            plus[jp] += 1
            minus[jm] += 1
        else:
            plus[(jp + eighth) % order] += 1
            plus[(jp + 7 * eighth) % order] += 1
            minus[(jm + eighth) % order] += 1
            minus[(jm + 7 * eighth) % order] += 1
        # shadow from the unscaled fractional exponents, so the comparison
        # exercises the order-M index arithmetic as well
        shadow_plus += weight * cmath.exp(2j * math.pi * (coeff_frac + drift_frac))
        shadow_minus += weight * cmath.exp(2j * math.pi * (coeff_frac - drift_frac))

    s_plus = CycInt(order, tuple(plus))
    s_minus = CycInt(order, tuple(minus))
    if (
        abs(s_plus.to_complex() - shadow_plus) > FLOAT_ZERO_TOL
        or abs(s_minus.to_complex() - shadow_minus) > FLOAT_ZERO_TOL
    ):
        raise ExactFloatMismatch(f"window sum shadow mismatch for {params} on {cell}")
    return s_plus, s_minus


def _checked_is_zero(z: CycInt, params: WellParams, cell: Cell) -> bool:
    exact = z.is_zero()
    if exact != (abs(z.to_complex()) < FLOAT_ZERO_TOL):
        raise ExactFloatMismatch(
            f"exact zero test disagrees with float shadow for {params} on {cell}"
        )
    return exact


@dataclass
class _CellVerdict:
    cell: Cell
    qualifies: bool
    side: str = SIDE_BOTH
    survivor: CycInt | None = None
    survivor_key: tuple[int, ...] = ()


def detect_plateaux(params: WellParams) -> PlateauReport:
    """Classify every cell by the exact criterion and assemble the maximal
    constant-density intervals.

    Adjacent qualifying cells merge only when the vanishing side matches and
    the surviving sums are exactly equal as cyclotomic integers; reported
    intervals are closures, clipped to [0, 1/2].
    """
    lam, q = params.lam, params.q
    threshold = params.threshold
    fragmentation = lam > threshold

    verdicts: list[_CellVerdict] = []
    checks = 0
    for cell in build_cells(params):
        s_plus, s_minus = window_sums(cell, params)
        zp = _checked_is_zero(s_plus, params, cell)
        zm = _checked_is_zero(s_minus, params, cell)
        checks += 2
        if zp and zm:
            zero = CycInt.zero(s_plus.order)
            verdicts.append(_CellVerdict(cell, True, SIDE_BOTH, zero, zero.reduced()))
        elif zp:
            verdicts.append(_CellVerdict(cell, True, SIDE_PLUS, s_minus, s_minus.reduced()))
        elif zm:
            verdicts.append(_CellVerdict(cell, True, SIDE_MINUS, s_plus, s_plus.reduced()))
        else:
            verdicts.append(_CellVerdict(cell, False))

    intervals: list[PlateauInterval] = []
    i = 0
    while i < len(verdicts):
        v = verdicts[i]
        if not v.qualifies:
            i += 1
            continue
        j = i
        while (
            j + 1 < len(verdicts)
            and verdicts[j + 1].qualifies
            and verdicts[j + 1].side == v.side
            and verdicts[j + 1].survivor_key == v.survivor_key
        ):
            j += 1
        lo = verdicts[i].cell.lo
        hi = verdicts[j].cell.hi
        survivor = v.survivor
        if v.side == SIDE_BOTH:
            level = 0.0
            kind = ZERO_LEVEL
        else:
            level = float(lam) / q * abs(survivor.to_complex()) ** 2
            kind = POSITIVE_LEVEL
        intervals.append(PlateauInterval(lo, hi, level, survivor, kind, v.side))
        i = j + 1

    return PlateauReport(params, tuple(intervals), fragmentation, checks)


def plateau_level(interval: PlateauInterval, params: WellParams) -> float:
    """(lam/q) |surviving sum|^2; exactly 0.0 for forbidden zones."""
    if interval.kind == ZERO_LEVEL:
        return 0.0
    return float(params.lam) / params.q * abs(interval.level_exact.to_complex()) ** 2
