"""Physical layer for the suddenly expanded infinite well.

Everything is expressed in the rescaled coordinate x in [0, 1/2] (the well
[0, L] maps to x = x_phys / (2L)) and the dimensionless time t/T, where T is
the revival period.  At a fractional time a/q the wave function collapses to
a q-term combination of translates of the initial profile weighted by
conjugated Gauss sums; an independent truncated eigenseries on the expanded
well serves as the cross-validation oracle.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gauss import CoeffKind, coefficient_c, gauss_sum_direct

TWO_PI = 2.0 * math.pi

# extra eigenmodes beyond the L2-tail requirement, for pointwise accuracy
_POINTWISE_TERMS = 1 << 17


@dataclass(frozen=True)
class WellParams:
    """One experiment: expansion factor lam > 1, initial eigenstate index
    n_state >= 1, and the fractional time tau = a/q in lowest terms."""

    lam: Fraction
    n_state: int
    tau: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "tau", Fraction(self.tau))
        if self.lam <= 1:
            raise ValueError("expansion factor must exceed 1")
        if self.n_state < 1:
            raise ValueError("initial eigenstate index must be >= 1")
        if self.tau < 0:
            raise ValueError("fractional time must be nonnegative")

    @property
    def a(self) -> int:
        return self.tau.numerator

    @property
    def q(self) -> int:
        return self.tau.denominator

    @property
    def n_lam(self) -> Fraction:
        """N * lam, whose reduced denominator drives the cyclotomic order."""
        return self.n_state * self.lam

    @property
    def s(self) -> int:
        return self.n_lam.denominator

    @property
    def threshold(self) -> Fraction:
        """Fragmentation threshold for lam: q for odd q, q/2 for even q."""
        return Fraction(self.q) if self.q % 2 else Fraction(self.q, 2)


def initial_g(x, lam, n_state: int) -> float:
    """Periodized initial profile: sin(2 pi N lam (x - xc)) inside the window
    |x - xc| <= 1/(2 lam) around the nearest integer xc, zero outside.

    Odd and 1-periodic; continuous because the sine vanishes at the window
    edge.
    """
    xf = float(x)
    xc = math.floor(xf + 0.5)
    dx = xf - xc
    if abs(dx) <= 1.0 / (2.0 * float(lam)):
        return math.sin(TWO_PI * n_state * float(lam) * dx)
    return 0.0


def psi_fractional(x, params: WellParams) -> complex:
    """Wave value at the fractional time a/q via the q-translate formula,

        (sqrt(2)/q) * sum_k conj(G(a, k, q)) g(x + k/q).
    """
    a, q = params.a, params.q
    xf = float(x)
    total = 0j
    for k in range(q):
        g = initial_g(xf + k / q, params.lam, params.n_state)
        if g:
            total += gauss_sum_direct(a, k, q).conjugate() * g
    return total * math.sqrt(2.0) / q


def interval_I(x, params: WellParams) -> list[int]:
    """All integers k with |x - k/q| <= 1/(2 lam).

    Endpoint comparisons are exact when x is a Fraction; float x gets the
    float version (adequate for sampling grids kept off the window edges).
    """
    q = params.q
    if isinstance(x, Fraction) or isinstance(x, int):
        half = Fraction(1, 2) / params.lam
        lo = q * (Fraction(x) - half)
        hi = q * (Fraction(x) + half)
        return list(range(math.ceil(lo), math.floor(hi) + 1))
    half = 1.0 / (2.0 * float(params.lam))
    lo = q * (float(x) - half)
    hi = q * (float(x) + half)
    return list(range(math.ceil(lo), math.floor(hi) + 1))


def density_p(x, params: WellParams) -> float:
    """Normalized probability density at x in [0, 1/2]:

        p(x) = (4 lam / q) |sum_{k in I(x)} c(k) sin(2 pi N lam (x - k/q))|^2

    which equals 2 lam |Psi(2 lam x, (a/q) T)|^2.  Terms whose window edge is
    grazed contribute a vanishing sine, so the value is continuous across
    cell boundaries.
    """
    a, q = params.a, params.q
    exact = isinstance(x, Fraction) or isinstance(x, int)
    n_lam_f = float(params.n_lam)
    total = 0j
    for k in interval_I(x, params):
        c = coefficient_c(a, q, k)
        if c.kind is CoeffKind.ZERO:
            continue
        if exact:
            arg = params.n_lam * (Fraction(x) - Fraction(k, q))
            sine = math.sin(TWO_PI * float(arg % 1))
        else:
            sine = math.sin(TWO_PI * n_lam_f * (float(x) - k / q))
        total += c.value * sine
    return 4.0 * float(params.lam) / q * abs(total) ** 2


def well_overlap_coefficient(lam, n_state: int, n: int) -> float:
    """Overlap of the initial state with the n-th eigenmode of the expanded
    well, from the closed-form product-to-sum antiderivative:

        c_n = (2 N lam^{3/2} / pi) (-1)^{N+1} sin(n pi / lam) / (N^2 lam^2 - n^2)

    with the limit value 1/sqrt(lam) when n = N lam exactly.
    """
    lam = Fraction(lam)
    if n < 1:
        raise ValueError("mode index must be >= 1")
    if Fraction(n) == n_state * lam:
        return 1.0 / math.sqrt(float(lam))
    lam_f = float(lam)
    sign = -1.0 if n_state % 2 == 0 else 1.0
    num = math.sin(n * math.pi / lam_f)
    den = (n_state * lam_f) ** 2 - n * n
    return 2.0 * n_state * lam_f ** 1.5 / math.pi * sign * num / den


def _series_cutoff(lam_f: float, n_state: int, tol: float) -> int:
    # L2 tail: sum_{n>M} c_n^2 <= 16 C^2 / (27 M^3) for M >= 2 N lam,
    # kept below tol/2 for headroom.
    big_c = 2.0 * n_state * lam_f ** 1.5 / math.pi
    m_tail = (32.0 * big_c * big_c / (27.0 * 0.5 * tol)) ** (1.0 / 3.0)
    return max(2 * math.ceil(n_state * lam_f) + 2, math.ceil(m_tail))


def series_oracle(x, t_over_T, params: WellParams, tol: float = 1e-10) -> complex:
    """Independent eigenseries evaluation of Psi(x, t) on the physical
    interval [0, lam].

    The cutoff guarantees an L2 tail below tol; on top of that a fixed
    oversampling floor keeps the pointwise truncation error far below the
    cross-validation tolerances.  Rational t/T gets exact integer phase
    reduction mod 1.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    lam_f = float(params.lam)
    n_state = params.n_state
    n_terms = max(_series_cutoff(lam_f, n_state, tol), _POINTWISE_TERMS)

    n = np.arange(1, n_terms + 1, dtype=np.int64)
    nf = n.astype(np.float64)
    sin_over = np.sin(nf * (math.pi / lam_f))
    denom = (n_state * lam_f) ** 2 - nf * nf
    sign = -1.0 if n_state % 2 == 0 else 1.0
    scale = 2.0 * n_state * lam_f ** 1.5 / math.pi * sign
    limit_mask = denom == 0.0
    denom[limit_mask] = 1.0
    coeff = scale * sin_over / denom
    coeff[limit_mask] = 1.0 / math.sqrt(lam_f)

    if isinstance(t_over_T, Fraction):
        num = t_over_T.numerator % t_over_T.denominator
        den = t_over_T.denominator
        phase_frac = ((n * n % den) * num % den).astype(np.float64) / den
    else:
        phase_frac = np.mod(nf * nf * float(t_over_T), 1.0)

    modes = np.sin(nf * (math.pi * float(x) / lam_f))
    terms = coeff * modes * np.exp(-2j * np.pi * phase_frac)
    return complex(math.sqrt(2.0 / lam_f) * terms.sum())


def oracle_coefficient_norm(params: WellParams, tol: float = 1e-10) -> float:
    """sum of c_n^2 up to the oracle cutoff; equals the unit initial norm up
    to the guaranteed tail."""
    n_terms = _series_cutoff(float(params.lam), params.n_state, tol)
    return sum(
        well_overlap_coefficient(params.lam, params.n_state, n) ** 2
        for n in range(1, n_terms + 1)
    )


def _free_field(coefficients: dict[int, complex], x: float, tau: float, lam: float) -> complex:
    total = 0j
    for n, a_n in coefficients.items():
        phase = n * x / (2.0 * lam) - (n * n * tau) % 1.0
        total += a_n * cmath.exp(2j * math.pi * phase)
    return total


def special_time_identity_residual(
    which: str,
    coefficients: dict[int, complex],
    x: float,
    lam: float = 1.0,
) -> float:
    """Residual of the closed-form identity at t = T/2, T/4 or T/8 for a free
    field built from finitely many antisymmetric coefficients (a_{-n} = -a_n).

    which: "half", "quarter" or "eighth".  Returns |LHS - RHS| with both
    sides evaluated directly.
    """
    for n, a_n in coefficients.items():
        if -n not in coefficients or coefficients[-n] != -a_n:
            raise ValueError("coefficients must satisfy a(-n) = -a(n)")

    def F(xx: float, tau: float) -> complex:
        return _free_field(coefficients, xx, tau, lam)

    if which == "half":
        lhs = F(x, 0.5)
        rhs = -F(lam - x, 0.0)
    elif which == "quarter":
        lhs = F(x, 0.25)
        rhs = (1 - 1j) / 2 * F(x, 0.0) - (1 + 1j) / 2 * F(lam - x, 0.0)
    elif which == "eighth":
        lhs = F(x, 0.125)
        w = (1 - 1j) / (2 * math.sqrt(2.0))
        rhs = (
            w * F(x, 0.0)
            + 0.5 * F(x + lam / 2.0, 0.0)
            + w * F(lam - x, 0.0)
            - 0.5 * F(lam / 2.0 - x, 0.0)
        )
    else:
        raise ValueError(f"unknown identity {which!r}")
    return abs(lhs - rhs)
